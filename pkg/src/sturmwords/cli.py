"""Command-line front end.

Subcommands: christoffel, varieties, frequencies, diagram, check.
Formats: text (default), json, csv; all output is deterministic.
Exit codes: 0 success, 1 check/property failure, 2 input validation,
3 internal consistency violation.
"""

import argparse
import sys

from . import checks
from .christoffel import bwt_matrix, circular_factors, lower_christoffel, make_params, upper_christoffel
from .errors import ConsistencyError, SturmwordsError
from .partitioned import classify_varieties, compose, multiplicities_formula, partition_factor
from .render import (
    SCHEMA_VERSION,
    bound9,
    csv_table,
    float9,
    fmt9,
    interval_diagram,
    json_dumps,
    profile_csv,
    profile_text,
    text_table,
)
from .slopes import parse_slope
from .sturmian import (
    empirical_frequencies,
    factor_interval_table,
    mechanical_prefix,
    partitioned_frequencies,
)
from .words import validate_word


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SturmwordsError(f"cannot parse composition {text!r}") from exc


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        p_s, _, q_s = text.partition("/")
        return int(p_s), int(q_s)
    except ValueError as exc:
        raise SturmwordsError(f"cannot parse slope pair {text!r} (want P/Q)") from exc


def _check_m(m_arg, comp):
    if m_arg is not None and m_arg != comp.m:
        raise SturmwordsError(
            f"-m {m_arg} disagrees with composition sum {comp.m}"
        )


def cmd_christoffel(args):
    word = (
        lower_christoffel(args.p, args.q)
        if args.variant == "lower"
        else upper_christoffel(args.p, args.q)
    )
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "christoffel",
        "p": args.p,
        "q": args.q,
        "n": args.p + args.q,
        "variant": args.variant,
        "word": word,
    }
    if args.bwt:
        rows = bwt_matrix(word).rows
        doc["bwt"] = list(rows)
        text = "\n".join(rows) + "\n"
        csv_text = csv_table(["row", "word"], [[i, r] for i, r in enumerate(rows)])
    else:
        text = word + "\n"
        csv_text = csv_table(
            ["p", "q", "n", "variant", "word"],
            [[args.p, args.q, args.p + args.q, args.variant, word]],
        )
    return 0, doc, text, csv_text


def _variety_rows(table):
    rows = []
    for e in table.entries:
        rows.append(
            [
                profile_text(e.profile),
                str(e.multiplicity),
                str(partition_factor(e.representative, table.comp)),
                "" if e.first_row is None else str(e.first_row),
            ]
        )
    return rows


def cmd_mechanical(args):
    theta = parse_slope(args.slope)
    word = mechanical_prefix(theta, args.length, cap_bits=args.max_bits)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "mechanical",
        "theta": {"input": args.slope, "value": float9(theta.approx(64)[0])},
        "length": args.length,
        "word": word,
    }
    csv_text = csv_table(["slope", "length", "word"], [[args.slope, args.length, word]])
    return 0, doc, word + "\n", csv_text


def cmd_varieties(args):
    comp = compose(_parse_parts(args.partition))
    _check_m(args.m, comp)
    if args.word is not None:
        word = validate_word(args.word)
        table = classify_varieties(circular_factors(word, comp.m), comp)
        source = {"word": word}
    else:
        p, q = _parse_pair(args.slope)
        params = make_params(p, q)
        table = multiplicities_formula(params, comp)
        brute = classify_varieties(
            circular_factors(lower_christoffel(p, q), comp.m), comp
        )
        if table.signature() != brute.signature():
            raise ConsistencyError(
                f"formula and brute-force classification disagree for "
                f"p={p} q={q} partition={comp.parts}"
            )
        source = {"p": p, "q": q}
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "varieties",
        "source": source,
        "m": comp.m,
        "composition": list(comp.parts),
        "total": table.total,
        "entries": [
            {
                "profile": list(e.profile),
                "multiplicity": e.multiplicity,
                "representative": e.representative,
                "first_row": e.first_row,
            }
            for e in table.entries
        ],
    }
    if table.residues is not None:
        doc["residues"] = list(table.residues)
    header = ["profile", "multiplicity", "representative", "first_row"]
    text = text_table(header, _variety_rows(table))
    csv_text = csv_table(
        header,
        [
            [
                profile_csv(e.profile),
                e.multiplicity,
                e.representative,
                "" if e.first_row is None else e.first_row,
            ]
            for e in table.entries
        ],
    )
    return 0, doc, text, csv_text


def cmd_frequencies(args):
    comp = compose(_parse_parts(args.partition))
    _check_m(args.m, comp)
    theta = parse_slope(args.slope)
    exact = partitioned_frequencies(theta, comp, cap_bits=args.max_bits)
    empirical = None
    if args.empirical is not None:
        empirical = empirical_frequencies(
            theta, comp, args.empirical, cap_bits=args.max_bits
        ).by_profile()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "frequencies",
        "theta": {"input": args.slope, "value": float9(theta.approx(64)[0])},
        "m": comp.m,
        "composition": list(comp.parts),
        "error_bound": bound9(exact.err),
        "points": [float9(p) for p in exact.points],
        "entries": [],
    }
    header = ["profile", "members", "frequency", "error_bound"]
    if empirical is not None:
        header += ["empirical", "deviation"]
    rows = []
    csv_rows = []
    for e in exact.entries:
        entry = {
            "profile": list(e.profile),
            "members": list(e.members),
            "frequency": float9(e.frequency),
        }
        row = [
            profile_text(e.profile),
            ",".join(str(partition_factor(f, comp)) for f in e.members),
            fmt9(e.frequency),
            fmt9(bound9(exact.err)),
        ]
        csv_row = [
            profile_csv(e.profile),
            ",".join(e.members),
            fmt9(e.frequency),
            fmt9(bound9(exact.err)),
        ]
        if empirical is not None:
            emp = empirical.get(e.profile)
            emp_f = float9(emp.frequency) if emp is not None else None
            dev = (
                float9(abs(emp.frequency - e.frequency)) if emp is not None else None
            )
            entry["empirical"] = emp_f
            entry["deviation"] = dev
            row += [fmt9(emp_f) if emp_f is not None else "-",
                    fmt9(dev) if dev is not None else "-"]
            csv_row += [fmt9(emp_f) if emp_f is not None else "",
                        fmt9(dev) if dev is not None else ""]
        doc["entries"].append(entry)
        rows.append(row)
        csv_rows.append(csv_row)
    text = text_table(header, rows)
    csv_text = csv_table(header, csv_rows)
    return 0, doc, text, csv_text


def cmd_diagram(args):
    theta = parse_slope(args.slope)
    comp = compose(_parse_parts(args.partition)) if args.partition else None
    m = args.m if args.m is not None else (comp.m if comp else None)
    if m is None:
        raise SturmwordsError("diagram needs -m or -P")
    if comp is not None and comp.m != m:
        raise SturmwordsError(f"-m {m} disagrees with composition sum {comp.m}")
    table = factor_interval_table(theta, m, cap_bits=args.max_bits)
    freq = (
        partitioned_frequencies(theta, comp, cap_bits=args.max_bits)
        if comp is not None
        else None
    )
    text = interval_diagram(table, freq, width=args.width)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "diagram",
        "theta": {"input": args.slope, "value": float9(theta.approx(64)[0])},
        "m": m,
        "error_bound": bound9(table.err),
        "intervals": [
            {
                "left": float9(p),
                "j": j,
                "factor": f,
                "length": float9(ln),
            }
            for p, j, f, ln in zip(table.points, table.orders, table.factors, table.lengths)
        ],
    }
    csv_rows = [
        [float9(p), j, f, fmt9(ln)]
        for p, j, f, ln in zip(table.points, table.orders, table.factors, table.lengths)
    ]
    if freq is not None:
        doc["composition"] = list(comp.parts)
        doc["varieties"] = [
            {
                "left": float9(p),
                "profile": list(e.profile),
                "members": list(e.members),
                "frequency": float9(e.frequency),
            }
            for p, e in zip(freq.points, freq.entries)
        ]
    csv_text = csv_table(["left", "j", "factor", "length"], csv_rows)
    return 0, doc, text, csv_text


def cmd_check(args):
    results = []
    if args.scope in ("christoffel", "all"):
        cfg = checks.ChristoffelCheckConfig(
            max_n=args.max_n if args.max_n is not None else 40,
            max_m=args.max_m if args.max_m is not None else 10,
            br_max_n=max(args.max_n if args.max_n is not None else 40, 120),
            seed=args.seed,
        )
        results += checks.run_christoffel_checks(cfg)
    if args.scope in ("sturmian", "all"):
        cfg = checks.SturmianCheckConfig(
            max_m=args.max_m if args.max_m is not None else 30,
            prefix_len=args.prefix_len,
        )
        results += checks.run_sturmian_checks(cfg)
    ok = all(r.ok for r in results)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "scope": args.scope,
        "ok": ok,
        "results": [
            {
                "name": r.name,
                "ok": r.ok,
                "detail": r.detail,
                "counterexample": r.counterexample,
            }
            for r in results
        ],
    }
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status}  {r.name}  {r.detail}"
        if r.counterexample:
            line += f"  [{r.counterexample}]"
        lines.append(line)
    text = "\n".join(lines) + "\n"
    csv_text = csv_table(
        ["status", "name", "detail", "counterexample"],
        [
            ["PASS" if r.ok else "FAIL", r.name, r.detail, r.counterexample or ""]
            for r in results
        ],
    )
    return (0 if ok else 1), doc, text, csv_text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", "--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    ap = argparse.ArgumentParser(
        prog="sturmwords",
        description="Christoffel/Sturmian words, partitioned-factor varieties, "
        "multiplicities, and exact frequencies.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_chr = sub.add_parser("christoffel", parents=[common],
                           help="generate a Christoffel word (optionally its conjugate matrix)")
    p_chr.add_argument("p", type=int, help="number of letters a")
    p_chr.add_argument("q", type=int, help="number of letters b")
    p_chr.add_argument("--variant", choices=("lower", "upper"), default="lower")
    p_chr.add_argument("--bwt", action="store_true",
                       help="print the sorted conjugate matrix")
    p_chr.set_defaults(func=cmd_christoffel)

    p_mec = sub.add_parser("mechanical", parents=[common],
                           help="prefix of the mechanical word of a slope")
    p_mec.add_argument("--slope", required=True,
                       help="theta: named constant, decimal@errbound, or exact q/n")
    p_mec.add_argument("-N", "--length", type=int, required=True,
                       help="number of letters")
    p_mec.add_argument("--max-bits", type=int, default=None)
    p_mec.set_defaults(func=cmd_mechanical)

    p_var = sub.add_parser("varieties", parents=[common],
                           help="variety table of circular partitioned factors")
    group = p_var.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="explicit word over {a,b}")
    group.add_argument("--slope", help="Christoffel pair P/Q (letter counts)")
    p_var.add_argument("-m", type=int, default=None, help="factor length (must equal the composition sum)")
    p_var.add_argument("-P", "--partition", required=True,
                       help="composition, e.g. 1,2,1")
    p_var.set_defaults(func=cmd_varieties)

    p_frq = sub.add_parser("frequencies", parents=[common],
                           help="exact (and optionally empirical) variety frequencies")
    p_frq.add_argument("--slope", required=True,
                       help="theta: named constant, decimal@errbound, or exact p/q")
    p_frq.add_argument("-m", type=int, default=None)
    p_frq.add_argument("-P", "--partition", required=True)
    p_frq.add_argument("--empirical", type=int, default=None, metavar="N",
                       help="also count varieties over an N-letter prefix")
    p_frq.add_argument("--max-bits", type=int, default=None,
                       help="precision cap for certified arithmetic")
    p_frq.set_defaults(func=cmd_frequencies)

    p_dia = sub.add_parser("diagram", parents=[common],
                           help="ASCII picture of the rotation intervals")
    p_dia.add_argument("--slope", required=True)
    p_dia.add_argument("-m", type=int, default=None)
    p_dia.add_argument("-P", "--partition", default=None)
    p_dia.add_argument("--width", type=int, default=72)
    p_dia.add_argument("--max-bits", type=int, default=None)
    p_dia.set_defaults(func=cmd_diagram)

    p_chk = sub.add_parser("check", parents=[common],
                           help="run the property-check suites")
    p_chk.add_argument("scope", nargs="?", choices=("christoffel", "sturmian", "all"),
                       default="all")
    p_chk.add_argument("--max-n", type=int, default=None,
                       help="slope-length bound for the Christoffel sweeps")
    p_chk.add_argument("--max-m", type=int, default=None,
                       help="factor-length bound")
    p_chk.add_argument("--prefix-len", type=int, default=3000)
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, doc, text, csv_text = args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return 3
    except SturmwordsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        rendered = json_dumps(doc)
    elif args.format == "csv":
        rendered = csv_text
    else:
        rendered = text
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
