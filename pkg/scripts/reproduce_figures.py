#!/usr/bin/env python3
"""Print the worked examples: the two Christoffel variety tables with
their conjugate matrices, and the slope-log2(3/2) frequency picture."""

from sturmwords import (
    bwt_matrix,
    circular_factors,
    classify_varieties,
    compose,
    factor_interval_table,
    lower_christoffel,
    make_params,
    multiplicities_formula,
    named_slope,
    partitioned_frequencies,
)
from sturmwords.render import fmt9, interval_diagram, profile_text


def christoffel_panel(p, q, parts):
    comp = compose(parts)
    w = lower_christoffel(p, q)
    print(f"lower Christoffel word for (p, q) = ({p}, {q}): {w}")
    table = multiplicities_formula(make_params(p, q), comp)
    rows = bwt_matrix(w).rows
    first_rows = {e.first_row: e for e in table.entries}
    cuts = set(comp.partial_sums[1:-1])
    print(f"conjugate matrix with partition {parts} (columns cut at {sorted(cuts)}):")
    for i, row in enumerate(rows):
        cells = "".join(
            ch + ("|" if j + 1 in cuts and j + 1 < comp.m else "")
            for j, ch in enumerate(row)
        )
        mark = ""
        if i in first_rows:
            e = first_rows[i]
            mark = f"  <- variety {profile_text(e.profile)} x{e.multiplicity}"
        print(f"  row {i}: {cells[: comp.m + comp.k - 1]} | {cells[comp.m + comp.k - 1:]}{mark}")
    print(f"residues {table.residues} -> Pi = {table.multiplicities}")
    brute = classify_varieties(circular_factors(w, comp.m), comp)
    assert brute.signature() == table.signature()
    print("brute-force classification agrees\n")


def sturmian_panel():
    theta = named_slope("log2_3_2")
    comp = compose((1, 3))
    table = factor_interval_table(theta, comp.m)
    freq = partitioned_frequencies(theta, comp)
    print(interval_diagram(table, freq))
    total = sum(e.frequency for e in freq.entries)
    print(f"frequency total: {fmt9(total)} (exact {total})")


if __name__ == "__main__":
    christoffel_panel(5, 2, (1, 2, 1))
    christoffel_panel(5, 3, (1, 1, 1, 1))
    sturmian_panel()
