"""Deterministic text/JSON/CSV rendering helpers.

All real numbers print through fmt9 (printf %.9g, round-half-even), so
identical inputs always produce byte-identical output.  Error bounds are
rounded UP to the nearest float before printing: a displayed bound never
understates the true one.
"""

import csv
import io
import json
import math
from fractions import Fraction

SCHEMA_VERSION = 1


def fmt9(x) -> str:
    """Format a real at 9 significant digits."""
    return "%.9g" % float(x)


def float9(x) -> float:
    """Canonical float carrying exactly the 9 displayed digits."""
    return float(fmt9(x))


def float_up(x: Fraction) -> float:
    """Smallest float >= x (for error bounds)."""
    f = float(x)
    if Fraction(f) < x:
        f = math.nextafter(f, math.inf)
    return f


def bound9(x: Fraction | None) -> float | None:
    """Conservative 9-digit rendering of an error bound."""
    if x is None:
        return None
    f = float_up(x)
    out = float9(f)
    return out if out >= f else float9(math.nextafter(f, math.inf))


def profile_text(profile) -> str:
    return "<" + ",".join(str(h) for h in profile) + ">"


def profile_csv(profile) -> str:
    return ",".join(str(h) for h in profile)


def json_dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def csv_table(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC 4180 quoting and CRLF line endings
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def text_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip(),
        "  ".join("-" * widths[i] for i in range(len(header))).rstrip(),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _column(x: Fraction, width: int) -> int:
    return min(width - 1, int(x * width))


def _segment_bar(points, labels, width: int) -> list[str]:
    """A |----| bar over [0,1) plus a label line per segment."""
    bar = ["-"] * width
    for pt in points:
        bar[_column(pt, width)] = "|"
    label_line = [" "] * width
    bounds = list(points) + [Fraction(1)]
    for g, lab in enumerate(labels):
        start = _column(bounds[g], width) + 1
        end = _column(bounds[g + 1], width) if g + 1 < len(bounds) else width
        room = max(0, end - start)
        text = lab[:room]
        label_line[start : start + len(text)] = text
    return ["".join(bar) + "|", "".join(label_line).rstrip()]


def interval_diagram(table, freq_table=None, width: int = 72) -> str:
    """ASCII rendering of the rotation-interval picture.

    Top panel: the m+1 factor intervals with their defining points
    {-j*theta}.  Bottom panel (when a composition is given): the merged
    k+1 variety intervals.  The shading row marks I_a = [0, 1-theta) with
    '#'; the rest of the circle is I_b.
    """
    theta_mid, _ = table.theta.approx(64)
    one_minus = 1 - theta_mid
    lines = [
        f"slope {table.theta.describe()}  theta ~ {fmt9(theta_mid)}",
        f"I_a = [0, {fmt9(one_minus)})  ->  a      I_b = [{fmt9(one_minus)}, 1)  ->  b",
        "",
        f"factors of length {table.m} (interval order = lexicographic order)",
    ]
    lines += _segment_bar(table.points, list(table.factors), width)
    shade = "".join(
        "#" if Fraction(2 * c + 1, 2 * width) < one_minus else "." for c in range(width)
    )
    lines.append(shade + "  (# = I_a, . = I_b)")
    lines.append("")
    for g, (pt, j, fac, ln) in enumerate(
        zip(table.points, table.orders, table.factors, table.lengths)
    ):
        lines.append(
            f"  q_{g} = {fmt9(pt):>12}  (j={j})  {fac}  length {fmt9(ln)}"
        )
    if freq_table is not None:
        lines.append("")
        lines.append(
            f"varieties under partition {','.join(map(str, freq_table.comp.parts))}"
        )
        labels = [profile_text(e.profile) for e in freq_table.entries]
        lines += _segment_bar(freq_table.points, labels, width)
        for t, (pt, entry) in enumerate(zip(freq_table.points, freq_table.entries)):
            lines.append(
                f"  q'_{t} = {fmt9(pt):>12}  {profile_text(entry.profile)}"
                f"  {{{','.join(entry.members)}}}  frequency {fmt9(entry.frequency)}"
            )
    return "\n".join(lines) + "\n"
