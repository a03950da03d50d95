"""Serialization: canonical JSON payloads, CSV and LaTeX projections.

Polynomials serialize as coefficient arrays in ascending degree, each
coefficient a decimal string (or "p/q" for a non-integer rational), so
any JSON reader round-trips them exactly.  Partitions serialize as
integer arrays, bipartitions and class labels as two-element arrays of
partitions; the empty partition is [].  JSON is the canonical format,
CSV and LaTeX are projections of it.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .partitions import a_value, n_value
from .polynomials import Poly


def coeff_strings(poly):
    if not poly.coeffs:
        return ["0"]
    return [str(c) for c in poly.coeffs]


def poly_from_strings(strings):
    return Poly([Fraction(s) for s in strings])


def label_json(label):
    if label and isinstance(label[0], tuple) or label == ((), ()):
        return [list(label[0]), list(label[1])]
    return list(label)


def label_str(label):
    def part_str(p):
        return ".".join(str(x) for x in p) if p else "-"

    if label and isinstance(label[0], tuple) or label == ((), ()):
        return f"{part_str(label[0])};{part_str(label[1])}"
    return part_str(label)


def label_from_str(text):
    def part_from(s):
        return () if s == "-" else tuple(int(x) for x in s.split("."))

    if ";" in text:
        left, right = text.split(";")
        return (part_from(left), part_from(right))
    return part_from(text)


def table_grid(rows):
    return [[coeff_strings(e) for e in row] for row in rows]


# -- payload builders --------------------------------------------------------


def _meta(rank, family, **extra):
    meta = {"rank": rank, "family": family, "version": __version__}
    meta.update(extra)
    return meta


def kostka_payload(solution):
    family = "exotic" if solution.r == 2 else "symmetric"
    stat = a_value if solution.r == 2 else n_value
    return {
        "meta": _meta(
            solution.rank,
            family,
            order=[label_str(lab) for lab in solution.refinement_used],
            diagonal_exponents=[stat(lab) for lab in solution.labels],
        ),
        "labels": [label_json(lab) for lab in solution.labels],
        "tables": {
            "P": table_grid(solution.P.rows),
            "Lambda": [table_grid([list(solution.Lambda)])[0]],
        },
    }


def green_payload(table, ic):
    return {
        "meta": _meta(
            table.n,
            table.family,
            sign_exponent=table.sign_exponent,
            order=[label_str(lab) for lab in table.cols],
        ),
        "labels": [label_json(lab) for lab in table.cols],
        "row_labels": [label_json(lab) for lab in table.rows],
        "tables": {
            "green_unsigned": table_grid(table.entries),
            "ic": table_grid(ic.entries),
        },
    }


def omega_payload(om):
    return {
        "meta": _meta(om.n, "exotic" if om.r == 2 else "symmetric",
                      reflection_count=om.reflection_count),
        "labels": [label_json(lab) for lab in om.labels],
        "tables": {"Omega": table_grid(om.entries)},
    }


def char_table_payload(table):
    return {
        "meta": {"rank": table.n, "kind": table.kind, "order": table.order,
                 "version": __version__},
        "classes": [label_json(lab) for lab in table.classes],
        "class_sizes": list(table.sizes),
        "irreps": [label_json(lab) for lab in table.irreps],
        "values": [list(row) for row in table.values],
    }


def census_payload(census, ctx):
    return {
        "meta": {"rank": ctx.n, "q": ctx.q, "version": __version__},
        "orbits": [
            {
                "label": label_json(lab),
                "size": size,
                "representative": {"x": [list(r) for r in rep[0]], "v": list(rep[1])},
            }
            for lab, size, rep in census.orbits
        ],
        "total": census.total,
    }


def to_json(payload):
    return json.dumps(payload, indent=2) + "\n"


# -- CSV ---------------------------------------------------------------------


def table_csv(row_labels, col_labels, rows):
    """One table as CSV; polynomial cells are space-joined coefficient strings."""
    lines = ["label," + ",".join(label_str(c) for c in col_labels)]
    for lab, row in zip(row_labels, rows):
        cells = [" ".join(coeff_strings(e)) for e in row]
        lines.append(label_str(lab) + "," + ",".join(cells))
    return "\n".join(lines) + "\n"


def parse_table_csv(text):
    lines = [ln for ln in text.strip().split("\n") if ln]
    header = lines[0].split(",")
    col_labels = tuple(label_from_str(s) for s in header[1:])
    row_labels = []
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        row_labels.append(label_from_str(cells[0]))
        rows.append(tuple(poly_from_strings(cell.split(" ")) for cell in cells[1:]))
    return tuple(row_labels), col_labels, tuple(rows)


# -- LaTeX -------------------------------------------------------------------


def poly_latex(poly, var="q"):
    if not poly.coeffs:
        return "0"
    parts = []
    for k in range(poly.degree, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        if k == 0:
            term = str(c)
        else:
            power = var if k == 1 else f"{var}^{{{k}}}"
            if c == 1:
                term = power
            elif c == -1:
                term = f"-{power}"
            else:
                term = f"{c}{power}"
        parts.append(term)
    out = " + ".join(parts).replace("+ -", "- ")
    return out


def table_latex(row_labels, col_labels, rows, var="q", sign_exponent=0):
    """Tabular rendering; a global sign (-1)^sign_exponent is applied to entries."""
    sign = -1 if sign_exponent % 2 else 1
    cols = "l|" + "c" * len(col_labels)
    lines = [f"\\begin{{tabular}}{{{cols}}}"]
    lines.append(" & " + " & ".join(f"${label_str(c)}$" for c in col_labels) + " \\\\")
    lines.append("\\hline")
    for lab, row in zip(row_labels, rows):
        cells = [f"${poly_latex(sign * e, var)}$" for e in row]
        lines.append(f"${label_str(lab)}$ & " + " & ".join(cells) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"
