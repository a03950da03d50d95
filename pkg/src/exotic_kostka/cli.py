"""Command-line front end: table generation, verification suites, oracle runs.

Subcommands:

  kostka   write the modified Kostka table (P, Lambda) for a rank and family
  green    write the Green-function and IC tables
  verify   run polynomial-identity suites; exit 0 iff all pass
  oracle   run finite-field brute-force cross-checks; exit 0 iff all agree

Output is deterministic: identical arguments produce byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import export
from .errors import BudgetExceeded
from .characters import character_table
from .fake_degrees import fake_degree, omega_matrix, omega_via_torus, reflection_count
from .green import (
    green_table,
    ic_table,
    springer_dimension_check,
    verify_orthogonality_exotic,
    verify_orthogonality_symmetric,
)
from .oracle import (
    DEFAULT_BUDGET,
    enumerate_exotic_cone,
    full_space_orbit_count,
    orbit_decompose,
    setup_symplectic,
    slice_check,
    split_green_count,
)
from .partitions import bipartitions_of, modified_kostka_charge, phi_count
from .polynomials import Poly
from .report import Report
from .solver import evenness_check, modified_kostka


def _emit(text, out_path):
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _family_r(family):
    return 2 if family == "exotic" else 1


def cmd_kostka(args):
    sol = modified_kostka(args.n, _family_r(args.family))
    if args.format == "json":
        _emit(export.to_json(export.kostka_payload(sol)), args.out)
    elif args.format == "csv":
        _emit(export.table_csv(sol.labels, sol.labels, sol.P.rows), args.out)
    else:
        _emit(export.table_latex(sol.labels, sol.labels, sol.P.rows, var="t"), args.out)
    return 0


def cmd_green(args):
    gt = green_table(args.family, args.n)
    ict = ic_table(args.family, args.n)
    if args.format == "json":
        _emit(export.to_json(export.green_payload(gt, ict)), args.out)
    elif args.format == "csv":
        _emit(export.table_csv(gt.rows, gt.cols, gt.entries), args.out)
    else:
        _emit(export.table_latex(gt.rows, gt.cols, gt.entries,
                                 var="q", sign_exponent=gt.sign_exponent), args.out)
    return 0


def _verify_fakedeg(n):
    report = Report(f"fake-degrees n={n}")
    for r in (1, 2):
        kind = "Bn" if r == 2 else "Sn"
        table = character_table(kind, n)
        N = reflection_count(n, r)
        from .characters import sign_value
        triv = [1] * len(table.classes)
        sgn = [sign_value(c) for c in table.classes]
        report.add(f"r={r}: R(trivial) = 1", fake_degree(kind, n, triv) == Poly((1,)))
        report.add(f"r={r}: R(sign) = t^N", fake_degree(kind, n, sgn) == Poly.monomial(N))
        ok_deg = ok_coeff = True
        for i, ir in enumerate(table.irreps):
            R = fake_degree(kind, n, table.values[i])
            if R(1) != table.values[i][0]:
                ok_deg = False
            if not (R.is_integral() and all(c >= 0 for c in R.coeffs)):
                ok_coeff = False
        report.add(f"r={r}: R(chi)(1) = degree(chi)", ok_deg)
        report.add(f"r={r}: R(chi) has nonnegative integer coefficients", ok_coeff)
        om = omega_matrix(n, r)
        ok_torus = True
        for q in (2, 3, 5, 7):
            labs, numeric = omega_via_torus(n, r, q)
            for i in range(len(labs)):
                for j in range(len(labs)):
                    if numeric[i][j] != om.entries[i][j](q):
                        ok_torus = False
        report.add(f"r={r}: torus-order route matches Omega at q in {{2,3,5,7}}", ok_torus)
    return report


def _verify_charge(n):
    report = Report(f"charge-oracle n={n}")
    sol = modified_kostka(n, 1)
    ok = True
    for lam in sol.labels:
        for mu in sol.labels:
            if sol.P.entry(lam, mu) != modified_kostka_charge(lam, mu):
                ok = False
                report.add(f"mismatch at ({lam}, {mu})", False)
    report.add("solver matches the charge-statistic oracle", ok)
    return report


def _verify_evenness(n):
    report = Report(f"evenness n={n}")
    sol = modified_kostka(n, 2)
    report.add("t^-a(lam) Ktilde in Z[t^2] with nonnegative coefficients",
               evenness_check(sol)
               and all(c >= 0 for row in sol.P.rows for e in row for c in e.coeffs))
    return report


def cmd_omega(args):
    om = omega_matrix(args.n, _family_r(args.family))
    if args.format == "json":
        _emit(export.to_json(export.omega_payload(om)), args.out)
    elif args.format == "csv":
        _emit(export.table_csv(om.labels, om.labels, om.entries), args.out)
    else:
        _emit(export.table_latex(om.labels, om.labels, om.entries, var="t"), args.out)
    return 0


def cmd_chartable(args):
    kind = "Bn" if args.family == "exotic" else "Sn"
    table = character_table(kind, args.n)
    _emit(export.to_json(export.char_table_payload(table)), args.out)
    return 0


def cmd_verify(args):
    suites = {
        "orthogonality": lambda n: (verify_orthogonality_exotic(n, strict=False)
                                    .merged(verify_orthogonality_symmetric(n, strict=False))),
        "evenness": _verify_evenness,
        "charge": _verify_charge,
        "springer": lambda n: springer_dimension_check(n, strict=False),
        "fakedeg": _verify_fakedeg,
    }
    selected = list(suites) if args.suite == "all" else [args.suite]
    combined = Report(f"verify n={args.n} suite={args.suite}")
    for name in selected:
        combined = combined.merged(suites[name](args.n))
    combined.title = f"verify n={args.n} suite={args.suite}"
    if args.format == "json":
        _emit(export.to_json(combined.to_payload()), args.out)
    else:
        _emit(combined.summary() + "\n", args.out)
    return 0 if combined.passed else 1


def cmd_oracle(args):
    report = Report(f"oracle n={args.n} q={args.q} suite={args.suite}")
    census = None
    ctx = None
    try:
        need_points = args.suite in ("all", "orbits", "green")
        if need_points:
            ctx = setup_symplectic(args.n, args.q)
            points = enumerate_exotic_cone(ctx, budget=args.budget)
            census = orbit_decompose(ctx, points)
            sol = modified_kostka(args.n, 2)
            if args.suite in ("all", "orbits"):
                report.add("orbit count equals the number of bipartitions",
                           len(census.orbits) == len(bipartitions_of(args.n)))
                ok = all(size == sol.xi(lab)(args.q) for lab, size, _ in census.orbits)
                report.add("orbit sizes equal the Lambda polynomials at q", ok)
                report.add("orbit sizes sum to the point count",
                           census.total == len(points))
            if args.suite in ("all", "green"):
                table = character_table("Bn", args.n)
                ok = True
                for lab, _, rep in census.orbits:
                    expect = sum(table.degrees()[i] * sol.P.entry(L, lab)(args.q)
                                 for i, L in enumerate(sol.labels))
                    if split_green_count(ctx, rep) != expect:
                        ok = False
                        report.add(f"split Green count at {lab}", False)
                report.add("flag counts match the identity-class Green column", ok)
        if args.suite in ("all", "phi"):
            ctx = setup_symplectic(args.n, args.q)
            count = full_space_orbit_count(ctx, budget=args.budget)
            report.add("full-space orbit count equals the weighted-function count",
                       count == phi_count(args.n, args.q))
        if args.suite in ("all", "slice"):
            ok = True
            for b in bipartitions_of(args.n):
                sub = slice_check(b, strict=False)
                if not sub.passed:
                    ok = False
                    report.add(f"slice decomposition at {b}", False)
            report.add("slice decompositions verified", ok)
    except BudgetExceeded as exc:
        report.add("budget", False, str(exc))
    if args.format == "json":
        payload = report.to_payload()
        if census is not None:
            payload["census"] = export.census_payload(census, ctx)
        _emit(export.to_json(payload), args.out)
    else:
        _emit(report.summary() + "\n", args.out)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="exokostka",
        description="Exact Kostka polynomials, Green tables, and finite-field checks "
                    "for the exotic nilpotent cone")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, min_n=0):
        p.add_argument("--n", type=int, required=True, help="rank")
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("kostka", help="modified Kostka table")
    common(p)
    p.add_argument("--family", choices=("exotic", "symmetric"), default="exotic")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("green", help="Green-function and IC tables")
    common(p)
    p.add_argument("--family", choices=("exotic", "symmetric"), default="exotic")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("omega", help="dump the Omega matrix for inspection")
    common(p)
    p.add_argument("--family", choices=("exotic", "symmetric"), default="exotic")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("chartable", help="dump a character table as JSON")
    common(p)
    p.add_argument("--family", choices=("exotic", "symmetric"), default="exotic")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("verify", help="polynomial identity suites")
    common(p)
    p.add_argument("--suite",
                   choices=("orthogonality", "evenness", "charge", "springer",
                            "fakedeg", "all"),
                   default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="finite-field brute-force checks")
    common(p)
    p.add_argument("--q", type=int, required=True, help="odd prime field size")
    p.add_argument("--suite", choices=("orbits", "green", "slice", "phi", "all"),
                   default="all")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="state-space size cap")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("green",) and args.n < 1:
        parser.error("green requires --n >= 1")
    if args.n < 0:
        parser.error("--n must be >= 0")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
