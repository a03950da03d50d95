"""The triangular factorization and its cross-checks."""

import pytest

from exotic_kostka.errors import InconsistentSystem, NotPolynomial, ZeroDiagonal
from exotic_kostka.fake_degrees import OmegaMatrix, omega_matrix
from exotic_kostka.partitions import (
    a_value,
    exotic_le,
    modified_kostka_charge,
    n_value,
)
from exotic_kostka.polynomials import ONE, Poly, T, triple_product, PolyMatrix
from exotic_kostka.solver import (
    evenness_check,
    is_even_shifted,
    modified_kostka,
    orbit_size_polys,
    solve,
)


def test_rank_one_exotic_solution():
    sol = modified_kostka(1, 2)
    assert sol.labels == (((), (1,)), ((1,), ()))
    assert sol.P.rows[0] == (T, Poly())
    assert sol.P.rows[1] == (ONE, ONE)
    assert sol.Lambda == (ONE, T**2 - 1)
    assert sol.kostka(((1,), ()), ((), (1,))) == ONE


def test_rank_zero_and_one_symmetric():
    sol0 = modified_kostka(0, 2)
    assert sol0.P.rows == ((ONE,),) and sol0.Lambda == (ONE,)
    sol = modified_kostka(1, 1)
    assert sol.P.rows == ((ONE,),) and sol.Lambda == (ONE,)


def test_rank_two_symmetric_entries():
    sol = modified_kostka(2, 1)
    assert sol.kostka((2,), (1, 1)) == ONE
    assert sol.kostka((1, 1), (1, 1)) == T
    assert sol.Lambda == (ONE, T**2 - 1)


def test_diagonal_entries():
    for n in range(5):
        sol = modified_kostka(n, 2)
        for i, lam in enumerate(sol.labels):
            assert sol.P.rows[i][i] == Poly.monomial(a_value(lam))
    for n in range(6):
        sol = modified_kostka(n, 1)
        for i, lam in enumerate(sol.labels):
            assert sol.P.rows[i][i] == Poly.monomial(n_value(lam))


def test_charge_oracle_equivalence():
    for n in range(7):
        sol = modified_kostka(n, 1)
        for lam in sol.labels:
            for mu in sol.labels:
                assert sol.P.entry(lam, mu) == modified_kostka_charge(lam, mu)


def test_zero_pattern_matches_order():
    for n in range(5):
        sol = modified_kostka(n, 2)
        for i, lam in enumerate(sol.labels):
            for j, mu in enumerate(sol.labels):
                entry = sol.P.rows[i][j]
                assert bool(entry) == exotic_le(mu, lam)


def test_coefficients_nonnegative_integers():
    for n in range(5):
        sol = modified_kostka(n, 2)
        for row in sol.P.rows:
            for entry in row:
                assert entry.is_integral()
                assert all(c >= 0 for c in entry.coeffs)


def test_product_identity_via_matrix_product():
    for n in range(4):
        sol = modified_kostka(n, 2)
        omega = omega_matrix(n, 2)
        lam_matrix = PolyMatrix.diagonal(sol.labels, sol.Lambda)
        product = triple_product(sol.P, lam_matrix, sol.P.transpose())
        for i, li in enumerate(sol.labels):
            for j, lj in enumerate(sol.labels):
                assert product.rows[i][j] == omega.entry(li, lj)


def test_refinement_independence():
    # a different linear extension produces the same solution
    for n in range(5):
        omega = omega_matrix(n, 2)
        default = modified_kostka(n, 2)
        alt = []
        remaining = list(omega.labels)
        while remaining:
            minimal = [lab for lab in remaining
                       if not any(exotic_le(other, lab) and other != lab
                                  for other in remaining)]
            pick = max(minimal)  # different tie-break than the canonical order
            alt.append(pick)
            remaining.remove(pick)
        sol = solve(omega, exotic_le, lambda lab: Poly.monomial(a_value(lab)),
                    refinement=alt)
        for lam in omega.labels:
            assert sol.xi(lam) == default.xi(lam)
            for mu in omega.labels:
                assert sol.P.entry(lam, mu) == default.P.entry(lam, mu)


def test_invalid_refinement_rejected():
    omega = omega_matrix(2, 2)
    bad = list(reversed(omega.labels))
    with pytest.raises(ValueError):
        solve(omega, exotic_le, lambda lab: Poly.monomial(a_value(lab)), refinement=bad)


def test_corrupted_omega_is_detected():
    om = omega_matrix(2, 2)
    entries = [list(row) for row in om.entries]
    # poison an incomparable pair: ((1,1); -) vs (-; (2,))
    i = om.labels.index(((1, 1), ()))
    j = om.labels.index(((), (2,)))
    entries[i][j] = entries[i][j] + ONE
    entries[j][i] = entries[i][j]
    bad = OmegaMatrix(2, 2, om.labels, tuple(tuple(r) for r in entries))
    with pytest.raises((InconsistentSystem, NotPolynomial)):
        solve(bad, exotic_le, lambda lab: Poly.monomial(a_value(lab)))


def test_zero_omega_gives_zero_diagonal():
    om = omega_matrix(1, 2)
    zero = OmegaMatrix(1, 2, om.labels,
                       ((Poly(), Poly()), (Poly(), Poly())))
    with pytest.raises(ZeroDiagonal):
        solve(zero, exotic_le, lambda lab: Poly.monomial(a_value(lab)))


def test_embedded_symmetric_block():
    # orbits with empty first component carry v = 0, so they form the
    # symmetric-space table inside the exotic one: entries pick up t -> t^2
    # and the diagonal shift t^{|mu|}, and the orbit sizes match at q^2
    for n in range(1, 5):
        exo = modified_kostka(n, 2)
        cla = modified_kostka(n, 1)
        for lam in cla.labels:
            for mu in cla.labels:
                assert (exo.P.entry(((), lam), ((), mu))
                        == cla.P.entry(lam, mu).subs_t_squared().shifted(sum(mu)))
            assert exo.xi(((), lam)) == cla.xi(lam).subs_t_squared()


def test_orbit_size_polys():
    sol = modified_kostka(1, 2)
    xs = orbit_size_polys(sol)
    assert xs[((), (1,))] == ONE
    assert xs[((1,), ())] == T**2 - 1
    for n in range(4):
        sol = modified_kostka(n, 2)
        total = Poly()
        for lab, xi in orbit_size_polys(sol).items():
            assert xi.degree == 2 * n * n - 2 * a_value(lab)
            total = total + xi
        assert total == Poly.monomial(2 * n * n)


def test_evenness():
    assert is_even_shifted(T**3 + T, 1)
    assert not is_even_shifted(T**2 + T, 2)
    assert not is_even_shifted(T**4, 5)
    for n in range(5):
        assert evenness_check(modified_kostka(n, 2))
    with pytest.raises(ValueError):
        evenness_check(modified_kostka(2, 1))
