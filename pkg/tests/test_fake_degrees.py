"""Fake degrees and the Omega matrices, by both routes."""

import pytest

from exotic_kostka.characters import character_table, sign_value
from exotic_kostka.errors import SingularEvaluation
from exotic_kostka.fake_degrees import (
    coinvariant_degrees_product,
    fake_degree,
    omega_matrix,
    omega_via_torus,
    reflection_count,
)
from exotic_kostka.partitions import a_value
from exotic_kostka.polynomials import ONE, Poly, T


def test_reflection_count():
    assert reflection_count(3, 2) == 9
    assert reflection_count(4, 1) == 6
    assert coinvariant_degrees_product(2, 2) == (T**2 - 1) * (T**4 - 1)


def test_fake_degree_anchors():
    # hand-computed small cases
    assert fake_degree("Bn", 1, [1, -1]) == T          # sign of W_1
    assert fake_degree("Sn", 2, [1, -1]) == T          # sign of S_2
    for r, kind in ((1, "Sn"), (2, "Bn")):
        for n in range(1, 5):
            table = character_table(kind, n)
            assert fake_degree(kind, n, [1] * len(table.classes)) == ONE
            sgn = [sign_value(c) for c in table.classes]
            assert fake_degree(kind, n, sgn) == Poly.monomial(reflection_count(n, r))


def test_fake_degree_of_irreducibles():
    for kind in ("Bn", "Sn"):
        for n in range(1, 5):
            table = character_table(kind, n)
            for i, row in enumerate(table.values):
                R = fake_degree(kind, n, row)
                assert R.is_integral()
                assert all(c >= 0 for c in R.coeffs)
                assert R(1) == row[0]


def test_fake_degree_single_class_traces():
    # Molien: the per-class traces of the coinvariant algebra are polynomials,
    # so every class function yields a polynomial (possibly with fractional
    # coefficients when the input is not a character)
    for kind, n in (("Bn", 2), ("Bn", 3), ("Sn", 4)):
        table = character_table(kind, n)
        for k in range(len(table.classes)):
            delta = [1 if i == k else 0 for i in range(len(table.classes))]
            fake_degree(kind, n, delta)  # must not raise


def test_fake_degree_input_validation():
    with pytest.raises(ValueError):
        fake_degree("Bn", 2, [1, 1])


def test_omega_examples():
    om = omega_matrix(1, 2)
    assert om.labels == (((), (1,)), ((1,), ()))
    assert om.entry(((1,), ()), ((1,), ())) == T**2
    assert om.entry(((), (1,)), ((), (1,))) == T**2
    assert om.entry(((1,), ()), ((), (1,))) == T

    om1 = omega_matrix(1, 1)
    assert om1.labels == ((1,),)
    assert om1.entries[0][0] == ONE

    om21 = omega_matrix(2, 1)
    assert om21.entry((2,), (2,)) == T**2


def test_omega_symmetry_and_coefficients():
    for r in (1, 2):
        for n in range(1, 5):
            om = omega_matrix(n, r)
            m = len(om.labels)
            for i in range(m):
                for j in range(m):
                    assert om.entries[i][j] == om.entries[j][i]
                    assert om.entries[i][j].is_integral()
                    assert all(c >= 0 for c in om.entries[i][j].coeffs)


def test_omega_via_torus_values():
    labels, numeric = omega_via_torus(1, 2, 3)
    assert numeric[0][0] == 9
    assert numeric[0][1] == 3


def test_omega_routes_agree():
    for r in (1, 2):
        for n in range(1, 5):
            om = omega_matrix(n, r)
            for q in (2, 3, 5, 7):
                labels, numeric = omega_via_torus(n, r, q)
                assert labels == om.labels
                for i in range(len(labels)):
                    for j in range(len(labels)):
                        assert numeric[i][j] == om.entries[i][j](q)


def test_omega_singular_evaluation():
    with pytest.raises(SingularEvaluation):
        omega_via_torus(1, 2, 1)


def test_sign_twist_identity():
    # omega(-t) (-1)^{a(lam) + a(mu)} = omega(t)
    for n in range(1, 5):
        om = omega_matrix(n, 2)
        for i, li in enumerate(om.labels):
            for j, lj in enumerate(om.labels):
                entry = om.entries[i][j]
                sign = (-1) ** (a_value(li) + a_value(lj))
                assert sign * entry.subs_neg_t() == entry
