"""Exact polynomial and rational-function arithmetic."""

import random
from fractions import Fraction

import pytest

from exotic_kostka.errors import DimensionMismatch, DivisionByZero, NotPolynomial
from exotic_kostka.polynomials import (
    ONE,
    Poly,
    PolyMatrix,
    RatFunc,
    T,
    poly_gcd,
    triple_product,
)


def rand_poly(rng, deg=6, frac=False):
    coeffs = []
    for _ in range(rng.randint(0, deg)):
        if frac and rng.random() < 0.3:
            coeffs.append(Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        else:
            coeffs.append(rng.randint(-9, 9))
    return Poly(coeffs)


def test_product_examples():
    assert (T + 1) * (T - 1) == T**2 - 1
    assert Poly() + (T + 5) == T + 5
    assert (T**2 - 1) * (T**2 + 1) == T**4 - 1


def test_substitutions():
    assert (T**2 + T).subs_neg_t() == T**2 - T
    assert (T + 1).subs_t_squared() == T**2 + 1
    assert (T**2 - 1)(3) == 8
    assert (T**2 - 1)(Fraction(1, 2)) == Fraction(-3, 4)


def test_normalization_strips_trailing_zeros():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly((0,)).degree == -1
    assert not Poly((0, 0))
    assert Poly((Fraction(4, 2),)) == Poly((2,))


def test_ring_axioms_randomized():
    rng = random.Random(20260810)
    for _ in range(200):
        a, b, c = (rand_poly(rng, frac=True) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + (-a) == Poly()


def test_t_squared_evaluation_commutes():
    rng = random.Random(7)
    for _ in range(100):
        p = rand_poly(rng, frac=True)
        q = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
        assert p.subs_t_squared()(q) == p(q * q)


def test_division_and_exactness():
    q, r = divmod(T**3 - 1, T - 1)
    assert q == T**2 + T + 1 and not r
    assert (T**2 - 1).div_exact(T + 1) == T - 1
    with pytest.raises(NotPolynomial):
        (T**2 + 1).div_exact(T + 1)
    with pytest.raises(DivisionByZero):
        divmod(T, Poly())


def test_ratfunc_normal_form():
    assert RatFunc(T**2 - 1, T - 1) == RatFunc(T + 1)
    p = 3 * T**2 + T - 5
    assert RatFunc(p, p) == RatFunc(ONE)
    assert RatFunc(T, T**2 - 1) / RatFunc(ONE, T + 1) == RatFunc(T, T - 1)


def test_ratfunc_canonical_representation_randomized():
    rng = random.Random(99)
    for _ in range(60):
        a = rand_poly(rng)
        b = rand_poly(rng)
        m = rand_poly(rng)
        if not b or not m:
            continue
        lhs = RatFunc(a, b)
        rhs = RatFunc(a * m, b * m)
        assert lhs == rhs
        assert lhs.num == rhs.num and lhs.den == rhs.den
        assert lhs.den.is_monic()


def test_ratfunc_arithmetic_against_evaluation():
    rng = random.Random(4)
    for _ in range(50):
        a, b = rand_poly(rng), rand_poly(rng)
        c, d = rand_poly(rng), rand_poly(rng)
        if not b or not d:
            continue
        x = RatFunc(a, b)
        y = RatFunc(c, d)
        for q in (2, 3, Fraction(5, 2)):
            if b(q) == 0 or d(q) == 0:
                continue
            assert (x + y)(q) == x(q) + y(q)
            assert (x * y)(q) == x(q) * y(q)


def test_poly_gcd():
    assert poly_gcd(T**4 - 1, T**2 - 1) == T**2 - 1
    assert poly_gcd(Poly(), T + 1) == T + 1
    g = poly_gcd((T - 1) * (T + 2) ** 2, (T + 2) * (T - 3))
    assert g == T + 2


def test_matrix_triple_product():
    labels = ("a", "b")
    ident = PolyMatrix.identity(labels)
    diag = PolyMatrix.diagonal(labels, (ONE, T**2 - 1))
    assert triple_product(ident, diag, ident.transpose()) == diag

    p1 = PolyMatrix(("x",), ("x",), [[T]])
    l1 = PolyMatrix.diagonal(("x",), (ONE,))
    assert triple_product(p1, l1, p1.transpose()).rows[0][0] == T**2


def test_matrix_dimension_errors():
    a = PolyMatrix(("r",), ("c1", "c2"), [[ONE, T]])
    with pytest.raises(DimensionMismatch):
        a @ a
    with pytest.raises(DimensionMismatch):
        PolyMatrix(("r",), ("c",), [[ONE, T]])
    diag = PolyMatrix(("r", "s"), ("r", "s"), [[ONE, T], [Poly(), ONE]])
    with pytest.raises(DimensionMismatch):
        triple_product(PolyMatrix.identity(("r", "s")), diag, PolyMatrix.identity(("r", "s")))
