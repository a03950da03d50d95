"""Partitions, bipartitions, orders, charge oracle, orbit parametrization count."""

import pytest

from exotic_kostka.errors import InvalidField, SizeMismatch
from exotic_kostka.partitions import (
    a_value,
    bipartition_count,
    bipartitions_of,
    dominance_le,
    exotic_le,
    hook_count,
    interleaved,
    kostka_charge,
    modified_kostka_charge,
    n_value,
    partitions_of,
    phi_count,
    transpose,
)
from exotic_kostka.polynomials import ONE, Poly, T


def test_enumeration_small():
    assert bipartitions_of(0) == (((), ()),)
    assert bipartitions_of(1) == (((), (1,)), ((1,), ()))
    assert bipartitions_of(2) == (
        ((), (1, 1)), ((), (2,)), ((1, 1), ()), ((1,), (1,)), ((2,), ()))


def test_enumeration_counts_match_generating_function():
    for n in range(13):
        assert len(bipartitions_of(n)) == bipartition_count(n)


def test_enumeration_is_linear_extension():
    for n in range(7):
        labels = bipartitions_of(n)
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                assert not (exotic_le(b, a) and a != b)


def test_statistics():
    assert a_value(((1,), ())) == 0
    assert a_value(((), (1,))) == 1
    assert a_value(((), (1, 1))) == 4
    assert n_value((5,)) == 0
    assert n_value((1, 1)) == 1
    assert n_value((2, 2, 1)) == 4


def test_a_value_extremes():
    for n in range(1, 7):
        values = {b: a_value(b) for b in bipartitions_of(n)}
        assert values[((n,), ())] == 0
        assert max(values.values()) == n * n
        assert values[((), (1,) * n)] == n * n


def test_a_strictly_decreasing_along_closure_order():
    # the enumeration key relies on this monotonicity
    for n in range(1, 6):
        for a in bipartitions_of(n):
            for b in bipartitions_of(n):
                if a != b and exotic_le(a, b):
                    assert a_value(a) > a_value(b)


def test_dominance():
    assert dominance_le((1, 1), (2,))
    assert not dominance_le((2,), (1, 1))
    assert dominance_le((2, 2), (3, 1))
    with pytest.raises(SizeMismatch):
        dominance_le((1,), (2,))


def test_exotic_order_examples():
    assert exotic_le(((), (1,)), ((1,), ()))
    assert not exotic_le(((1, 1), ()), ((), (2,)))
    assert not exotic_le(((), (2,)), ((1, 1), ()))
    for b in bipartitions_of(3):
        assert exotic_le(b, b)
    with pytest.raises(SizeMismatch):
        exotic_le(((1,), ()), ((1,), (1,)))


def test_exotic_order_is_partial_order():
    for n in range(7):
        labels = bipartitions_of(n)
        for a in labels:
            for b in labels:
                if exotic_le(a, b) and exotic_le(b, a):
                    assert a == b
                for c in labels:
                    if exotic_le(a, b) and exotic_le(b, c):
                        assert exotic_le(a, c)


def test_embedded_dominance_compatibility():
    # lambda -> (-; lambda) embeds the dominance order in the closure order
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert dominance_le(mu, lam) == exotic_le(((), mu), ((), lam))


def test_interleaved():
    assert interleaved(((2, 1), (1,))) == (2, 1, 1, 0)
    assert interleaved(((), (1,)), 2) == (0, 1, 0, 0)


def test_transpose():
    assert transpose((4,)) == (1, 1, 1, 1)
    assert transpose((2, 1)) == (2, 1)
    assert transpose((3, 1)) == (2, 1, 1)
    for n in range(7):
        for p in partitions_of(n):
            assert transpose(transpose(p)) == p


def test_hook_count():
    assert hook_count(()) == 1
    assert hook_count((3,)) == 1
    assert hook_count((2, 1)) == 2
    assert hook_count((2, 2)) == 2
    assert hook_count((3, 1)) == 3


def test_charge_kostka_small():
    assert kostka_charge((2,), (1, 1)) == T
    assert kostka_charge((2, 1), (1, 1, 1)) == T + T**2
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert kostka_charge(lam, lam) == ONE


def test_charge_kostka_classical_table_n3():
    assert kostka_charge((3,), (2, 1)) == T
    assert kostka_charge((3,), (1, 1, 1)) == T**3
    assert kostka_charge((2, 1), (2, 1)) == ONE
    assert kostka_charge((1, 1, 1), (1, 1, 1)) == ONE
    assert kostka_charge((2, 1), (3,)) == Poly()
    assert kostka_charge((1, 1, 1), (2, 1)) == Poly()


def test_charge_kostka_classical_table_n4():
    assert kostka_charge((2, 2), (1, 1, 1, 1)) == T**2 + T**4
    assert kostka_charge((3, 1), (2, 1, 1)) == T + T**2
    # charges of the three standard tableaux of shape (3,1) are 3, 4, 5
    assert kostka_charge((3, 1), (1, 1, 1, 1)) == T**3 + T**4 + T**5
    assert kostka_charge((2, 2), (2, 1, 1)) == T
    assert kostka_charge((2, 2), (2, 2)) == ONE
    assert kostka_charge((4,), (1, 1, 1, 1)) == T**6


def test_charge_vanishing_matches_dominance():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                k = kostka_charge(lam, mu)
                assert bool(k) == dominance_le(mu, lam)


def test_charge_at_one_counts_tableaux():
    # at t=1 the column mu = (1^n) counts standard tableaux
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kostka_charge(lam, (1,) * n)(1) == hook_count(lam)


def test_modified_kostka_charge():
    assert modified_kostka_charge((2,), (1, 1)) == ONE
    assert modified_kostka_charge((1, 1), (1, 1)) == T
    assert modified_kostka_charge((3,), (1, 1, 1)) == ONE


def test_phi_count():
    for q in (3, 5, 9):
        assert phi_count(1, q) == 2 * (q - 1)
    assert phi_count(1, 3) == 4
    assert phi_count(2, 3) == 20
    assert phi_count(1, 5) == 8


def test_phi_count_field_validation():
    with pytest.raises(InvalidField):
        phi_count(2, 4)
    with pytest.raises(InvalidField):
        phi_count(2, 15)
    with pytest.raises(InvalidField):
        phi_count(1, 2)
    assert phi_count(2, 9) > 0  # prime powers are allowed
