"""Partitions, double partitions, their statistics and orders.

A partition is a tuple of weakly decreasing positive ints; a double
partition (bipartition) is a pair of partitions.  This module owns
the combinatorial order theory (dominance, the interleaved closure
order on bipartitions), the charge-statistic Kostka polynomials used
as an independent oracle, and the orbit-parametrization count
phi_count over a finite field.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import InvalidField, SizeMismatch
from .polynomials import Poly

Partition = "tuple[int, ...]"
Bipartition = "tuple[Partition, Partition]"


def check_partition(p):
    p = tuple(p)
    if any(not isinstance(x, int) or x <= 0 for x in p):
        raise ValueError(f"parts must be positive ints: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def size(p):
    return sum(p)


def bsize(b):
    return sum(b[0]) + sum(b[1])


def n_value(p):
    """n(mu) = sum (i-1) mu_i."""
    return sum(i * part for i, part in enumerate(p))


def a_value(b):
    """a(Bmu) = 2(n(mu1) + n(mu2)) + |mu2|."""
    return 2 * (n_value(b[0]) + n_value(b[1])) + sum(b[1])


def transpose(p):
    """Conjugate partition."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def hook_count(p):
    """Number of standard Young tableaux of shape p (hook length formula)."""
    n = sum(p)
    if n == 0:
        return 1
    t = transpose(p)
    prod = 1
    for i, row in enumerate(p):
        for j in range(row):
            prod *= row - j + t[j] - i - 1
    return math.factorial(n) // prod


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, in the canonical table order.

    The order refines the dominance order with smaller elements first:
    key = (-n(mu), lex).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return tuple(sorted(_raw_partitions(n, n), key=lambda p: (-n_value(p), p)))


def _raw_partitions(n, cap):
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _raw_partitions(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def bipartitions_of(n):
    """All bipartitions of n, in a total order refining the closure order.

    Smaller (closure-contained) orbits come first, so the a-value is
    weakly decreasing along the sequence; ties broken lexicographically
    on the interleaved part sequence.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    pairs = []
    for k in range(n + 1):
        for p1 in _raw_partitions(k, k or 1):
            for p2 in _raw_partitions(n - k, n - k or 1):
                pairs.append((tuple(p1), tuple(p2)))
    return tuple(sorted(pairs, key=lambda b: (-a_value(b), interleaved(b))))


def interleaved(b, length=None):
    """(mu1_1, mu2_1, mu1_2, mu2_2, ...) padded with zeros."""
    m = length if length is not None else max(len(b[0]), len(b[1]))
    out = []
    for i in range(m):
        out.append(b[0][i] if i < len(b[0]) else 0)
        out.append(b[1][i] if i < len(b[1]) else 0)
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(n):
    """p(n) by Euler's recurrence (independent of the enumerations above)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def bipartition_count(n):
    """|P_{n,2}| from the generating function Prod (1-x^k)^(-2)."""
    return sum(partition_count(k) * partition_count(n - k) for k in range(n + 1))


# -- orders ------------------------------------------------------------


def dominance_le(a, b):
    """a <= b in dominance: every partial sum of a is <= that of b."""
    if sum(a) != sum(b):
        raise SizeMismatch(f"|{a}| != |{b}|")
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta > tb:
            return False
    return True


def exotic_le(a, b):
    """Closure order on bipartitions: interleaved prefix-sum dominance.

    a <= b iff for every k, both
      sum_{i<=k} (a1_i + a2_i) <= sum_{i<=k} (b1_i + b2_i)  and
      sum_{i<=k} a1_i + sum_{i<=k-1} a2_i
          <= sum_{i<=k} b1_i + sum_{i<=k-1} b2_i.
    """
    if bsize(a) != bsize(b):
        raise SizeMismatch(f"|{a}| != |{b}|")
    m = max(len(a[0]), len(a[1]), len(b[0]), len(b[1])) + 1
    ia, ib = interleaved(a, m), interleaved(b, m)
    sa = sb = 0
    for k in range(2 * m):
        sa += ia[k]
        sb += ib[k]
        if sa > sb:
            return False
    return True


# -- charge-statistic Kostka polynomials (independent oracle) -----------


def _ssyt(shape, content):
    """All semistandard tableaux of the given shape and content.

    Plain backtracking, filling values 1..len(content) one at a time as
    horizontal strips.  Clarity over speed: this is the oracle side.
    """
    rows = len(shape)

    def fill(tab, value):
        if value > len(content):
            yield [row[:] for row in tab]
            return
        need = content[value - 1]
        # choose how many copies of `value` go in each row, top to bottom;
        # new cells must form a horizontal strip and stay column-strict
        def place(r, remaining, current):
            if remaining == 0:
                yield from fill(current, value + 1)
                return
            if r >= rows:
                return
            cur_len = len(current[r])
            max_new = min(shape[r] - cur_len, remaining)
            if r > 0:
                # only above cells filled in *earlier* rounds support new ones
                max_new = min(max_new, len(tab[r - 1]) - cur_len)
            for k in range(max_new, -1, -1):
                nxt = [row[:] for row in current]
                nxt[r].extend([value] * k)
                yield from place(r + 1, remaining - k, nxt)

        yield from place(0, need, [row[:] for row in tab])

    if sum(shape) != sum(content):
        return
    yield from fill([[] for _ in range(rows)], 1)


def _reading_word(tab):
    """Rows read left to right, bottom row first."""
    word = []
    for row in reversed(tab):
        word.extend(row)
    return word


def charge_of_word(word):
    """Charge of a word whose content is a partition.

    Repeatedly extract a standard subword by scanning right-to-left
    cyclically (first 1, then the first 2 continuing leftward, ...);
    within each extracted subword the letter 1 gets index 0 and r+1
    gets index(r) + 1 exactly when r+1 sits to the right of r.  The
    charge is the total of all indices over all extracted subwords.
    """
    word = list(word)
    total = 0
    while word:
        maxletter = max(word)
        marked = {}
        pos = len(word) - 1
        for letter in range(1, maxletter + 1):
            seen = 0
            while word[pos] != letter:
                pos -= 1
                if pos < 0:
                    pos = len(word) - 1
                seen += 1
                if seen > len(word):
                    raise RuntimeError("content is not a partition")
            marked[letter] = pos
        index = 0
        for letter in range(2, maxletter + 1):
            if marked[letter] > marked[letter - 1]:
                index += 1
            total += index
        taken = set(marked.values())
        word = [word[i] for i in range(len(word)) if i not in taken]
    return total


def kostka_charge(lam, mu):
    """Classical Kostka polynomial K_{lam,mu}(t) as the charge generating function."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    coeffs = {}
    for tab in _ssyt(lam, mu):
        c = charge_of_word(_reading_word(tab))
        coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return Poly()
    out = [0] * (max(coeffs) + 1)
    for c, mult in coeffs.items():
        out[c] = mult
    return Poly(out)


def modified_kostka_charge(lam, mu):
    """t^{n(mu)} K_{lam,mu}(1/t): the modified Kostka polynomial, charge route."""
    k = kostka_charge(lam, mu)
    shift = n_value(mu)
    out = [0] * (shift + 1)
    for i, c in enumerate(k.coeffs):
        out[shift - i] = c
    return Poly(out)


# -- orbit-count parametrization over F_q --------------------------------


def _is_odd_prime_power(q):
    if q < 3 or q % 2 == 0:
        return False
    p = 3
    while p * p <= q:
        if q % p == 0:
            m = q
            while m % p == 0:
                m //= p
            return m == 1
        p += 2
    return True  # q itself is an odd prime


def _mobius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def frobenius_orbit_counts(q, up_to):
    """Number of Frobenius orbits of each size d <= up_to on the nonzero
    elements of an algebraic closure of F_q: (1/d) sum_{e|d} mobius(e) (q^{d/e}-1)."""
    counts = {}
    for d in range(1, up_to + 1):
        total = 0
        for e in range(1, d + 1):
            if d % e == 0:
                total += _mobius(e) * (q ** (d // e) - 1)
        counts[d] = total // d
    return counts


def phi_count(n, q):
    """Number of bipartition-valued functions on Frobenius orbits with
    total weighted size n; parametrizes the full-space orbit census."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not _is_odd_prime_power(q):
        raise InvalidField(f"q={q} is not an odd prime power >= 3")
    orbit_counts = frobenius_orbit_counts(q, n)
    p2 = [bipartition_count(m) for m in range(n + 1)]
    # product over orbit sizes d of (sum_m p2(m) x^{d m})^(count_d), truncated at x^n
    series = [1] + [0] * n
    for d, cnt in orbit_counts.items():
        base = [0] * (n + 1)
        for m in range(0, n // d + 1):
            base[d * m] = p2[m]
        series = _trunc_mul(series, _trunc_pow(base, cnt, n), n)
    return series[n]


def _trunc_mul(a, b, n):
    out = [0] * (n + 1)
    for i, ca in enumerate(a):
        if ca:
            for j in range(min(len(b), n + 1 - i)):
                if b[j]:
                    out[i + j] += ca * b[j]
    return out


def _trunc_pow(base, e, n):
    result = [1] + [0] * n
    while e:
        if e & 1:
            result = _trunc_mul(result, base, n)
        base = _trunc_mul(base, base, n)
        e >>= 1
    return result
