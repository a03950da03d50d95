"""Conjugacy classes and irreducible characters of W_n = S_n wr Z/2 and S_n.

Classes of the hyperoctahedral group W_n are labeled by pairs (alpha; beta)
of partitions with |alpha| + |beta| = n: alpha lists the positive cycle
lengths, beta the negative ones.  For S_n the label is (nu; ()) with nu
the cycle type.  Irreducible characters of W_n are labeled by bipartitions,
with ((n); ()) the trivial character and ((); (1^n)) the sign character of
the reflection representation; for S_n the label is a single partition
with (n) trivial.

Character values come from the wreath-product Murnaghan-Nakayama rule:
remove a border strip of the cycle length from either component, with a
factor (-1)^height per strip and an extra factor -1 when a strip for a
negative cycle is removed from the second component.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import RankTooLarge
from .partitions import bipartitions_of, partitions_of
from .polynomials import ONE, Poly

RANK_BOUND = 8

_BN = "Bn"
_SN = "Sn"


def _check_kind(kind):
    if kind not in (_BN, _SN):
        raise ValueError(f"kind must be 'Bn' or 'Sn', got {kind!r}")


def _check_rank(n):
    if n < 0:
        raise ValueError("rank must be >= 0")
    if n > RANK_BOUND:
        raise RankTooLarge(f"rank {n} exceeds bound {RANK_BOUND}")


def _cycle_centralizer(p):
    """z_gamma = prod k^{m_k} m_k! over part multiplicities."""
    z = 1
    mult = {}
    for part in p:
        mult[part] = mult.get(part, 0) + 1
    for k, m in mult.items():
        z *= k ** m * math.factorial(m)
    return z


def group_order(kind, n):
    return math.factorial(n) * (2 ** n if kind == _BN else 1)


def centralizer_order(kind, label):
    alpha, beta = label
    if kind == _SN:
        return _cycle_centralizer(alpha)
    return 2 ** (len(alpha) + len(beta)) * _cycle_centralizer(alpha) * _cycle_centralizer(beta)


@lru_cache(maxsize=None)
def conjugacy_classes(kind, n):
    """Ordered (label, class size) pairs; the identity class comes first."""
    _check_kind(kind)
    _check_rank(n)
    order = group_order(kind, n)
    labels = []
    if kind == _SN:
        labels = [(nu, ()) for nu in sorted(partitions_of(n))]
    else:
        for k in range(n, -1, -1):
            for alpha in sorted(partitions_of(k)):
                for beta in sorted(partitions_of(n - k)):
                    labels.append((alpha, beta))
        labels.sort(key=lambda ab: (sum(ab[1]), ab[0], ab[1]))
    return tuple((lab, order // centralizer_order(kind, lab)) for lab in labels)


def border_strips(p, k):
    """All ways to remove a border strip of size k: (smaller partition, height).

    Via beta-numbers: with ell = len(p) beads at b_i = p_i + ell - i,
    a k-strip removal moves one bead from b to b - k; the height is the
    number of beads passed over.
    """
    ell = len(p)
    if k <= 0 or sum(p) < k:
        return []
    beta = [p[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    out = []
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        parts = tuple(c - (ell - 1 - i) for i, c in enumerate(new_beta))
        parts = tuple(x for x in parts if x > 0)
        out.append((parts, height))
    return out


@lru_cache(maxsize=None)
def _mn_value(lam1, lam2, cycles):
    """Murnaghan-Nakayama recursion over the remaining (length, sign) cycles."""
    if not cycles:
        return 1 if not lam1 and not lam2 else 0
    (k, sign), rest = cycles[0], cycles[1:]
    total = 0
    for smaller, height in border_strips(lam1, k):
        total += (-1) ** height * _mn_value(smaller, lam2, rest)
    for smaller, height in border_strips(lam2, k):
        val = (-1) ** height * _mn_value(lam1, smaller, rest)
        total += sign * val
    return total


def character_value(irrep, class_label):
    """chi^{(lam1; lam2)} at the class (alpha; beta)."""
    alpha, beta = class_label
    cycles = tuple(sorted([(k, 1) for k in alpha] + [(k, -1) for k in beta], reverse=True))
    return _mn_value(tuple(irrep[0]), tuple(irrep[1]), cycles)


class CharTable:
    """Full integer character table of W_n or S_n, rows = irreps, cols = classes."""

    __slots__ = ("kind", "n", "classes", "sizes", "irreps", "values")

    def __init__(self, kind, n, classes, sizes, irreps, values):
        self.kind = kind
        self.n = n
        self.classes = classes
        self.sizes = sizes
        self.irreps = irreps
        self.values = values

    @property
    def order(self):
        return group_order(self.kind, self.n)

    def value(self, irrep, class_label):
        return self.values[self.irreps.index(irrep)][self.classes.index(class_label)]

    def degree(self, irrep):
        return self.values[self.irreps.index(irrep)][0]

    def degrees(self):
        return tuple(row[0] for row in self.values)

    def __repr__(self):
        return f"CharTable({self.kind}, n={self.n}, {len(self.irreps)} irreps)"


@lru_cache(maxsize=None)
def character_table(kind, n):
    _check_kind(kind)
    _check_rank(n)
    class_data = conjugacy_classes(kind, n)
    classes = tuple(lab for lab, _ in class_data)
    sizes = tuple(sz for _, sz in class_data)
    if kind == _SN:
        irreps = tuple((lam, ()) for lam in partitions_of(n))
    else:
        irreps = bipartitions_of(n)
    values = tuple(tuple(character_value(ir, cl) for cl in classes) for ir in irreps)
    return CharTable(kind, n, classes, sizes, irreps, values)


def sign_value(class_label):
    """Sign character (determinant on the reflection representation)."""
    alpha, beta = class_label
    exponent = sum(a - 1 for a in alpha) + sum(beta)
    return -1 if exponent % 2 else 1


def reflection_charpoly(kind, class_label):
    """det(t - w) on the n-dimensional reflection representation.

    Prod (t^{alpha_i} - 1) * Prod (t^{beta_j} + 1); the beta factor is
    absent for S_n, whose classes carry no negative cycles.
    """
    _check_kind(kind)
    alpha, beta = class_label
    if kind == _SN and beta:
        raise ValueError("S_n classes have no negative cycles")
    out = ONE
    for k in alpha:
        out = out * Poly((-1,) + (0,) * (k - 1) + (1,))
    for k in beta:
        out = out * Poly((1,) + (0,) * (k - 1) + (1,))
    return out


def torus_order(class_label, which):
    """Order polynomial of the F-stable torus attached to a class.

    'theta': |T_w^{theta,F}| = det(t - w) on the reflection representation.
    'iota_theta': |T_w^{iota theta,F}| = Prod (t^{nu_i} - 1) over the merged
    cycle type nu = alpha u beta.
    """
    alpha, beta = class_label
    if which == "theta":
        out = ONE
        for k in alpha:
            out = out * Poly((-1,) + (0,) * (k - 1) + (1,))
        for k in beta:
            out = out * Poly((1,) + (0,) * (k - 1) + (1,))
        return out
    if which == "iota_theta":
        out = ONE
        for k in sorted(alpha + beta, reverse=True):
            out = out * Poly((-1,) + (0,) * (k - 1) + (1,))
        return out
    raise ValueError(f"which must be 'theta' or 'iota_theta', got {which!r}")


def psi_poly(nu):
    """Psi_nu(t) = Prod (t^{nu_i} + 1)."""
    out = ONE
    for k in nu:
        out = out * Poly((1,) + (0,) * (k - 1) + (1,))
    return out


def sp_order(n):
    """|Sp_2n(F_q)| as a polynomial: q^{n^2} Prod_{i<=n} (q^{2i} - 1)."""
    out = Poly.monomial(n * n)
    for i in range(1, n + 1):
        out = out * Poly((-1,) + (0,) * (2 * i - 1) + (1,))
    return out


def gl_order(n):
    """|GL_n(F_q)| as a polynomial: q^{n(n-1)/2} Prod_{i<=n} (q^i - 1)."""
    out = Poly.monomial(n * (n - 1) // 2)
    for i in range(1, n + 1):
        out = out * Poly((-1,) + (0,) * (i - 1) + (1,))
    return out


def group_orders(n):
    return sp_order(n), gl_order(n)
