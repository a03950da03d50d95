"""Fake degrees R(chi) and the Omega matrices for r = 1, 2.

R(chi) is the graded multiplicity of chi in the coinvariant algebra,
computed by the class sum

    R(chi) = Prod_{i<=n}(t^{ir} - 1) / |W|
             * sum_w sign(w) chi(w) / det(t - w),

an exact rational-function computation that must collapse to a
polynomial.  Omega has entries t^N R(chi ⊗ chi' ⊗ sign) with N the
reflection count (n^2 for W_n, n(n-1)/2 for S_n).  The same matrix
has a torus-order expression over F_q, used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotPolynomial, SingularEvaluation
from .characters import (
    character_table,
    conjugacy_classes,
    gl_order,
    group_order,
    reflection_charpoly,
    sign_value,
    sp_order,
)
from .polynomials import ONE, Poly


def _kind(r):
    if r == 2:
        return "Bn"
    if r == 1:
        return "Sn"
    raise ValueError(f"r must be 1 or 2, got {r}")


def reflection_count(n, r):
    return n * n if r == 2 else n * (n - 1) // 2


def coinvariant_degrees_product(n, r):
    """Prod_{i=1..n} (t^{ir} - 1)."""
    out = ONE
    for i in range(1, n + 1):
        out = out * Poly((-1,) + (0,) * (i * r - 1) + (1,))
    return out


@lru_cache(maxsize=None)
def _denominator_data(n, r):
    """Structured common denominator for the class sum.

    Every det(t - w) factors as a product of (t^k - 1) and (t^k + 1)
    pieces read off the class label, so D(t) built from the maximal
    factor multiplicities is a common multiple, and each cofactor
    D / det(t - w) is assembled by multiplication alone.
    """
    kind = _kind(r)
    classes = conjugacy_classes(kind, n)
    max_minus = {}
    max_plus = {}
    for (alpha, beta), _ in classes:
        for k in set(alpha):
            max_minus[k] = max(max_minus.get(k, 0), alpha.count(k))
        for k in set(beta):
            max_plus[k] = max(max_plus.get(k, 0), beta.count(k))
    D = ONE
    for k, m in sorted(max_minus.items()):
        D = D * Poly((-1,) + (0,) * (k - 1) + (1,)) ** m
    for k, m in sorted(max_plus.items()):
        D = D * Poly((1,) + (0,) * (k - 1) + (1,)) ** m
    cofactors = []
    for (alpha, beta), _ in classes:
        cof = ONE
        for k, m in sorted(max_minus.items()):
            extra = m - alpha.count(k)
            if extra:
                cof = cof * Poly((-1,) + (0,) * (k - 1) + (1,)) ** extra
        for k, m in sorted(max_plus.items()):
            extra = m - beta.count(k)
            if extra:
                cof = cof * Poly((1,) + (0,) * (k - 1) + (1,)) ** extra
        cofactors.append(cof)
    return D, tuple(cofactors)


def fake_degree(kind, n, values):
    """R(chi) for a class function given by `values` in conjugacy_classes order.

    Raises NotPolynomial when the sum does not simplify to a polynomial,
    which signals a non-character input or a table bug.
    """
    r = 2 if kind == "Bn" else 1
    classes = conjugacy_classes(kind, n)
    if len(values) != len(classes):
        raise ValueError("need one value per conjugacy class")
    D, cofactors = _denominator_data(n, r)
    numerator = Poly()
    for (label, csize), value, cof in zip(classes, values, cofactors):
        w = csize * sign_value(label) * value
        if w:
            numerator = numerator + w * cof
    total = coinvariant_degrees_product(n, r) * numerator
    quotient = total.div_exact(D)
    scale = Fraction(1, group_order(kind, n))
    return quotient * scale


@dataclass(frozen=True)
class OmegaMatrix:
    """Symmetric matrix omega_{lam,mu} = t^N R(chi^lam chi^mu sign)."""

    n: int
    r: int
    labels: tuple
    entries: tuple  # tuple of tuples of Poly

    @property
    def reflection_count(self):
        return reflection_count(self.n, self.r)

    def entry(self, lab1, lab2):
        return self.entries[self.labels.index(lab1)][self.labels.index(lab2)]


@lru_cache(maxsize=None)
def omega_matrix(n, r):
    kind = _kind(r)
    table = character_table(kind, n)
    classes = conjugacy_classes(kind, n)
    D, cofactors = _denominator_data(n, r)
    cprod = coinvariant_degrees_product(n, r)
    order = group_order(kind, n)
    N = reflection_count(n, r)
    # sign(w) from the fake-degree sum cancels against the tensored sign
    # character, leaving plain class sizes as weights
    weights = tuple(csize for _, csize in classes)
    m = len(table.irreps)
    rows = [[None] * m for _ in range(m)]
    for i in range(m):
        chi_i = table.values[i]
        for j in range(i + 1):
            chi_j = table.values[j]
            numerator = Poly()
            for w, a, b, cof in zip(weights, chi_i, chi_j, cofactors):
                coeff = w * a * b
                if coeff:
                    numerator = numerator + coeff * cof
            total = cprod * numerator
            quotient = total.div_exact(D)
            entry = (quotient * Fraction(1, order)).shifted(N)
            if not entry.is_integral():
                raise NotPolynomial(f"omega entry at {table.irreps[i]},{table.irreps[j]} "
                                    f"is not integral: {entry}")
            rows[i][j] = rows[j][i] = entry
    labels = table.irreps if r == 2 else tuple(ir[0] for ir in table.irreps)
    return OmegaMatrix(n, r, labels, tuple(tuple(row) for row in rows))


def omega_via_torus(n, r, q):
    """Omega over F_q by the torus-order sum; exact rational arithmetic.

    |H^F| |W|^{-1} sum_w |T_w^F|^{-1} chi(w) chi'(w), with H = Sp_2n and
    theta-fixed torus orders for r = 2, H = GL_n and the split-side torus
    orders for r = 1.
    """
    kind = _kind(r)
    table = character_table(kind, n)
    classes = conjugacy_classes(kind, n)
    q = Fraction(q)
    torus_values = []
    for label, _ in classes:
        tv = reflection_charpoly(kind, label)(q)
        if tv == 0:
            raise SingularEvaluation(f"torus order vanishes at q={q} for class {label}")
        torus_values.append(Fraction(tv))
    hf = (sp_order(n) if r == 2 else gl_order(n))(q)
    order = group_order(kind, n)
    sizes = [csize for _, csize in classes]
    m = len(table.irreps)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = Fraction(0)
            for k in range(len(classes)):
                acc += Fraction(sizes[k] * table.values[i][k] * table.values[j][k]) / torus_values[k]
            total = Fraction(hf) * acc / order
            row.append(int(total) if total.denominator == 1 else total)
        rows.append(row)
    labels = table.irreps if r == 2 else tuple(ir[0] for ir in table.irreps)
    return labels, tuple(tuple(row) for row in rows)
