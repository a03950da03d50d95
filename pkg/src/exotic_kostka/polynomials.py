"""Exact univariate polynomials, rational functions, and labeled matrices.

Coefficients are exact rationals: Python ints where possible, Fraction
otherwise, never floats.  A polynomial is a dense coefficient tuple
indexed by degree in the single indeterminate t.  A rational function
is a reduced numerator/denominator pair with monic denominator, so
equal values have identical stored representations.

Everything here is immutable after construction; all operations are
pure functions, safe to share across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZero, DimensionMismatch, NotPolynomial, SingularEvaluation

Scalar = "int | Fraction"


def _norm_scalar(c):
    """Collapse integral Fractions to int; reject floats."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Poly:
    """Dense univariate polynomial over exact rationals.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls((0,) * k + (c,))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if isinstance(other, RatFunc):
            return NotImplemented
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Long division over the rationals."""
        other = _coerce_poly(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.coeffs
        lc = d[-1]
        while len(rem) >= len(d):
            c = rem[-1]
            if c:
                if lc == 1:
                    factor = c
                elif isinstance(c, int) and isinstance(lc, int):
                    factor = _norm_scalar(Fraction(c, lc))
                else:
                    factor = _norm_scalar(Fraction(c) / Fraction(lc))
                q[len(rem) - len(d)] = factor
                for i, dc in enumerate(d):
                    rem[len(rem) - len(d) + i] -= factor * dc
            rem.pop()
        return Poly(q), Poly(rem)

    def div_exact(self, other):
        """Exact quotient; raises NotPolynomial if the division has a remainder."""
        q, r = divmod(self, other)
        if r:
            raise NotPolynomial(f"{self} is not divisible by {other}")
        return q

    # -- substitutions --------------------------------------------------

    def subs_t_squared(self):
        """p(t) -> p(t^2)."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return Poly(out)

    def subs_neg_t(self):
        """p(t) -> p(-t)."""
        return Poly(tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def __call__(self, value):
        """Evaluate at an exact rational point (Horner)."""
        value = _norm_scalar(value if isinstance(value, (int, Fraction)) else Fraction(value))
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _norm_scalar(acc if isinstance(acc, (int, Fraction)) else Fraction(acc))

    def shifted(self, k):
        """Multiply by t^k (k >= 0)."""
        if k < 0:
            raise ValueError("use laurent helpers for negative shifts")
        if not self.coeffs:
            return Poly()
        return Poly((0,) * k + self.coeffs)

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if isinstance(other, RatFunc):
            return other == self
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                var = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    term = var
                elif c == -1:
                    term = f"-{var}"
                else:
                    term = f"{c}*{var}"
            parts.append(term)
        s = " + ".join(parts).replace("+ -", "- ")
        return s


ZERO = Poly()
ONE = Poly((1,))
T = Poly((0, 1))


def _coerce_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


def _int_content(cs):
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
        if g == 1:
            return 1
    return g or 1


def _primitive_int(p):
    """Scale a Poly to integer coefficients and strip the content."""
    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    cs = [int(c * den) for c in p.coeffs]
    g = _int_content(cs)
    return [c // g for c in cs]


def poly_gcd(a, b):
    """Monic gcd over the rationals.

    Uses a primitive pseudo-remainder sequence on integer coefficients,
    which keeps intermediate values small where naive Euclid over Q
    blows up.
    """
    a, b = _coerce_poly(a), _coerce_poly(b)
    if not a:
        return _make_monic(b)
    if not b:
        return _make_monic(a)
    fa, fb = _primitive_int(a), _primitive_int(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        # pseudo-remainder: lc(fb)^(deg fa - deg fb + 1) * fa  mod fb
        rem = list(fa)
        lc = fb[-1]
        while len(rem) >= len(fb):
            c = rem[-1]
            if c:
                g = math.gcd(abs(c), abs(lc))
                mult_rem, mult_b = lc // g, c // g
                for i in range(len(rem)):
                    rem[i] *= mult_rem
                off = len(rem) - len(fb)
                for i, dc in enumerate(fb):
                    rem[off + i] -= mult_b * dc
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        g = _int_content(rem)
        fa, fb = fb, [c // g for c in rem]
    return _make_monic(Poly(fa))


def _make_monic(p):
    if not p:
        return ZERO
    lc = p.leading
    if lc == 1:
        return p
    return Poly(tuple(_norm_scalar(Fraction(c, lc) if isinstance(c, int) and isinstance(lc, int) else c / lc) for c in p.coeffs))


class RatFunc:
    """Reduced quotient of two Polys; denominator monic and coprime to numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc components must be polynomials or exact rationals")
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            object.__setattr__(self, "num", ZERO)
            object.__setattr__(self, "den", ONE)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.div_exact(g)
            den = den.div_exact(g)
        lc = den.leading
        if lc != 1:
            inv = Fraction(1, lc) if isinstance(lc, int) else 1 / lc
            num = num * inv
            den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def from_poly(cls, p):
        return cls(p, ONE)

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        object.__setattr__(r, "num", -self.num)
        object.__setattr__(r, "den", self.den)
        return r

    def __sub__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_ratfunc(other) - self

    def __mul__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_ratfunc(other) / self

    # -- structure -------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den == ONE

    def to_poly(self):
        """Demote to Poly; raises NotPolynomial for a nontrivial denominator."""
        if self.den != ONE:
            raise NotPolynomial(f"{self} has denominator {self.den}")
        return self.num

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise SingularEvaluation(f"denominator {self.den} vanishes at {value}")
        n = self.num(value)
        return _norm_scalar(Fraction(n, d) if isinstance(n, int) and isinstance(d, int) else n / d)

    def __eq__(self, other):
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        if self.den == ONE:
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num}) / ({self.den}))"


def _coerce_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (Poly, int, Fraction)):
        return RatFunc.from_poly(_coerce_poly(x))
    return NotImplemented


class PolyMatrix:
    """Rectangular matrix with labeled rows and columns.

    Entries may be Poly or RatFunc (anything supporting ring ops);
    labels are arbitrary hashable values, unique per axis.
    """

    __slots__ = ("row_labels", "col_labels", "rows")

    def __init__(self, row_labels, col_labels, rows):
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        rows = tuple(tuple(r) for r in rows)
        if len(set(row_labels)) != len(row_labels) or len(set(col_labels)) != len(col_labels):
            raise ValueError("matrix labels must be unique")
        if len(rows) != len(row_labels) or any(len(r) != len(col_labels) for r in rows):
            raise DimensionMismatch(
                f"entry grid {len(rows)}x{len(rows[0]) if rows else 0} does not match "
                f"labels {len(row_labels)}x{len(col_labels)}"
            )
        object.__setattr__(self, "row_labels", row_labels)
        object.__setattr__(self, "col_labels", col_labels)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *args):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, labels):
        labels = tuple(labels)
        return cls(labels, labels,
                   [[ONE if i == j else ZERO for j in range(len(labels))]
                    for i in range(len(labels))])

    @classmethod
    def diagonal(cls, labels, entries):
        labels = tuple(labels)
        entries = tuple(entries)
        if len(entries) != len(labels):
            raise DimensionMismatch("diagonal needs one entry per label")
        return cls(labels, labels,
                   [[entries[i] if i == j else ZERO for j in range(len(labels))]
                    for i in range(len(labels))])

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))

    def entry(self, row_label, col_label):
        return self.rows[self.row_labels.index(row_label)][self.col_labels.index(col_label)]

    def transpose(self):
        m, n = self.shape
        return PolyMatrix(self.col_labels, self.row_labels,
                          [[self.rows[i][j] for i in range(m)] for j in range(n)])

    def is_diagonal(self):
        if self.row_labels != self.col_labels:
            return False
        m = len(self.row_labels)
        return all(not self.rows[i][j] for i in range(m) for j in range(m) if i != j)

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.col_labels != other.row_labels:
            raise DimensionMismatch("inner labels do not match")
        m, k = self.shape
        n = len(other.col_labels)
        out = []
        for i in range(m):
            row = []
            for j in range(n):
                acc = ZERO
                for s in range(k):
                    a = self.rows[i][s]
                    b = other.rows[s][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.row_labels, other.col_labels, out)

    def map_entries(self, f):
        return PolyMatrix(self.row_labels, self.col_labels,
                          [[f(e) for e in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.row_labels == other.row_labels
                and self.col_labels == other.col_labels
                and all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)))

    def __repr__(self):
        return f"PolyMatrix({len(self.row_labels)}x{len(self.col_labels)})"


def triple_product(P, L, Pt):
    """P * L * transpose-of-P, with L diagonal; exact entries in normal form."""
    if not L.is_diagonal():
        raise DimensionMismatch("middle factor must be diagonal")
    return (P @ L) @ Pt
