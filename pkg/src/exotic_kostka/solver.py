"""Triangular factorization P Lambda tP = Omega producing modified Kostka polynomials.

Labels are processed along a total order refining the closure order
(smaller orbits first).  Each step determines one diagonal entry of
Lambda and one subdiagonal row of P; at incomparable pairs the entry
of P is forced to zero and the corresponding equation becomes an
overdetermined consistency assertion, so a wrong partial order or a
wrong Omega fails loudly instead of silently producing garbage.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentSystem, NotPolynomial, ZeroDiagonal
from .fake_degrees import omega_matrix
from .partitions import a_value, dominance_le, exotic_le, n_value
from .polynomials import Poly, PolyMatrix, RatFunc


@dataclass(frozen=True)
class KostkaSolution:
    """The pair (P, Lambda) solving P Lambda tP = Omega.

    P holds the modified Kostka polynomials, row label by column label;
    Lambda holds the diagonal (the orbit-size polynomials).  The total
    order actually used is kept for reproducibility audits.
    """

    rank: int
    r: int
    labels: tuple
    P: PolyMatrix
    Lambda: tuple
    refinement_used: tuple

    def kostka(self, lam, mu):
        return self.P.entry(lam, mu)

    def xi(self, lab):
        return self.Lambda[self.labels.index(lab)]


def _validate_refinement(labels, refinement, le):
    refinement = tuple(refinement)
    if sorted(map(repr, refinement)) != sorted(map(repr, labels)):
        raise ValueError("refinement must be a permutation of the labels")
    for i, a in enumerate(refinement):
        for b in refinement[i + 1:]:
            if le(b, a) and a != b:
                raise ValueError(f"refinement violates the partial order at {b} < {a}")
    return refinement


def solve(omega, le, diag, refinement=None, verify=True):
    """Solve P Lambda tP = Omega with the prescribed zero pattern and diagonal.

    omega: an OmegaMatrix (symmetric, entries Poly).
    le(a, b): the partial-order predicate for the zero pattern.
    diag(label): the forced diagonal entry of P, a nonzero Poly.
    refinement: optional explicit total order (defaults to omega.labels).

    Raises InconsistentSystem when an incomparable-pair equation fails,
    ZeroDiagonal when a Lambda entry vanishes, NotPolynomial when an
    entry of P or Lambda does not clear its denominator.
    """
    if refinement is not None:
        labels = _validate_refinement(omega.labels, refinement, le)
    else:
        labels = tuple(omega.labels)
    m = len(labels)
    pos = {lab: omega.labels.index(lab) for lab in labels}

    def om(a, b):
        return omega.entries[pos[a]][pos[b]]

    diag_polys = {}
    for lab in labels:
        d = diag(lab)
        if not d:
            raise ZeroDiagonal(f"prescribed diagonal at {lab} is zero")
        diag_polys[lab] = d

    # rows of P in refinement order; entries kept as RatFunc until the
    # divisibility check demotes them to Poly
    P = [[Poly() for _ in range(m)] for _ in range(m)]
    xi = [None] * m
    for i, lam in enumerate(labels):
        P[i][i] = diag_polys[lam]
        for j in range(i):
            mu = labels[j]
            acc = Poly()
            for k in range(j):
                if P[i][k] and P[j][k]:
                    acc = acc + P[i][k] * xi[k] * P[j][k]
            if le(mu, lam):
                num = om(lam, mu) - acc
                entry = RatFunc(num, xi[j] * diag_polys[mu])
                try:
                    P[i][j] = entry.to_poly()
                except NotPolynomial as exc:
                    raise NotPolynomial(
                        f"P entry at ({lam}, {mu}) does not clear denominators: {exc}"
                    ) from exc
            else:
                # incomparable: P[i][j] = 0 and the equation must already hold
                if acc != om(lam, mu):
                    raise InconsistentSystem(
                        f"overdetermined equation fails at incomparable pair "
                        f"({lam}, {mu}): difference {om(lam, mu) - acc}"
                    )
        acc = Poly()
        for k in range(i):
            if P[i][k]:
                acc = acc + P[i][k] * P[i][k] * xi[k]
        num = om(lam, lam) - acc
        entry = RatFunc(num, diag_polys[lam] * diag_polys[lam])
        try:
            xi[i] = entry.to_poly()
        except NotPolynomial as exc:
            raise NotPolynomial(
                f"Lambda entry at {lam} does not clear denominators: {exc}") from exc
        if not xi[i]:
            raise ZeroDiagonal(f"Lambda entry at {lam} is zero")
        if not xi[i].is_integral():
            raise NotPolynomial(f"Lambda entry at {lam} has non-integer coefficients: {xi[i]}")

    solution = KostkaSolution(
        rank=omega.n,
        r=omega.r,
        labels=labels,
        P=PolyMatrix(labels, labels, P),
        Lambda=tuple(xi),
        refinement_used=labels,
    )
    if verify:
        _verify_product(solution, omega)
    return solution


def _verify_product(solution, omega):
    labels = solution.labels
    m = len(labels)
    P = solution.P.rows
    xi = solution.Lambda
    pos = {lab: omega.labels.index(lab) for lab in labels}
    for i in range(m):
        for j in range(i + 1):
            acc = Poly()
            for k in range(min(i, j) + 1):
                if P[i][k] and P[j][k]:
                    acc = acc + P[i][k] * xi[k] * P[j][k]
            if acc != omega.entries[pos[labels[i]]][pos[labels[j]]]:
                raise InconsistentSystem(
                    f"post-hoc product check fails at ({labels[i]}, {labels[j]})")


def modified_kostka(n, r, refinement=None, verify=True):
    """Kostka solution for double partitions (r=2) or partitions (r=1).

    r=2 uses the closure order on bipartitions with diagonal t^{a(lam)};
    r=1 uses the dominance order with diagonal t^{n(lam)}.
    """
    omega = omega_matrix(n, r)
    if r == 2:
        le, diag = exotic_le, lambda lab: Poly.monomial(a_value(lab))
    elif r == 1:
        le, diag = dominance_le, lambda lab: Poly.monomial(n_value(lab))
    else:
        raise ValueError(f"r must be 1 or 2, got {r}")
    return solve(omega, le, diag, refinement=refinement, verify=verify)


def orbit_size_polys(solution):
    """The diagonal of Lambda, keyed by label: |O_M^F| as a polynomial in q."""
    return {lab: solution.Lambda[i] for i, lab in enumerate(solution.labels)}


def is_even_shifted(poly, a):
    """True iff t^{-a} * poly lies in Z[t^2] with integer coefficients."""
    for j, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        if not isinstance(c, int):
            return False
        if j < a or (j - a) % 2 != 0:
            return False
    return True


def evenness_check(solution):
    """Every t^{-a(lam)} Ktilde_{lam,mu}(t) lies in Z[t^2] (r = 2 only)."""
    if solution.r != 2:
        raise ValueError("evenness is a statement about the r=2 table")
    for i, lam in enumerate(solution.labels):
        a = a_value(lam)
        for j in range(i + 1):
            if not is_even_shifted(solution.P.rows[i][j], a):
                return False
    return True
