"""Green-function tables, IC stalk polynomials, and orthogonality checks.

Two families:

  exotic     rows are W_n classes, columns the bipartition orbit labels of
             the exotic nilpotent cone; the unsigned entry at (w, M) is
             sum_L chi^L(w) Ktilde_{L,M}(t) and the actual Green value
             carries the global sign (-1)^n.

  symmetric  rows are S_n classes, columns the partition orbit labels of
             the unipotent part of the symmetric space; the unsigned entry
             at (w, nu) is Psi_w(t) sum_m chi^m(w) Ktilde_{m,nu}(t^2),
             with the same sign exponent n.

All orthogonality relations are verified as exact identities in the
polynomial ring, never merely at sampled q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionInconsistency, EvennessViolation, IdentityFailure
from .characters import (
    centralizer_order,
    character_table,
    gl_order,
    psi_poly,
    sp_order,
    torus_order,
)
from .fake_degrees import omega_matrix
from .partitions import a_value, exotic_le, n_value
from .polynomials import ONE, Poly, RatFunc
from .report import Report
from .solver import is_even_shifted, modified_kostka

FAMILIES = ("exotic", "symmetric")


@dataclass(frozen=True)
class GreenTable:
    family: str
    n: int
    rows: tuple          # class labels
    cols: tuple          # orbit labels
    entries: tuple       # unsigned polynomials, rows x cols
    sign_exponent: int   # full value = (-1)^sign_exponent * entry

    def entry(self, class_label, orbit_label):
        return self.entries[self.rows.index(class_label)][self.cols.index(orbit_label)]

    def signed_value(self, class_label, orbit_label, q):
        v = self.entry(class_label, orbit_label)(q)
        return -v if self.sign_exponent % 2 else v


@dataclass(frozen=True)
class ICTable:
    family: str
    n: int
    labels: tuple
    entries: tuple       # rows = closure labels L, cols = stalk labels M

    def entry(self, lam, mu):
        return self.entries[self.labels.index(lam)][self.labels.index(mu)]


@lru_cache(maxsize=None)
def green_table(family, n):
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "exotic":
        table = character_table("Bn", n)
        sol = modified_kostka(n, 2)
        cols = sol.labels
        rows = table.classes
        entries = []
        for ci in range(len(rows)):
            row = []
            for M in cols:
                acc = Poly()
                for li, L in enumerate(sol.labels):
                    k = sol.P.entry(L, M)
                    if k:
                        acc = acc + table.values[li][ci] * k
                row.append(acc)
            entries.append(tuple(row))
        return GreenTable(family, n, rows, cols, tuple(entries), n)
    table = character_table("Sn", n)
    sol = modified_kostka(n, 1)
    cols = sol.labels
    rows = table.classes
    entries = []
    for ci, (nu, _) in enumerate(rows):
        psi = psi_poly(nu)
        row = []
        for M in cols:
            acc = Poly()
            for li, L in enumerate(sol.labels):
                k = sol.P.entry(L, M)
                if k:
                    acc = acc + table.values[li][ci] * k.subs_t_squared()
            row.append(psi * acc)
        entries.append(tuple(row))
    return GreenTable(family, n, rows, cols, tuple(entries), n)


@lru_cache(maxsize=None)
def ic_table(family, n):
    """Stalk Poincare polynomials of the orbit-closure IC complexes.

    exotic: entry (L, M) is t^{-a(L)} Ktilde_{L,M}(t), a polynomial in t^2
    whose t^{2i} coefficient is the stalk dimension in cohomological
    degree 4i.  symmetric: t^{-2n(lam)} Ktilde_{lam,mu}(t^2).
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if family == "exotic":
        sol = modified_kostka(n, 2)
        labels = sol.labels
        rows = []
        for i, L in enumerate(labels):
            a = a_value(L)
            row = []
            for j in range(len(labels)):
                k = sol.P.rows[i][j]
                if not is_even_shifted(k, a):
                    raise EvennessViolation(f"entry at ({L}, {labels[j]}) is {k}")
                row.append(Poly(k.coeffs[a:]))
            rows.append(tuple(row))
        return ICTable(family, n, labels, tuple(rows))
    sol = modified_kostka(n, 1)
    labels = sol.labels
    rows = []
    for i, lam in enumerate(labels):
        shift = 2 * n_value(lam)
        row = []
        for j in range(len(labels)):
            k = sol.P.rows[i][j].subs_t_squared()
            if k and any(c and idx < shift for idx, c in enumerate(k.coeffs)):
                raise EvennessViolation(f"entry at ({lam}, {labels[j]})")
            row.append(Poly(k.coeffs[shift:]) if k else Poly())
        rows.append(tuple(row))
    return ICTable(family, n, labels, tuple(rows))


def verify_orthogonality_exotic(n, strict=True):
    """Green-function orthogonality over the exotic cone, as identities in q.

    (a) sum_M xi_M G(w,M) G(w',M) = delta_[w],[w'] |Z(w)| |H^F| / |T_w^F|
    (b) the character combination |W|^-1 sum_w chi^L(w) G(w, .) recovers
        the Ktilde row of L, and its pairings recover Omega.
    """
    report = Report(f"orthogonality-exotic n={n}")
    table = character_table("Bn", n)
    sol = modified_kostka(n, 2)
    gt = green_table("exotic", n)
    xi = sol.Lambda
    spq = sp_order(n)
    m = len(gt.rows)
    ok = True
    for i in range(m):
        ti = torus_order(gt.rows[i], "theta")
        for j in range(i + 1):
            lhs = Poly()
            for k in range(len(gt.cols)):
                lhs = lhs + xi[k] * gt.entries[i][k] * gt.entries[j][k]
            if i == j:
                z = centralizer_order("Bn", gt.rows[i])
                good = lhs * ti == z * spq
            else:
                good = not lhs
            if not good:
                ok = False
                report.add(f"class pair {gt.rows[i]} / {gt.rows[j]}", False,
                           f"difference {lhs}")
    report.add("green pairings match centralizer orders", ok)

    # character combinations: Q_L(M) == Ktilde_{L,M}
    order = table.order
    ok = True
    for li, L in enumerate(sol.labels):
        ci = table.irreps.index(L)
        for k, M in enumerate(gt.cols):
            acc = Poly()
            for i in range(m):
                acc = acc + table.sizes[i] * table.values[ci][i] * gt.entries[i][k]
            acc = acc * Fraction(1, order)
            if acc != sol.P.entry(L, M):
                ok = False
                report.add(f"character combination at ({L}, {M})", False)
    report.add("character combinations recover the Kostka matrix", ok)

    # pairings of the combinations recover Omega (Prop 5.5(i) shape)
    omega = omega_matrix(n, 2)
    ok = True
    for i, L in enumerate(sol.labels):
        for j, Lp in enumerate(sol.labels):
            acc = Poly()
            for k in range(len(sol.labels)):
                acc = acc + xi[k] * sol.P.rows[i][k] * sol.P.rows[j][k]
            if acc != omega.entry(L, Lp):
                ok = False
                report.add(f"pairing ({L}, {Lp})", False)
    report.add("pairings of character combinations equal Omega", ok)

    # numeric smoke at small q
    ok = all(
        sum(x(q) * gt.entries[i][k](q) * gt.entries[i][k](q)
            for k, x in enumerate(xi)) * torus_order(gt.rows[i], "theta")(q)
        == centralizer_order("Bn", gt.rows[i]) * spq(q)
        for q in (3, 5, 9) for i in range(m)
    )
    report.add("numeric spot checks q in {3,5,9}", ok)

    if strict and not report.passed:
        raise IdentityFailure(f"exotic orthogonality fails at n={n}", report)
    return report


def verify_orthogonality_symmetric(n, strict=True):
    """Orthogonality for the symmetric-space Green functions, exactly in q."""
    report = Report(f"orthogonality-symmetric n={n}")
    table = character_table("Sn", n)
    sol = modified_kostka(n, 1)
    gt = green_table("symmetric", n)
    xi_sq = tuple(x.subs_t_squared() for x in sol.Lambda)
    spq = sp_order(n)
    glq2 = gl_order(n).subs_t_squared()

    # q^{-n} |Sp_2n(q)| = |GL_n(q^2)|
    report.add("q^-n |H^F| equals |GL_n(q^2)|",
               spq == glq2.shifted(n))

    m = len(gt.rows)
    ok = True
    for i in range(m):
        nui = gt.rows[i][0]
        torus_i = torus_order(gt.rows[i], "iota_theta")
        torus_i_sq = torus_i.subs_t_squared()
        for j in range(i + 1):
            lhs = Poly()
            for k in range(len(gt.cols)):
                lhs = lhs + xi_sq[k] * gt.entries[i][k] * gt.entries[j][k]
            if i == j:
                z = centralizer_order("Sn", gt.rows[i])
                # LHS * |T|^2 * q^n = |Z(w)| * q^{-n}|H^F| * |T^{F^2}| * q^n
                good = lhs * torus_i * torus_i == (z * glq2 * torus_i_sq)
            else:
                good = not lhs
            if not good:
                ok = False
                report.add(f"class pair {gt.rows[i]} / {gt.rows[j]}", False,
                           f"difference {lhs}")
    report.add("symmetric green pairings match centralizer orders", ok)

    # Psi-normalized character combinations recover Ktilde(t^2)
    order = table.order
    ok = True
    for L in sol.labels:
        ci = table.irreps.index((L, ()))
        for k, M in enumerate(gt.cols):
            acc = RatFunc(Poly())
            for i in range(m):
                psi = psi_poly(gt.rows[i][0])
                acc = acc + RatFunc(table.sizes[i] * table.values[ci][i] * gt.entries[i][k], psi)
            acc = acc * RatFunc(Poly.const(Fraction(1, order)))
            if acc != RatFunc(sol.P.entry(L, M).subs_t_squared()):
                ok = False
                report.add(f"character combination at ({L}, {M})", False)
    report.add("Psi-normalized combinations recover Ktilde(t^2)", ok)

    # Prop 5.5(ii): pairings equal Omega(q^2), also via the torus sum
    omega = omega_matrix(n, 1)
    ok = True
    for i, L in enumerate(sol.labels):
        for j, Lp in enumerate(sol.labels):
            acc = Poly()
            for k in range(len(sol.labels)):
                acc = acc + xi_sq[k] * sol.P.rows[i][k].subs_t_squared() * sol.P.rows[j][k].subs_t_squared()
            if acc != omega.entry(L, Lp).subs_t_squared():
                ok = False
                report.add(f"pairing ({L}, {Lp})", False)
            # torus route: |GL_n^{F^2}| |S_n|^-1 sum_w chi chi / |T_w^{F^2}|
            rhs = RatFunc(Poly())
            ciL = table.irreps.index((L, ()))
            ciLp = table.irreps.index((Lp, ()))
            for c in range(m):
                tor = torus_order(gt.rows[c], "iota_theta").subs_t_squared()
                rhs = rhs + RatFunc(table.sizes[c] * table.values[ciL][c] * table.values[ciLp][c], tor)
            rhs = rhs * RatFunc(glq2 * Fraction(1, order))
            if rhs != RatFunc(acc):
                ok = False
                report.add(f"torus-route pairing ({L}, {Lp})", False)
    report.add("pairings equal Omega(q^2) by both routes", ok)

    # definitional consistency: entry / Psi_w is the chi-combination of Ktilde(t^2)
    ok = True
    for i in range(m):
        psi = psi_poly(gt.rows[i][0])
        for k, M in enumerate(gt.cols):
            acc = Poly()
            for li, L in enumerate(sol.labels):
                ci = table.irreps.index((L, ()))
                acc = acc + table.values[ci][i] * sol.P.entry(L, M).subs_t_squared()
            if acc * psi != gt.entries[i][k]:
                ok = False
    report.add("table factors as Psi_w times character combination", ok)

    if strict and not report.passed:
        raise IdentityFailure(f"symmetric orthogonality fails at n={n}", report)
    return report


def springer_dimension_check(n, strict=True):
    """Orbit-dimension bookkeeping for the exotic cone.

    dim X_uni = 2n^2, dim O_L = 2n^2 - 2a(L); the open orbit is ((n); -),
    the point orbit ((); 1^n) has a = n^2 (the reflection count), and the
    orbit-size polynomials have degree equal to the orbit dimension and
    sum to t^{2 n^2}.
    """
    report = Report(f"springer-dimensions n={n}")
    sol = modified_kostka(n, 2)
    dim_cone = 2 * n * n
    top = ((n,), ()) if n else ((), ())
    bottom = ((), (1,) * n) if n else ((), ())
    report.add("open orbit is ((n); -) with a = 0",
               a_value(top) == 0 and all(exotic_le(M, top) for M in sol.labels))
    report.add("a is maximal at ((); 1^n) with value n^2",
               a_value(bottom) == n * n
               and all(a_value(M) <= n * n for M in sol.labels))
    ok_dim = True
    for i, M in enumerate(sol.labels):
        dim_orbit = dim_cone - 2 * a_value(M)
        if dim_orbit < 0 or sol.Lambda[i].degree != dim_orbit:
            ok_dim = False
            report.add(f"orbit dimension at {M}", False,
                       f"deg xi = {sol.Lambda[i].degree}, expected {dim_orbit}")
    report.add("deg xi_M = dim O_M for every orbit", ok_dim)
    total = Poly()
    for x in sol.Lambda:
        total = total + x
    report.add("orbit sizes sum to t^(2 n^2)", total == Poly.monomial(dim_cone))
    gt = green_table("exotic", n)
    open_col = gt.cols.index(top)
    report.add("open-orbit column of the unsigned table is 1",
               all(gt.entries[i][open_col] == ONE for i in range(len(gt.rows))))
    if strict and not report.passed:
        raise DimensionInconsistency(f"springer dimension check fails at n={n}")
    return report
