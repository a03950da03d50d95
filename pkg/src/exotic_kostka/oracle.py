"""Brute-force finite-field verification at small rank.

Everything here works on the Lie-algebra model of the exotic cone: the
minus-theta part of gl_2n (matrices x with xJ antisymmetric) crossed
with the natural 2n-dimensional space, over a small prime field, with
Sp_2n acting by conjugation on x and left multiplication on v.  Orbits
are found by breadth-first search under an explicit generator list and
labeled by locating normal-form representatives.  The transversal-slice
decomposition is checked separately over exact rationals, where the
statement is characteristic-free.

The theta convention is fixed once: theta(g) = J g^-T J^-1 on the group,
theta(x) = -J x^T J^-1 on the Lie algebra, J the Gram matrix of the
symplectic basis (e_1..e_n, f_1..f_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    BudgetExceeded,
    DecompositionFailure,
    InvalidField,
    NonpositiveWeight,
    RankTooLarge,
    SizeMismatch,
    UnlabeledOrbit,
)
from .partitions import bipartitions_of, bsize
from .report import Report

DEFAULT_BUDGET = 1_000_000


# -- small dense matrices over F_p (tuples of tuples) --------------------


def mat_mul(a, b, p):
    m, k, n = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][s] * b[s][j] for s in range(k)) % p for j in range(n))
        for i in range(m)
    )


def mat_vec(a, v, p):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) % p for row in a)


def mat_transpose(a):
    return tuple(tuple(a[i][j] for i in range(len(a))) for j in range(len(a[0])))


def mat_identity(m):
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def mat_inverse(a, p):
    m = len(a)
    aug = [list(a[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, m) if aug[r][col] % p), None)
        if piv is None:
            raise ValueError("matrix not invertible")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = pow(aug[row][col], p - 2, p)
        aug[row] = [(x * inv) % p for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[row])]
        row += 1
    return tuple(tuple(r[m:]) for r in aug)


def mat_rank(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


# -- symplectic context ----------------------------------------------------


@dataclass(frozen=True)
class SymplecticContext:
    n: int
    q: int
    J: tuple
    Jinv: tuple
    generators: tuple  # pairs (g, g inverse)

    @property
    def dim(self):
        return 2 * self.n


def _gram(n):
    m = 2 * n
    J = [[0] * m for _ in range(m)]
    for i in range(n):
        J[i][n + i] = 1
        J[n + i][i] = -1
    return tuple(tuple(r) for r in J)


def _pairing(J, x, y, p):
    return sum(x[i] * J[i][j] * y[j] for i in range(len(x)) for j in range(len(y))) % p


def setup_symplectic(n, q):
    """Fixed form, theta, and a generator list for Sp_2n(F_q), q an odd prime.

    Generators: symplectic transvections along every basis vector plus the
    gl_n-embedded elementary maps e_j -> e_j + e_i, f_i -> f_i - f_j.  Over
    a prime field these root elements generate the full group; the tests
    additionally pin the generated group order for the supported (n, q).
    """
    if not _is_prime(q) or q == 2:
        raise InvalidField(f"q={q} must be an odd prime")
    if n < 1 or n > 3:
        raise RankTooLarge("the brute-force oracle supports 1 <= n <= 3")
    m = 2 * n
    J = _gram(n)
    basis = [tuple(1 if k == i else 0 for k in range(m)) for i in range(m)]
    gens = []
    for u in basis:
        g = tuple(
            tuple((int(i == j) + _pairing(J, basis[j], u, q) * u[i]) % q for j in range(m))
            for i in range(m)
        )
        gens.append(g)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            g = [[int(a == b) for b in range(m)] for a in range(m)]
            g[i][j] = 1            # e_j -> e_j + e_i
            g[n + j][n + i] = q - 1  # f_i -> f_i - f_j
            gens.append(tuple(tuple(r) for r in g))
    pairs = tuple((g, mat_inverse(g, q)) for g in gens)
    return SymplecticContext(n, q, J, mat_inverse(J, q), pairs)


def theta_group(ctx, g):
    inv_t = mat_transpose(mat_inverse(g, ctx.q))
    return mat_mul(mat_mul(ctx.J, inv_t, ctx.q), ctx.Jinv, ctx.q)


def theta_lie(ctx, x):
    m = mat_mul(mat_mul(ctx.J, mat_transpose(x), ctx.q), ctx.Jinv, ctx.q)
    return tuple(tuple((-e) % ctx.q for e in row) for row in m)


def _antisymmetric_matrices(n, q):
    """All antisymmetric 2n x 2n matrices over F_q, by upper triangle."""
    m = 2 * n
    slots = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for vals in product(range(q), repeat=len(slots)):
        a = [[0] * m for _ in range(m)]
        for (i, j), v in zip(slots, vals):
            a[i][j] = v
            a[j][i] = (-v) % q
        yield tuple(tuple(r) for r in a)


def _is_nilpotent(x, p):
    m = len(x)
    y = x
    for _ in range(m):
        if all(all(e == 0 for e in row) for row in y):
            return True
        y = mat_mul(y, x, p)
    return all(all(e == 0 for e in row) for row in y)


def enumerate_exotic_cone(ctx, budget=DEFAULT_BUDGET):
    """All (x, v) with x nilpotent in the minus-theta part and v in V."""
    n, q = ctx.n, ctx.q
    candidates = q ** (n * (2 * n - 1))
    if candidates > budget:
        raise BudgetExceeded(f"{candidates} minus-theta candidates exceed budget {budget}")
    nilpotents = []
    for a in _antisymmetric_matrices(n, q):
        x = mat_mul(a, ctx.Jinv, q)
        if _is_nilpotent(x, q):
            nilpotents.append(x)
    total = len(nilpotents) * q ** (2 * n)
    if total > budget:
        raise BudgetExceeded(f"{total} cone points exceed budget {budget}")
    vectors = list(product(range(q), repeat=2 * n))
    return [(x, v) for x in nilpotents for v in vectors]


def _orbit_partition(ctx, points):
    """BFS under the generator list; returns a list of point lists."""
    q = ctx.q
    remaining = dict.fromkeys(points)
    orbits = []
    for seed in points:
        if seed not in remaining:
            continue
        queue = [seed]
        del remaining[seed]
        members = [seed]
        while queue:
            x, v = queue.pop()
            for g, ginv in ctx.generators:
                nx = mat_mul(mat_mul(g, x, q), ginv, q)
                nv = mat_vec(g, v, q)
                pt = (nx, nv)
                if pt in remaining:
                    del remaining[pt]
                    queue.append(pt)
                    members.append(pt)
        orbits.append(members)
    return orbits


@dataclass(frozen=True)
class OrbitCensus:
    orbits: tuple  # (label, size, representative) triples
    total: int

    def size_of(self, label):
        for lab, size, _ in self.orbits:
            if lab == label:
                return size
        raise KeyError(label)

    def representative(self, label):
        for lab, _, rep in self.orbits:
            if lab == label:
                return rep
        raise KeyError(label)


def normal_form(ctx, b):
    """Normal-form point of the orbit labeled by the bipartition b.

    With nu = mu1 + mu2 componentwise, y is the nilpotent Jordan matrix of
    type nu on the Lagrangian spanned by the e_i (basis vectors allocated
    block-wise), x = y - theta(y), and v picks the mu1-th vector of each
    block.
    """
    if bsize(b) != ctx.n:
        raise SizeMismatch(f"|{b}| != {ctx.n}")
    mu1, mu2 = b
    q = ctx.q
    n, m2 = ctx.n, 2 * ctx.n
    nu = tuple(
        (mu1[i] if i < len(mu1) else 0) + (mu2[i] if i < len(mu2) else 0)
        for i in range(max(len(mu1), len(mu2)))
    )
    offsets = []
    off = 0
    for part in nu:
        offsets.append(off)
        off += part
    y = [[0] * m2 for _ in range(m2)]
    for i, part in enumerate(nu):
        for j in range(2, part + 1):
            y[offsets[i] + j - 2][offsets[i] + j - 1] = 1
    y = tuple(tuple(r) for r in y)
    ty = theta_lie(ctx, y)
    x = tuple(tuple((a - bb) % q for a, bb in zip(ra, rb)) for ra, rb in zip(y, ty))
    v = [0] * m2
    for i, part in enumerate(mu1):
        if part:
            v[offsets[i] + part - 1] = 1
    return (x, tuple(v))


def jordan_type(x, p):
    """Partition of Jordan block sizes of a nilpotent matrix over F_p."""
    m = len(x)
    ranks = [m]
    y = mat_identity(m)
    for _ in range(m):
        y = mat_mul(y, x, p)
        ranks.append(mat_rank(y, p))
        if ranks[-1] == 0:
            break
    blocks = []
    for k in range(1, len(ranks)):
        atleast_k = ranks[k - 1] - ranks[k]
        blocks.append(atleast_k)
    parts = []
    for k in range(len(blocks)):
        count = blocks[k] - (blocks[k + 1] if k + 1 < len(blocks) else 0)
        parts.extend([k + 1] * count)
    return tuple(sorted(parts, reverse=True))


def orbit_decompose(ctx, points):
    """Partition the point set into orbits and label each by its normal form."""
    orbits = _orbit_partition(ctx, points)
    forms = {normal_form(ctx, b): b for b in bipartitions_of(ctx.n)}
    labeled = []
    for members in orbits:
        label = None
        for pt in members:
            if pt in forms:
                if label is not None:
                    raise UnlabeledOrbit(f"orbit contains two normal forms: {label}")
                label = forms[pt]
        if label is None:
            raise UnlabeledOrbit("orbit contains no normal-form representative")
        labeled.append((label, len(members), members[0]))
    labeled.sort(key=lambda item: bipartitions_of(ctx.n).index(item[0]))
    total = sum(size for _, size, _ in labeled)
    if total != len(points):
        raise UnlabeledOrbit("orbit sizes do not sum to the point count")
    if len(labeled) != len(set(lab for lab, _, _ in labeled)):
        raise UnlabeledOrbit("duplicate orbit labels")
    return OrbitCensus(tuple(labeled), total)


# -- flags and split Green values ------------------------------------------


def _rref_mod(rows, p):
    rows = [list(r) for r in rows if any(e % p for e in r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return tuple(tuple(r) for r in rows[:rank])


def _in_span(basis_rref, vec, p):
    if not any(vec):
        return True
    combined = _rref_mod(list(basis_rref) + [list(vec)], p)
    return len(combined) == len(basis_rref)


def _perp_basis(ctx, basis):
    """Basis of the symplectic perp of the span of `basis`."""
    q, m = ctx.q, 2 * ctx.n
    # w in perp iff (J b)^T w = 0 for each basis vector b
    rows = [mat_vec(mat_transpose(ctx.J), b, q) for b in basis]
    rref = _rref_mod(rows, q)
    pivots = []
    for r in rref:
        pivots.append(next(i for i, e in enumerate(r) if e))
    free = [i for i in range(m) if i not in pivots]
    out = []
    for f in free:
        w = [0] * m
        w[f] = 1
        for r, pv in zip(rref, pivots):
            w[pv] = (-r[f]) % q
        out.append(tuple(w))
    return out


def _isotropic_flags(ctx):
    """All complete isotropic flags, as chains of rref-canonical subspaces."""
    q, n, m = ctx.q, ctx.n, 2 * ctx.n
    chains = [()]
    for _level in range(n):
        nxt = {}
        for chain in chains:
            current = chain[-1] if chain else ()
            perp = _perp_basis(ctx, current) if current else \
                [tuple(1 if k == i else 0 for k in range(m)) for i in range(m)]
            for coeffs in product(range(q), repeat=len(perp)):
                if not any(coeffs):
                    continue
                w = tuple(sum(c * b[i] for c, b in zip(coeffs, perp)) % q
                          for i in range(m))
                if _in_span(current, w, q):
                    continue
                new = _rref_mod(list(current) + [w], q)
                key = chain + (new,)
                nxt[key] = None
        chains = list(nxt)
    return chains


def _stable(x, subspace, p):
    return all(_in_span(subspace, mat_vec(x, b, p), p) for b in subspace)


def split_green_count(ctx, point):
    """Number of F_q-rational complete isotropic flags fixed by a cone point.

    Counts flags F_1 c ... c F_n with x F_i c F_i, x F_i-perp c F_i-perp,
    and v in F_n; equals the unsigned Green value at the identity torus
    evaluated at q.
    """
    x, v = point
    q = ctx.q
    count = 0
    for chain in _isotropic_flags(ctx):
        ok = True
        for sub in chain:
            if not _stable(x, sub, q):
                ok = False
                break
            perp = _rref_mod(_perp_basis(ctx, sub), q)
            if not _stable(x, perp, q):
                ok = False
                break
        if ok and _in_span(chain[-1], v, q):
            count += 1
    return count


def full_space_orbit_count(ctx, budget=DEFAULT_BUDGET):
    """H^F-orbit count on the full space: invertible part times vectors."""
    n, q = ctx.n, ctx.q
    candidates = q ** (n * (2 * n - 1))
    if candidates > budget:
        raise BudgetExceeded(f"{candidates} antisymmetric candidates exceed budget {budget}")
    group_side = []
    for a in _antisymmetric_matrices(n, q):
        try:
            mat_inverse(a, q)
        except ValueError:
            continue
        group_side.append(mat_mul(a, ctx.Jinv, q))
    total = len(group_side) * q ** (2 * n)
    if total > budget:
        raise BudgetExceeded(f"{total} full-space points exceed budget {budget}")
    vectors = list(product(range(q), repeat=2 * n))
    points = [(g, v) for g in group_side for v in vectors]
    return len(_orbit_partition(ctx, points))


# -- transversal slice over the rationals -----------------------------------
#
# The statement being verified is characteristic-free for odd q, so the
# rank computations run over exact rationals.  The window-indexed spanning set
# {z_{i1,i2,s}, ...} complements [g, x] in g and its index windows give
# the contracting weights, but it is not stable under theta (theta maps
# the weight-w piece of a unit to a different weight), so the theta-split
# decomposition is verified on the canonical stable complement z(F)
# instead, where (x, H, F) is a normal sl2-triple with H fixed and F
# negated by theta.  z(F) has the same dimension, complements [g, x],
# and its minus-part realizes the slice directions.


def _q_rref(rows):
    rows = [[Fraction(e) for e in r] for r in rows]
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rows[:rank]


def _q_rank(rows):
    return len(_q_rref(rows))


def _q_nullspace(columns, height):
    """Coefficient vectors c with sum c_j columns[j] = 0."""
    k = len(columns)
    mat = [[columns[j][i] for j in range(k)] for i in range(height)]
    red = _q_rref(mat)
    pivots = [next(i for i, e in enumerate(r) if e) for r in red]
    out = []
    for free in (i for i in range(k) if i not in pivots):
        sol = [Fraction(0)] * k
        sol[free] = Fraction(1)
        for r, pv in zip(red, pivots):
            sol[pv] = -r[free]
        out.append(sol)
    return out


class _RationalSlice:
    """Scratch space for the slice computation of one bipartition."""

    def __init__(self, b):
        mu1, mu2 = b
        self.n = bsize(b)
        n, m2 = self.n, 2 * bsize(b)
        self.m2 = m2
        blocks = max(len(mu1), len(mu2))
        self.blocks = blocks
        self.nu = tuple((mu1[i] if i < len(mu1) else 0) + (mu2[i] if i < len(mu2) else 0)
                        for i in range(blocks))
        self.p1 = tuple((mu1[i] if i < len(mu1) else 0) for i in range(blocks))
        self.p2 = tuple((mu2[i] if i < len(mu2) else 0) for i in range(blocks))
        offsets = []
        off = 0
        for part in self.nu:
            offsets.append(off)
            off += part
        self.offsets = offsets
        J = [[Fraction(0)] * m2 for _ in range(m2)]
        for i in range(n):
            J[i][n + i] = Fraction(1)
            J[n + i][i] = Fraction(-1)
        self.J = J
        self.Jinv = [[-e for e in row] for row in J]  # J^2 = -1

    def e_index(self, i, j):
        return self.offsets[i] + j - 1

    def f_index(self, i, j):
        return self.n + self.offsets[i] + j - 1

    def matmul(self, a, b):
        m2 = self.m2
        return [[sum(a[i][k] * b[k][j] for k in range(m2)) for j in range(m2)]
                for i in range(m2)]

    def theta(self, z):
        m2 = self.m2
        zt = [[z[j][i] for j in range(m2)] for i in range(m2)]
        out = self.matmul(self.matmul(self.J, zt), self.Jinv)
        return [[-e for e in row] for row in out]

    def bracket(self, a, b):
        ab, ba = self.matmul(a, b), self.matmul(b, a)
        return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]

    def zero(self):
        return [[Fraction(0)] * self.m2 for _ in range(self.m2)]

    def unit(self, r, c):
        z = self.zero()
        z[r][c] = Fraction(1)
        return z

    def vec(self, z):
        return tuple(e for row in z for e in row)

    def unvec(self, w):
        m2 = self.m2
        return [[w[r * m2 + c] for c in range(m2)] for r in range(m2)]


def slice_check(b, strict=True):
    """Transversal-slice decomposition for the orbit labeled b, over Q.

    Rank checks: the window-indexed spanning set complements [g, x] in g; the
    theta-stable sl2 complement z(F) does too and splits as required in
    (the minus part of) g; the slice directions z(F)^(-theta) + D are
    complementary to the orbit tangent space {([z, x], zv)}; the window
    weights mu1_{i2} - mu1_{i1} + s + 1 and the D weights are >= 1; and
    the contracting action on z(F)^(-theta) has weights >= 2.
    """
    report = Report(f"slice {b}")
    n = bsize(b)
    if n == 0:
        report.add("empty rank: nothing to check", True)
        return report
    if n > 3:
        raise RankTooLarge("slice checks support |b| <= 3")
    S = _RationalSlice(b)
    m2, blocks, nu, p1, p2 = S.m2, S.blocks, S.nu, S.p1, S.p2
    dim_g = m2 * m2
    dim_minus = n * (2 * n - 1)

    # nilpotent of type nu on the e-side, with the sl2 partners
    y, hM, fM = S.zero(), S.zero(), S.zero()
    for i, part in enumerate(nu):
        for j in range(1, part + 1):
            hM[S.e_index(i, j)][S.e_index(i, j)] = Fraction(part + 1 - 2 * j)
        for j in range(2, part + 1):
            y[S.e_index(i, j - 1)][S.e_index(i, j)] = Fraction(1)
        for j in range(1, part):
            fM[S.e_index(i, j + 1)][S.e_index(i, j)] = Fraction(j * (part - j))
    ty = S.theta(y)
    x = [[a - bb for a, bb in zip(ra, rb)] for ra, rb in zip(y, ty)]
    H = [[a + bb for a, bb in zip(ra, rb)] for ra, rb in zip(hM, S.theta(hM))]
    F = [[a - bb for a, bb in zip(ra, rb)] for ra, rb in zip(fM, S.theta(fM))]
    report.add("(x, H, F) is a normal sl2-triple",
               S.bracket(H, x) == [[2 * e for e in row] for row in x]
               and S.bracket(H, F) == [[-2 * e for e in row] for row in F]
               and S.bracket(x, F) == H
               and S.theta(x) == [[-e for e in row] for row in x]
               and S.theta(H) == H)
    v = [Fraction(0)] * m2
    for i in range(blocks):
        if p1[i]:
            v[S.e_index(i, p1[i])] = Fraction(1)

    # the window-indexed spanning set (v'_{i,j} as the j-th dual vector)
    u_window = []
    weights_ok = True
    for i1 in range(blocks):
        for i2 in range(blocks):
            for s in range(max(0, nu[i1] - nu[i2]), nu[i1]):
                if p1[i2] - p1[i1] + s + 1 < 1:
                    weights_ok = False
                u_window.append(S.unit(S.e_index(i1, s + 1), S.e_index(i2, 1)))
                u_window.append(S.unit(S.f_index(i1, nu[i1] - s), S.e_index(i2, 1)))
                u_window.append(S.unit(S.e_index(i1, s + 1), S.f_index(i2, nu[i2])))
                u_window.append(S.unit(S.f_index(i1, nu[i1] - s), S.f_index(i2, nu[i2])))
    if not weights_ok and strict:
        raise NonpositiveWeight(f"window weight <= 0 for {b}")
    report.add("window weights mu1_i2 - mu1_i1 + s + 1 are all >= 1", weights_ok)

    fullb = [S.unit(r, c) for r in range(m2) for c in range(m2)]
    bracket_vecs = [S.vec(S.bracket(z, x)) for z in fullb]
    rank_bracket = _q_rank(bracket_vecs)
    window_vecs = [S.vec(z) for z in u_window]
    ok1 = (rank_bracket + len(u_window) == dim_g
           and _q_rank(bracket_vecs + window_vecs) == dim_g
           and _q_rank(window_vecs) == len(u_window))
    if not ok1 and strict:
        raise DecompositionFailure(f"[g,x] + spanning set != g for {b}")
    report.add("[g, x] (+) span{z_{i1,i2,s}, ...} = g", ok1)

    # z(F): theta-stable complement of [g, x], same dimension
    adF_cols = [S.vec(S.bracket(z, F)) for z in fullb]
    zF = []
    for sol in _q_nullspace(adF_cols, dim_g):
        w = [Fraction(0)] * dim_g
        for c, z in zip(sol, fullb):
            if c:
                zv = S.vec(z)
                w = [a + c * bb for a, bb in zip(w, zv)]
        zF.append(tuple(w))
    ok_zf = (len(zF) == len(u_window)
             and rank_bracket + len(zF) == dim_g
             and _q_rank(bracket_vecs + [list(z) for z in zF]) == dim_g)
    theta_zF = [S.vec(S.theta(S.unvec(z))) for z in zF]
    ok_stable = _q_rank([list(z) for z in zF] + theta_zF) == len(zF)
    if not (ok_zf and ok_stable) and strict:
        raise DecompositionFailure(f"[g,x] + z(F) != g or z(F) not theta-stable for {b}")
    report.add("[g, x] (+) z(F) = g with z(F) theta-stable", ok_zf and ok_stable)

    # z(F)^(-theta) and the minus-part split
    plus_cols = []
    for z in zF:
        zm = S.unvec(z)
        tz = S.theta(zm)
        plus_cols.append(S.vec([[a + bb for a, bb in zip(ra, rb)] for ra, rb in zip(zm, tz)]))
    u_minus = []
    for sol in _q_nullspace(plus_cols, dim_g):
        w = [Fraction(0)] * dim_g
        for c, z in zip(sol, zF):
            if c:
                w = [a + c * bb for a, bb in zip(w, z)]
        u_minus.append(tuple(w))
    theta_cols = [S.vec(S.theta(z)) for z in fullb]
    fixed_cols = []
    for idx in range(dim_g):
        col = list(theta_cols[idx])
        col[idx] -= 1
        fixed_cols.append(col)
    g_theta = []
    for sol in _q_nullspace(fixed_cols, dim_g):
        w = [Fraction(0)] * dim_g
        for c, z in zip(sol, fullb):
            if c:
                zv = S.vec(z)
                w = [a + c * bb for a, bb in zip(w, zv)]
        g_theta.append(tuple(w))
    bracket_theta = [S.vec(S.bracket(S.unvec(z), x)) for z in g_theta]
    ok2 = (_q_rank(bracket_theta) + len(u_minus) == dim_minus
           and _q_rank(bracket_theta + [list(u) for u in u_minus]) == dim_minus)
    if not ok2 and strict:
        raise DecompositionFailure(f"[g^theta,x] + z(F)^(-theta) != g^(-theta) for {b}")
    report.add("[g^theta, x] (+) z(F)^(-theta) = g^(-theta)", ok2)

    # D inside V: positions above the mu1 mark on the e side, the first
    # mu2 dual positions on the f side; all with positive xi' weights
    d_vecs = []
    d_weights_ok = True
    for i in range(blocks):
        for j in range(p1[i] + 1, nu[i] + 1):
            w = [Fraction(0)] * m2
            w[S.e_index(i, j)] = Fraction(1)
            d_vecs.append(w)
            if j - p1[i] < 1:
                d_weights_ok = False
        for j in range(1, p2[i] + 1):
            w = [Fraction(0)] * m2
            w[S.f_index(i, j)] = Fraction(1)
            d_vecs.append(w)
            if p2[i] - j + 1 < 1:
                d_weights_ok = False
    report.add("slice directions in V have positive weights", d_weights_ok)

    # tangent space of the orbit at (x, v) against the slice directions
    tangent = []
    for z in g_theta:
        zm = S.unvec(z)
        br = S.bracket(zm, x)
        zv = [sum(zm[r][c] * v[c] for c in range(m2)) for r in range(m2)]
        tangent.append(S.vec(br) + tuple(zv))
    slice_vecs = [tuple(w) + (Fraction(0),) * m2 for w in u_minus]
    slice_vecs += [(Fraction(0),) * dim_g + tuple(w) for w in d_vecs]
    dim_total = dim_minus + m2
    ok3 = (_q_rank(tangent) + len(slice_vecs) == dim_total
           and _q_rank(tangent + slice_vecs) == dim_total)
    if not ok3 and strict:
        raise DecompositionFailure(
            f"tangent (+) (z(F)^(-theta) + D) != g^(-theta) + V for {b}")
    report.add("tangent space (+) slice directions span g^(-theta) + V", ok3)

    # contraction: ad H weights on z(F)^(-theta) are <= 0, so the action
    # t^2 Ad(t^(-H)) scales every slice direction by t^(2 + |weight|)
    h_diag = [H[i][i] for i in range(m2)]
    ok_contract = True
    base = [list(u) for u in u_minus]
    for w in u_minus:
        components = {}
        for idx, c in enumerate(w):
            if c:
                r, cidx = divmod(idx, m2)
                wt = h_diag[r] - h_diag[cidx]
                components.setdefault(wt, [Fraction(0)] * dim_g)[idx] = c
        for wt, comp in components.items():
            if wt > 0:
                ok_contract = False
            if _q_rank(base + [comp]) != len(u_minus):
                ok_contract = False
    if not ok_contract and strict:
        raise NonpositiveWeight(f"contracting action fails on z(F)^(-theta) for {b}")
    report.add("contracting action has weights >= 2 on the slice", ok_contract)
    return report
