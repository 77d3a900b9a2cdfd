"""Exact lattice geometry for positive definite rational forms.

Point enumeration in ellipsoids is done with a rational LDL^T decomposition
and exact integer interval bounds, so every routine here (shortest vectors,
Minkowski reduction, closest-vector search, Voronoi cells and the covering
radius rd) is exact.  Floating point only appears as a prefilter in the
Voronoi vertex search; every accepted vertex is re-verified exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import floor, isqrt, sqrt
from typing import NamedTuple, Optional

from .errors import (
    NonSymmetric,
    NotPositiveDefinite,
    RankTooLarge,
)
from .rational import (
    RationalMatrix,
    gram_eval,
    is_positive_semidefinite,
    rat,
    vec,
)


def _ldl(m: RationalMatrix):
    """m = r^T diag(d) r with r unit upper triangular.  Positive definiteness
    is certified as a side effect: every d[i] must be positive."""
    if not m.is_symmetric():
        raise NonSymmetric("quadratic form must be symmetric")
    n = m.nrows
    a = [list(row) for row in m.rows]
    d = []
    r = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        if a[i][i] <= 0:
            raise NotPositiveDefinite("quadratic form is not positive definite")
        d.append(a[i][i])
        for j in range(i + 1, n):
            r[i][j] = a[i][j] / d[i]
        for p in range(i + 1, n):
            for q in range(p, n):
                a[p][q] -= a[i][p] * a[i][q] / d[i]
                a[q][p] = a[p][q]
    return d, r


def _floor_plus_sqrt(q: Fraction, r: Fraction) -> int:
    """floor(q + sqrt(r)) for rationals with r >= 0, exactly."""
    # float guess, then exact adjustment; n <= q + sqrt(r) iff n - q <= sqrt(r)
    def le(n):
        t = n - q
        return t <= 0 or t * t <= r

    try:
        n = floor(float(q) + sqrt(float(r)))
    except (OverflowError, ValueError):
        n = int(q) + isqrt(int(r)) + 1
    while le(n + 1):
        n += 1
    while not le(n):
        n -= 1
    return n


def _ceil_minus_sqrt(q: Fraction, r: Fraction) -> int:
    return -_floor_plus_sqrt(-q, r)


def ellipsoid_points(m: RationalMatrix, shift=None, bound=0):
    """All integer vectors u with (u + shift)^T m (u + shift) <= bound.

    The cutoff is closed: boundary points are included.  Order is the
    deterministic recursion order (last coordinate outermost).
    """
    n = m.nrows
    c = vec(shift) if shift is not None else tuple(Fraction(0) for _ in range(n))
    if len(c) != n:
        from .errors import DimensionMismatch

        raise DimensionMismatch("shift length differs from matrix size")
    bound = rat(bound)
    d, r = _ldl(m)
    out = []
    x = [0] * n

    def descend(i, remaining):
        if i < 0:
            out.append(tuple(x))
            return
        # offset of coordinate i contributed by already fixed coordinates
        t = c[i] + sum(r[i][j] * (x[j] + c[j]) for j in range(i + 1, n))
        radius2 = remaining / d[i]
        lo = _ceil_minus_sqrt(-t, radius2)
        hi = _floor_plus_sqrt(-t, radius2)
        for xi in range(lo, hi + 1):
            x[i] = xi
            descend(i - 1, remaining - d[i] * (xi + t) ** 2)
        x[i] = 0

    if bound >= 0:
        descend(n - 1, bound)
    return out


def _canonical_sign(u):
    for entry in u:
        if entry > 0:
            return u
        if entry < 0:
            return tuple(-x for x in u)
    return u


class ShortestVectors(NamedTuple):
    minimum: Fraction
    vectors: tuple


def shortest_vectors(m: RationalMatrix) -> ShortestVectors:
    """Minimum of the form on nonzero integer vectors, with all minimizers up
    to sign (canonical sign: first nonzero entry positive)."""
    n = m.nrows
    _ldl(m)
    cap = min(m[i, i] for i in range(n))
    pts = [u for u in ellipsoid_points(m, None, cap) if any(u)]
    minimum = min(gram_eval(m, u) for u in pts)
    vectors = sorted({_canonical_sign(u) for u in pts if gram_eval(m, u) == minimum})
    return ShortestVectors(minimum, tuple(vectors))


class ReducedBasis(NamedTuple):
    gram: RationalMatrix
    transform: RationalMatrix


def _extendable(columns, n) -> bool:
    """Whether the given integer columns span a primitive sublattice of Z^n,
    i.e. extend to a basis.  True exactly when all Smith invariants are 1."""
    from .rational import snf

    b = RationalMatrix.from_columns(columns)
    _u, d, _v = snf(b)
    return all(d[i, i] == 1 for i in range(len(columns)))


def minkowski_reduce(m: RationalMatrix) -> ReducedBasis:
    """Greedy successive-minimum reduction: the k-th basis vector is a
    shortest vector that keeps the partial basis extendable to a basis of Z^n.
    Supported for n <= 4, where this produces a Minkowski reduced gram."""
    n = m.nrows
    if n >= 5:
        raise RankTooLarge("reduction is only supported up to rank 4")
    _ldl(m)
    basis = []
    for _k in range(n):
        cap = max(m[i, i] for i in range(n))
        picked = None
        while picked is None:
            cands = sorted(
                {
                    _canonical_sign(u)
                    for u in ellipsoid_points(m, None, cap)
                    if any(u)
                },
                key=lambda u: (gram_eval(m, u), u),
            )
            for u in cands:
                if _extendable(basis + [u], n):
                    picked = u
                    break
            cap *= 2
        basis.append(picked)
    g = RationalMatrix.from_columns(basis)
    return ReducedBasis(gram=g.T * m * g, transform=g)


def md(m: RationalMatrix) -> Fraction:
    """Largest diagonal entry of the Minkowski reduced gram matrix."""
    gram = minkowski_reduce(m).gram
    return max(gram[i, i] for i in range(gram.nrows))


def cvp_minimize(m: RationalMatrix, shift):
    """Minimize (u + shift)^T m (u + shift) over integer u.

    Returns (value, minimizers) with the minimizers sorted.
    """
    c = vec(shift)
    u0 = tuple(floor(-x + Fraction(1, 2)) for x in c)
    budget = gram_eval(m, tuple(Fraction(a) + b for a, b in zip(u0, c)))
    pts = ellipsoid_points(m, c, budget)
    vals = [(gram_eval(m, tuple(Fraction(a) + b for a, b in zip(u, c))), u) for u in pts]
    best = min(v for v, _ in vals)
    return best, sorted(u for v, u in vals if v == best)


class VoronoiData(NamedTuple):
    relevant: tuple
    vertices: tuple
    radius: Fraction


def _solve_float(a_rows, b):
    """Gaussian elimination with partial pivoting.  None when near singular."""
    n = len(b)
    a = [row[:] + [b[i]] for i, row in enumerate(a_rows)]
    for col in range(n):
        piv = max(range(col, n), key=lambda i: abs(a[i][col]))
        if abs(a[piv][col]) < 1e-9:
            return None
        a[col], a[piv] = a[piv], a[col]
        for i in range(n):
            if i != col:
                f = a[i][col] / a[col][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def voronoi_cell(m: RationalMatrix) -> VoronoiData:
    """Voronoi relevant vectors, cell vertices, and the maximum of the form
    over the cell (the covering radius of the form's torus).

    Relevant vectors come from the 2-torsion classes: a class contributes a
    relevant +-pair exactly when its minimum is attained twice.  Vertices are
    intersections of n facet hyperplanes that satisfy all facet inequalities;
    a float prefilter discards far-off intersections before exact checks.
    """
    n = m.nrows
    if n >= 5:
        raise RankTooLarge("voronoi cells are only supported up to rank 4")
    _ldl(m)
    relevant = []
    for cls in product((0, 1), repeat=n):
        if not any(cls):
            continue
        half = tuple(Fraction(x, 2) for x in cls)
        _val, ws = cvp_minimize(m, half)
        if len(ws) == 2:
            for w in ws:
                relevant.append(tuple(x + 2 * wi for x, wi in zip(cls, w)))
    relevant.sort(key=lambda v: (gram_eval(m, v), v))
    # facet data: normal m*v, offset m[v]/2
    normals = [m * v for v in relevant]
    offsets = [gram_eval(m, v) / 2 for v in relevant]
    normals_f = [[float(x) for x in row] for row in normals]
    offsets_f = [float(x) for x in offsets]
    pair_id = {}
    for i, v in enumerate(relevant):
        pair_id[i] = min(v, tuple(-x for x in v))
    vertices = set()
    for idx in combinations(range(len(relevant)), n):
        if len({pair_id[i] for i in idx}) < n:
            continue
        xf = _solve_float([normals_f[i] for i in idx], [offsets_f[i] for i in idx])
        if xf is not None:
            viol = max(
                sum(a * b for a, b in zip(nf, xf)) - of
                for nf, of in zip(normals_f, offsets_f)
            )
            if viol > 1e-6:
                continue
        mat = RationalMatrix([normals[i] for i in idx])
        if mat.det() == 0:
            continue
        x = mat.inverse() * tuple(offsets[i] for i in idx)
        if all(
            sum(a * b for a, b in zip(nr, x)) <= of
            for nr, of in zip(normals, offsets)
        ):
            vertices.add(x)
    radius = max(gram_eval(m, v) for v in vertices)
    return VoronoiData(
        relevant=tuple(relevant), vertices=tuple(sorted(vertices)), radius=radius
    )


def rd(m: RationalMatrix) -> Fraction:
    """Maximum of the form over the Voronoi cell around the origin."""
    return voronoi_cell(m).radius


def rd_upper_bound(m: RationalMatrix) -> Fraction:
    """n(n+1)/8 times the largest reduced diagonal entry."""
    n = m.nrows
    return Fraction(n * (n + 1), 8) * md(m)


def enumerate_coset_points(m: RationalMatrix, shift, bound):
    """Integer points u with (u + shift)^T m (u + shift) <= bound, together
    with their values, sorted by (value, point).  Closed cutoff."""
    c = vec(shift)
    pts = ellipsoid_points(m, c, bound)
    out = [
        (gram_eval(m, tuple(Fraction(a) + b for a, b in zip(u, c))), u) for u in pts
    ]
    out.sort()
    return [(u, v) for v, u in out]


class DegenerateReduction(NamedTuple):
    kind: str
    kernel: Optional[tuple]
    transform: Optional[RationalMatrix]
    reduced: Optional[RationalMatrix]


def _kernel_vector(m: RationalMatrix):
    """Deterministic primitive integer kernel vector of a singular matrix."""
    from math import gcd

    n = m.nrows
    a = [list(row) for row in m.rows]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for i in range(n):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    free = next(c for c in range(n) if c not in pivots)
    v = [Fraction(0)] * n
    v[free] = Fraction(1)
    for r_i, col in enumerate(pivots):
        v[col] = -a[r_i][free]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    return _canonical_sign(tuple(ints))


def degenerate_index_reduce(m: RationalMatrix) -> DegenerateReduction:
    """Classify a symmetric rational matrix and, when it is positive
    semidefinite with nontrivial kernel, split one kernel direction off by a
    unimodular change of basis.

    The transform g has the kernel vector as its last column, so g^T m g has a
    zero last row and column; the leading block is the reduced form.  For a
    1x1 zero form the reduced block is empty and reported as None.
    """
    from .rational import unimodular_completion

    if not m.is_symmetric():
        raise NonSymmetric("index matrix must be symmetric")
    if not is_positive_semidefinite(m):
        return DegenerateReduction("not_semidefinite", None, None, None)
    if m.det() != 0:
        return DegenerateReduction("definite", None, None, m)
    n = m.nrows
    v = _kernel_vector(m)
    g = unimodular_completion(v)
    conj = g.T * m * g
    assert all(conj[i, n - 1] == 0 and conj[n - 1, i] == 0 for i in range(n))
    reduced = conj.submatrix(range(n - 1), range(n - 1)) if n > 1 else None
    return DegenerateReduction("degenerate", v, g, reduced)
