"""Exact rational linear algebra: matrices, determinants, Smith normal form.

Everything here is exact. Matrix entries are fractions.Fraction, vectors are
plain tuples of Fraction, and all decompositions return integer or rational
matrices that multiply back to the input on the nose.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from .errors import DimensionMismatch, NonSymmetric, NotPrimitive, Singular

Rat = Fraction


def rat(x) -> Fraction:
    """Coerce an int, a 'p/q' string, or a Fraction to Fraction.

    Floats are rejected: everything in this package is exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vec(xs) -> tuple:
    return tuple(rat(x) for x in xs)


def dot(x, y) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch(f"dot: {len(x)} vs {len(y)}")
    return sum((rat(a) * rat(b) for a, b in zip(x, y)), Fraction(0))


def vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vneg(x):
    return tuple(-a for a in x)


def vscale(c, x):
    c = rat(c)
    return tuple(c * a for a in x)


def is_integral_vector(x) -> bool:
    return all(rat(a).denominator == 1 for a in x)


class RationalMatrix:
    """Immutable matrix over the rationals.

    Rows are stored as a tuple of tuples of Fraction.  Multiplication accepts
    another matrix, a vector (tuple/list), or a scalar.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(rat(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("empty matrix")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n, m=None) -> "RationalMatrix":
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "RationalMatrix":
        entries = [rat(x) for x in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols) -> "RationalMatrix":
        cols = [vec(c) for c in cols]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i) -> tuple:
        return self.rows[i]

    def column(self, j) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows))

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)
        return f"RationalMatrix([{body}])"

    def __neg__(self):
        return RationalMatrix([[-x for x in row] for row in self.rows])

    def _binop(self, other, op):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")
        return RationalMatrix(
            [[op(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch("matrix product shapes differ")
            cols = other.columns()
            return RationalMatrix([[dot(row, c) for c in cols] for row in self.rows])
        if isinstance(other, (tuple, list)):
            if self.ncols != len(other):
                raise DimensionMismatch("matrix-vector shapes differ")
            v = vec(other)
            return tuple(dot(row, v) for row in self.rows)
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return RationalMatrix([[c * x for x in row] for row in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def denominator(self) -> int:
        """Least common denominator of all entries."""
        return lcm(*(x.denominator for row in self.rows for x in row))

    def int_rows(self):
        """Entries as plain ints.  Caller must know the matrix is integral."""
        return [[int(x) for x in row] for row in self.rows]

    def det(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch("determinant of a non-square matrix")
        d = self.denominator()
        b = [[int(x * d) for x in row] for row in self.rows]
        return Fraction(_det_bareiss(b), d**self.nrows)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def inverse(self) -> "RationalMatrix":
        if not self.is_square:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col] != 0), None)
            if piv is None:
                raise Singular("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for i in range(n):
                if i != col and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
        return RationalMatrix([row[n:] for row in a])

    def minor(self, drop_row, drop_col) -> "RationalMatrix":
        return RationalMatrix(
            [
                [x for j, x in enumerate(row) if j != drop_col]
                for i, row in enumerate(self.rows)
                if i != drop_row
            ]
        )

    def adjugate(self) -> "RationalMatrix":
        """Classical adjugate, adj(M) * M = det(M) * I.  Works for singular M."""
        if not self.is_square:
            raise DimensionMismatch("adjugate of a non-square matrix")
        n = self.nrows
        if n == 1:
            return RationalMatrix([[1]])
        # adj[i][j] is the (j, i) cofactor
        return RationalMatrix(
            [
                [(-1) ** (i + j) * self.minor(j, i).det() for j in range(n)]
                for i in range(n)
            ]
        )

    def submatrix(self, rows_idx, cols_idx) -> "RationalMatrix":
        return RationalMatrix([[self.rows[i][j] for j in cols_idx] for i in rows_idx])


def adjugate(m: RationalMatrix) -> RationalMatrix:
    return m.adjugate()


def gram_eval(m: RationalMatrix, x) -> Fraction:
    """Quadratic value x^T m x."""
    if m.ncols != len(x):
        raise DimensionMismatch("gram_eval: vector length differs from matrix size")
    return dot(x, m * tuple(x))


def bilinear_eval(m: RationalMatrix, x, y) -> Fraction:
    """Bilinear value x^T m y."""
    if m.ncols != len(y) or m.nrows != len(x):
        raise DimensionMismatch("bilinear_eval: shapes differ")
    return dot(x, m * tuple(y))


def is_positive_definite(m: RationalMatrix) -> bool:
    if not m.is_symmetric():
        raise NonSymmetric("positive definiteness needs a symmetric matrix")
    return all(
        m.submatrix(range(k), range(k)).det() > 0 for k in range(1, m.nrows + 1)
    )


def is_positive_semidefinite(m: RationalMatrix) -> bool:
    """All principal minors nonnegative.  Leading minors alone do not suffice
    in the semidefinite case."""
    if not m.is_symmetric():
        raise NonSymmetric("positive semidefiniteness needs a symmetric matrix")
    n = m.nrows
    from itertools import combinations

    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            if m.submatrix(idx, idx).det() < 0:
                return False
    return True


def _det_bareiss(b) -> int:
    """Fraction-free determinant of an integer matrix (list of lists, consumed)."""
    b = [row[:] for row in b]
    n = len(b)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if b[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if b[i][k] != 0), None)
            if swap is None:
                return 0
            b[k], b[swap] = b[swap], b[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) // prev
        prev = b[k][k]
    return sign * b[n - 1][n - 1]


class SnfResult(NamedTuple):
    """Decomposition a = u * d * v with u, v unimodular integer matrices and d
    diagonal with nonnegative entries satisfying d[i] | d[i+1] (after clearing
    the global denominator)."""

    u: RationalMatrix
    d: RationalMatrix
    v: RationalMatrix


def snf(a: RationalMatrix) -> SnfResult:
    """Smith normal form over the rationals.

    The global denominator is cleared, the integer Smith form is computed, and
    the denominator is divided back into d.  A matrix that is already in Smith
    form (diagonal, nonnegative, divisibility chain after clearing) comes back
    unchanged with u = v = identity.
    """
    den = a.denominator()
    b = [[int(x * den) for x in row] for row in a.rows]
    u, d, v = _snf_integer(b)
    return SnfResult(
        RationalMatrix(u),
        RationalMatrix([[Fraction(x, den) for x in row] for row in d]),
        RationalMatrix(v),
    )


def _snf_integer(b):
    """Smith normal form of an integer matrix given as a list of lists.

    Returns (u, d, v) as lists of lists with u * d * v equal to the input and
    u, v unimodular.  Deterministic: pivots are chosen by minimal absolute
    value with row-major tie break.
    """
    a = [row[:] for row in b]
    n = len(a)
    m = len(a[0])
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    # Row operation a <- L a is tracked as u <- u L^-1, column ops likewise on v.
    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def row_submul(i, j, q):
        # a[i] -= q * a[j]
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        for r in u:
            r[j] += q * r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        for r in u:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def col_submul(j, i, q):
        # column j -= q * column i
        for r in a:
            r[j] -= q * r[i]
        v[i] = [x + q * y for x, y in zip(v[i], v[j])]

    def find_pivot(t):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                x = abs(a[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        return best

    for t in range(min(n, m)):
        while True:
            piv = find_pivot(t)
            if piv is None:
                break
            _, pi, pj = piv
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if a[t][t] < 0:
                row_negate(t)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // p
                    row_submul(i, t, q)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // p
                    col_submul(j, t, q)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # pivot zone clean; force the pivot to divide the rest
            offender = next(
                (
                    i
                    for i in range(t + 1, n)
                    for j in range(t + 1, m)
                    if a[i][j] % p
                ),
                None,
            )
            if offender is None:
                break
            row_submul(t, offender, -1)
        if a[t][t] < 0:
            row_negate(t)
    return u, a, v


def unimodular_completion(x) -> RationalMatrix:
    """Integer matrix g with |det g| = 1 whose last column is x.

    Requires x to be a primitive integer vector (gcd of entries 1).
    """
    x = vec(x)
    if not is_integral_vector(x):
        raise NotPrimitive("vector is not integral")
    ints = [int(c) for c in x]
    if gcd(*ints) != 1:
        raise NotPrimitive("vector entries have a common factor")
    n = len(ints)
    if n == 1:
        return RationalMatrix([[ints[0]]])
    u, d, _v = _snf_integer([[c] for c in ints])
    # x = u * d * v with d = e_1 and v = (+-1), so column 0 of u is +-x
    g0 = [row[:] for row in u]
    if [row[0] for row in g0] != ints:
        for row in g0:
            row[0] = -row[0]
    assert [row[0] for row in g0] == ints
    # rotate columns so x lands last
    return RationalMatrix([row[1:] + row[:1] for row in g0])
