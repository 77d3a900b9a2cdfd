"""Index splitting and discriminant groups for rational symmetric matrices.

A positive definite symmetric rational matrix m factors as m = m_z * s where
m_z and m_frac are built from the Smith form of m: writing m = u * d * v with
d = diag(a_i / b_i) in lowest terms, the integral part is m_z = u * diag(a) * v
and the fractional part is m_frac = u * diag(1/b) * v.  The finite quotient
(m Z^N + Z^N) / (m Z^N cap Z^N) then has basis matrix m_frac and sublattice
m_z, of order prod(a_i * b_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

from .errors import NotAdmissible, NotInGroup, NotPositiveDefinite, NonSymmetric
from .rational import RationalMatrix, is_positive_definite, rat, vec


def _require_index(m: RationalMatrix) -> None:
    if not m.is_symmetric():
        raise NonSymmetric("index matrix must be symmetric")
    if not is_positive_definite(m):
        raise NotPositiveDefinite("index matrix must be positive definite")


@dataclass(frozen=True)
class IndexSplit:
    """Splitting m = m_z * m_z^{-1} * m with m_z integral and m_frac of the
    shape u * diag(1/b) * v.  a and b are the reduced Smith numerators and
    denominators, so a_i | a_{i+1}, b_{i+1} | b_i and gcd(a_i, b_i) = 1.
    """

    m: RationalMatrix
    u: RationalMatrix
    v: RationalMatrix
    a: tuple
    b: tuple
    m_z: RationalMatrix
    m_frac: RationalMatrix

    @property
    def disc_order(self) -> int:
        return prod(x * y for x, y in zip(self.a, self.b))

    @property
    def r_order(self) -> int:
        """Order of (m Z^N + Z^N) / Z^N."""
        return prod(self.b)


def split_index(m: RationalMatrix) -> IndexSplit:
    from .rational import snf

    _require_index(m)
    u, d, v = snf(m)
    diag = [d[i, i] for i in range(d.nrows)]
    a = tuple(x.numerator for x in diag)
    b = tuple(x.denominator for x in diag)
    m_z = u * RationalMatrix.diagonal(a) * v
    m_frac = u * RationalMatrix.diagonal([Fraction(1, x) for x in b]) * v
    return IndexSplit(m=m, u=u, v=v, a=a, b=b, m_z=m_z, m_frac=m_frac)


def is_admissible_index(m: RationalMatrix) -> bool:
    """True when the lattice Z^N carries an even integral form under m pulled
    back along m_frac^{-1}, i.e. g = c^T m c is integral with even diagonal
    for c = m_frac^{-1}.
    """
    sp = split_index(m)
    c = sp.m_frac.inverse()
    g = c.T * m * c
    if not g.is_integral():
        return False
    return all(g[i, i] % 2 == 0 for i in range(g.nrows))


class LatticeQuotient:
    """Finite quotient of two full-rank column lattices sub <= ambient.

    Representatives are enumerated deterministically: the Smith form of
    ambient^{-1} * sub gives an adapted basis, and representatives run over
    mixed-radix coordinate boxes in itertools.product order.
    """

    def __init__(self, ambient: RationalMatrix, sub: RationalMatrix):
        from .rational import snf

        t = ambient.inverse() * sub
        assert t.is_integral(), "sub is not contained in ambient"
        ut, dt, _vt = snf(t)
        self.ambient = ambient
        self.sub = sub
        self.basis = ambient * ut
        self.cycle = tuple(int(dt[i, i]) for i in range(dt.nrows))
        assert all(c > 0 for c in self.cycle), "sub must have full rank"
        self.order = prod(self.cycle)
        self._basis_inv = self.basis.inverse()
        self.reps = tuple(
            self.basis * tuple(Fraction(c) for c in coords)
            for coords in product(*(range(c) for c in self.cycle))
        )
        self._pos = {r: i for i, r in enumerate(self.reps)}

    def coords(self, x) -> tuple:
        c = self._basis_inv * vec(x)
        if any(y.denominator != 1 for y in c):
            raise NotInGroup(f"{x} is not in the ambient lattice")
        return tuple(int(y) % n for y, n in zip(c, self.cycle))

    def canonicalize(self, x) -> tuple:
        return self.basis * tuple(Fraction(c) for c in self.coords(x))

    def index_of(self, x) -> int:
        return self._pos[self.canonicalize(x)]

    def contains(self, x) -> bool:
        try:
            self.coords(x)
        except NotInGroup:
            return False
        return True

    def in_sub(self, x) -> bool:
        c = self.sub.inverse() * vec(x)
        return all(y.denominator == 1 for y in c)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.reps)


class DiscGroup:
    """Discriminant group of a symmetric positive definite index m.

    The group itself exists for any such m; the finite quadratic form
    q(nu) = (1/2) nu^T m^{-1} nu mod 1 descends to cosets only when m is
    admissible, so qvalue refuses otherwise.  The bilinear form mod 1 is
    always coset-invariant."""

    def __init__(self, m: RationalMatrix):
        self.m = m
        self.admissible = is_admissible_index(m)
        self.split = split_index(m)
        self.m_inv = m.inverse()
        self.quotient = LatticeQuotient(self.split.m_frac, self.split.m_z)
        self.reps = self.quotient.reps
        self.order = self.quotient.order

    def canonicalize(self, x) -> tuple:
        return self.quotient.canonicalize(x)

    def index_of(self, x) -> int:
        return self.quotient.index_of(x)

    def neg(self, x) -> tuple:
        return self.canonicalize(tuple(-rat(c) for c in x))

    def qvalue(self, nu) -> Fraction:
        from .rational import gram_eval

        if not self.admissible:
            raise NotAdmissible("index matrix is not admissible")
        if not self.quotient.contains(nu):
            raise NotInGroup(f"{nu} is not in the discriminant group")
        return (gram_eval(self.m_inv, vec(nu)) / 2) % 1

    def bform(self, nu1, nu2) -> Fraction:
        from .rational import bilinear_eval

        for nu in (nu1, nu2):
            if not self.quotient.contains(nu):
                raise NotInGroup(f"{nu} is not in the discriminant group")
        return bilinear_eval(self.m_inv, vec(nu1), vec(nu2)) % 1

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.reps)


def disc_group(m: RationalMatrix) -> DiscGroup:
    return DiscGroup(m)


def _as_group(g) -> DiscGroup:
    return g if isinstance(g, DiscGroup) else DiscGroup(g)


def canonicalize(g, x) -> tuple:
    """Canonical representative of x in the discriminant group of g (a group
    or an index matrix)."""
    return _as_group(g).canonicalize(x)


def qvalue(g, nu) -> Fraction:
    """Value of the finite quadratic form at nu, in [0, 1)."""
    return _as_group(g).qvalue(nu)


def lattice_sum(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Basis matrix of the lattice spanned jointly by the columns of a and b
    (a must have full rank)."""
    from .rational import snf

    stacked = RationalMatrix([ra + rb for ra, rb in zip(a.rows, b.rows)])
    u, d, _v = snf(stacked)
    n = a.nrows
    diag = [d[i, i] for i in range(n)]
    assert all(x != 0 for x in diag), "columns do not span full rank"
    return u * RationalMatrix.diagonal(diag)


def lattice_intersection(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Basis matrix of the intersection of the column lattices of a and b,
    computed through duality: dual(a cap b) = dual(a) + dual(b)."""
    dual_sum = lattice_sum(a.T.inverse(), b.T.inverse())
    return dual_sum.T.inverse()


def same_column_lattice(a: RationalMatrix, b: RationalMatrix) -> bool:
    """Whether two full-rank square matrices span the same column lattice."""
    try:
        ab = a.inverse() * b
        ba = b.inverse() * a
    except Exception:
        return False
    return ab.is_integral() and ba.is_integral()
