"""Exact cyclotomic arithmetic.

Scalars are finite sums sum_j c_j * e(q_j) with rational coefficients and
rational exponents taken mod 1, where e(x) = exp(2 pi i x).  Zero testing
reduces to the power basis of Q(zeta_L), L the lcm of the exponent
denominators, by polynomial remainder mod the L-th cyclotomic polynomial.

Square roots of positive integers are embedded through quadratic Gauss sums
(sqrt(2) = e(1/8) + e(-1/8), and for odd primes the Gauss sum of a quadratic
character), so normalizations like 1/sqrt(n) stay inside the ring and
equality of representation matrices is decidable exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import lcm

from .rational import rat


@cache
def cyclotomic_poly(level: int):
    """Coefficients of the level-th cyclotomic polynomial, low degree first."""
    if level == 1:
        return (-1, 1)
    num = [-1] + [0] * (level - 1) + [1]
    for d in range(1, level):
        if level % d == 0:
            num = _poly_div_exact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_div_exact(a, b):
    """Divide polynomial a by monic b exactly (integer coefficients)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c:
            k = i - (len(b) - 1)
            out[k] = c
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    assert all(x == 0 for x in a), "division was not exact"
    return out


def _poly_rem(a, b):
    """Remainder of a mod monic b; a has Fraction coefficients."""
    a = list(a)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c:
            k = i - (len(b) - 1)
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return tuple(a[: len(b) - 1])


def _coerce_terms(x):
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycScalar({Fraction(0): rat(x)} if x else {})
    return None


class CycScalar:
    """Element of a cyclotomic field, stored as {exponent mod 1: coefficient}."""

    __slots__ = ("terms", "_reduced")

    def __init__(self, terms):
        clean = {}
        for q, c in terms.items():
            q = rat(q) % 1
            c = rat(c)
            if c:
                clean[q] = clean.get(q, Fraction(0)) + c
        self.terms = {q: c for q, c in clean.items() if c}
        self._reduced = None

    @classmethod
    def e(cls, q, coeff=1) -> "CycScalar":
        """coeff * e(q) = coeff * exp(2 pi i q)."""
        return cls({rat(q): rat(coeff)})

    @classmethod
    def zero(cls) -> "CycScalar":
        return cls({})

    @classmethod
    def one(cls) -> "CycScalar":
        return cls({Fraction(0): Fraction(1)})

    def level(self) -> int:
        if not self.terms:
            return 1
        return lcm(*(q.denominator for q in self.terms))

    def reduced(self):
        """Canonical power-basis coordinates in Q(zeta_level)."""
        if self._reduced is None:
            level = self.level()
            coeffs = [Fraction(0)] * level
            for q, c in self.terms.items():
                coeffs[int(q * level) % level] += c
            object.__setattr__(
                self, "_reduced", (level, _poly_rem(coeffs, cyclotomic_poly(level)))
            )
        return self._reduced

    def is_zero(self) -> bool:
        return not self.terms or all(x == 0 for x in self.reduced()[1])

    def rational_value(self):
        """The value as a Fraction if the scalar is rational, else None."""
        _level, rem = self.reduced()
        if any(rem[1:]):
            return None
        return rem[0] if rem else Fraction(0)

    def __add__(self, other):
        other = _coerce_terms(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for q, c in other.terms.items():
            out[q] = out.get(q, Fraction(0)) + c
        return CycScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar({q: -c for q, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_terms(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_terms(other)
        if other is None:
            return NotImplemented
        out = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = (q1 + q2) % 1
                out[q] = out.get(q, Fraction(0)) + c1 * c2
        return CycScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar({q: c / rat(other) for q, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = CycScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "CycScalar":
        return CycScalar({(-q) % 1: c for q, c in self.terms.items()})

    def __eq__(self, other):
        other = _coerce_terms(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def numeric(self) -> complex:
        from cmath import exp, pi

        return sum(
            (complex(c) * exp(2j * pi * float(q)) for q, c in self.terms.items()),
            complex(0),
        )

    def __repr__(self):
        if not self.terms:
            return "CycScalar(0)"
        body = " + ".join(
            f"{c}*e({q})" for q, c in sorted(self.terms.items())
        )
        return f"CycScalar({body})"


def cyc_sqrt(n: int) -> CycScalar:
    """Exact square root of a positive integer as a cyclotomic number.

    Uses e(1/8) + e(-1/8) for sqrt(2) and quadratic Gauss sums for odd primes
    p: the sum of e(a^2 / p) is sqrt(p) for p = 1 mod 4 and i sqrt(p) for
    p = 3 mod 4.
    """
    if n <= 0:
        raise ValueError("square root embedding needs a positive integer")
    out = CycScalar.one()
    rest = n
    p = 2
    while p * p <= rest:
        k = 0
        while rest % p == 0:
            rest //= p
            k += 1
        if k:
            out = out * (p ** (k // 2))
            if k % 2:
                out = out * _prime_sqrt(p)
        p += 1
    if rest > 1:
        out = out * _prime_sqrt(rest)
    return out


@cache
def _prime_sqrt(p: int) -> CycScalar:
    if p == 2:
        return CycScalar({Fraction(1, 8): 1, Fraction(-1, 8) % 1: 1})
    g = CycScalar({})
    for a in range(p):
        g = g + CycScalar.e(Fraction(a * a, p))
    if p % 4 == 3:
        # the Gauss sum is i sqrt(p); divide out the i
        g = g * CycScalar.e(Fraction(-1, 4))
    return g


def cyc_inv_sqrt(n: int) -> CycScalar:
    """1 / sqrt(n) exactly: sqrt(n) / n."""
    return cyc_sqrt(n) / n


class RepMatrix:
    """Square matrix over CycScalar with labelled rows and columns.

    entries[i][j] is the coefficient of basis vector labels[i] in the image of
    basis vector labels[j].
    """

    __slots__ = ("labels", "entries")

    def __init__(self, labels, entries):
        labels = tuple(labels)
        rows = []
        for row in entries:
            row = tuple(_coerce_terms(x) for x in row)
            assert all(x is not None for x in row) and len(row) == len(labels)
            rows.append(row)
        assert len(rows) == len(labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("RepMatrix is immutable")

    @classmethod
    def identity(cls, labels) -> "RepMatrix":
        n = len(tuple(labels))
        return cls(labels, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, labels, fn) -> "RepMatrix":
        labels = tuple(labels)
        return cls(labels, [[fn(r, c) for c in labels] for r in labels])

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def entry(self, row_label, col_label) -> CycScalar:
        return self.entries[self.index(row_label)][self.index(col_label)]

    def __mul__(self, other):
        if isinstance(other, RepMatrix):
            assert self.labels == other.labels, "label mismatch"
            cols = list(zip(*other.entries))
            return RepMatrix(
                self.labels,
                [
                    [
                        sum((a * b for a, b in zip(row, col)), CycScalar.zero())
                        for col in cols
                    ]
                    for row in self.entries
                ],
            )
        other = _coerce_terms(other)
        if other is None:
            return NotImplemented
        return RepMatrix(
            self.labels, [[other * x for x in row] for row in self.entries]
        )

    def __rmul__(self, other):
        other = _coerce_terms(other)
        if other is None:
            return NotImplemented
        return self.__mul__(other)

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = RepMatrix.identity(self.labels)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if self.labels != other.labels:
            return False
        return all(
            a == b
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    __hash__ = None

    def conj_transpose(self) -> "RepMatrix":
        return RepMatrix(
            self.labels,
            [
                [self.entries[j][i].conjugate() for j in range(self.size)]
                for i in range(self.size)
            ],
        )

    def is_unitary(self) -> bool:
        return self.conj_transpose() * self == RepMatrix.identity(self.labels)

    def phase_permutation(self):
        """If every column has exactly one nonzero entry, return the map
        {column label: (row label, scalar)}; otherwise None."""
        out = {}
        cols = list(zip(*self.entries))
        for j, col in enumerate(cols):
            hits = [(i, x) for i, x in enumerate(col) if not x.is_zero()]
            if len(hits) != 1:
                return None
            i, x = hits[0]
            out[self.labels[j]] = (self.labels[i], x)
        return out

    def numeric(self):
        return [[x.numeric() for x in row] for row in self.entries]

    def __repr__(self):
        return f"RepMatrix(size={self.size})"
