from cmath import exp, pi
from fractions import Fraction
from random import Random

import pytest

from jacobiq.cyclotomic import (
    CycScalar,
    RepMatrix,
    cyc_inv_sqrt,
    cyc_sqrt,
    cyclotomic_poly,
)


def e(q):
    return CycScalar.e(q)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)


def test_roots_of_unity_relations():
    assert e("1/2") == -1
    assert e("1/4") * e("1/4") == -1
    assert e("1/3") + e("2/3") + 1 == 0
    assert (e("1/5") + e("2/5") + e("3/5") + e("4/5")) == -1
    assert e("1/6") == e("1/2") * e("-1/3")
    assert e("9/8") == e("1/8")
    assert e("1/7") ** 7 == 1
    assert not (e("1/8") == e("1/4"))


def test_rational_value():
    assert (e("1/3") + e("-1/3")).rational_value() == -1
    assert (e("1/8") * e("-1/8")).rational_value() == 1
    assert e("1/8").rational_value() is None
    assert CycScalar.zero().rational_value() == 0
    assert (3 * CycScalar.one() / 2).rational_value() == Fraction(3, 2)


def test_arithmetic_mixing():
    x = 2 + e("1/4") - 1
    assert x == CycScalar({0: 1, Fraction(1, 4): 1})
    assert (x - x).is_zero()
    assert x * 0 == 0
    assert (e("1/4") ** 2) == -1
    assert e("1/4").conjugate() == e("-1/4")
    assert (e("1/3") * e("1/4")) == e("7/12")


def test_sqrt_embeddings():
    for n in (1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 49):
        s = cyc_sqrt(n)
        assert s * s == n
        assert abs(s.numeric() - n**0.5) < 1e-12
        inv = cyc_inv_sqrt(n)
        assert (s * inv) == 1
    with pytest.raises(ValueError):
        cyc_sqrt(0)


def test_numeric_agrees():
    rng = Random(41)
    for _ in range(50):
        terms = {
            Fraction(rng.randint(0, 23), 24): Fraction(rng.randint(-4, 4))
            for _ in range(rng.randint(0, 4))
        }
        x = CycScalar(terms)
        direct = sum(
            complex(c) * exp(2j * pi * float(q)) for q, c in terms.items()
        )
        assert abs(x.numeric() - direct) < 1e-12
        # zero iff numerically zero, at this scale
        assert x.is_zero() == (abs(direct) < 1e-9)


def test_repmatrix_basics():
    labels = ("a", "b")
    m = RepMatrix(labels, [[0, e("1/4")], [1, 0]])
    assert m.entry("a", "b") == e("1/4")
    sq = m * m
    assert sq.entry("a", "a") == e("1/4")
    assert sq.entry("b", "b") == e("1/4")
    assert sq.entry("a", "b") == 0
    assert m.is_unitary()
    assert (m * m.conj_transpose()) == RepMatrix.identity(labels)
    assert m**0 == RepMatrix.identity(labels)
    assert m**2 == sq


def test_repmatrix_phase_permutation():
    labels = (0, 1, 2)
    m = RepMatrix.from_function(
        labels, lambda r, c: e("1/3") if r == (c + 1) % 3 else CycScalar.zero()
    )
    perm = m.phase_permutation()
    assert perm is not None
    assert perm[0][0] == 1 and perm[0][1] == e("1/3")
    assert RepMatrix.identity(labels).phase_permutation() == {
        i: (i, CycScalar.one()) for i in labels
    }
    dense = RepMatrix(labels, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert dense.phase_permutation() is None


def test_repmatrix_unitary_dft():
    # the size-3 discrete Fourier matrix, normalized by 1/sqrt(3)
    labels = (0, 1, 2)
    norm = cyc_inv_sqrt(3)
    f = RepMatrix.from_function(labels, lambda r, c: norm * e(Fraction(r * c, 3)))
    assert f.is_unitary()
    gauss = sum((e(Fraction(a * a, 3)) for a in range(3)), CycScalar.zero())
    assert gauss == cyc_sqrt(3) * e("1/4")
