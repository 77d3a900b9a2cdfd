"""Exact checks for Heisenberg elements and the finite representations.

Frozen values were computed by hand from the definitions: the rho matrices on
m = (2) and m = (3/2), the gauss sums of the four pool indices, and the orbit
of (1/4, 0) under m = (3/2).
"""

import random
from fractions import Fraction

import pytest

from jacobiq.cyclotomic import CycScalar, RepMatrix, cyc_inv_sqrt
from jacobiq.errors import DimensionMismatch, NotInGroup
from jacobiq.heisenberg import (
    HeisenbergElement,
    central_scalar,
    gauss_sum,
    orbit_alpha_beta,
    pi_isomorphism,
    pi_matrix,
    rho_induced_matrix,
    rho_M_matrix,
    rho_relations_report,
    signature_mod8,
)
from jacobiq.rational import RationalMatrix, bilinear_eval, dot

e = CycScalar.e

M2 = RationalMatrix([[2]])
M32 = RationalMatrix([["3/2"]])
MD = RationalMatrix([["1/2", 0], [0, 2]])
MA2 = RationalMatrix([[2, 1], [1, 2]])
POOL = [M2, M32, MD, MA2]


def unit(i, n):
    return tuple(Fraction(int(i == j)) for j in range(n))


def random_element(rng, n, span=2):
    lam = [rng.randint(-span, span) for _ in range(n)]
    mu = [rng.randint(-span, span) for _ in range(n)]
    kappa = RationalMatrix(
        [[rng.randint(-span, span) for _ in range(n)] for _ in range(n)]
    )
    return HeisenbergElement.of(lam, mu, kappa)


def test_group_law():
    rng = random.Random(7)
    for n in (1, 2, 3):
        ident = HeisenbergElement.identity(n)
        for _ in range(20):
            a = random_element(rng, n)
            b = random_element(rng, n)
            c = random_element(rng, n)
            assert (a * b) * c == a * (b * c)
            assert a * ident == a and ident * a == a
            assert a * a.inverse() == ident
            assert a.inverse() * a == ident


def test_commutator_is_central():
    # [(lam,0,0), (0,mu,0)] lands in the center with kappa = lam mu^T + mu lam^T
    rng = random.Random(8)
    for n in (1, 2):
        for _ in range(10):
            lam = [rng.randint(-3, 3) for _ in range(n)]
            mu = [rng.randint(-3, 3) for _ in range(n)]
            a = HeisenbergElement.of(lam, [0] * n)
            b = HeisenbergElement.of([0] * n, mu)
            comm = a * b * a.inverse() * b.inverse()
            kap = RationalMatrix(
                [[lam[i] * mu[j] + mu[i] * lam[j] for j in range(n)] for i in range(n)]
            )
            assert comm == HeisenbergElement.of([0] * n, [0] * n, kap)


def test_element_errors():
    with pytest.raises(DimensionMismatch):
        HeisenbergElement.of([1], [1, 2])
    with pytest.raises(DimensionMismatch):
        HeisenbergElement.of([1], [1], RationalMatrix.zero(2))


def test_central_scalar_values():
    assert central_scalar(M2, RationalMatrix([[1]])) == 1
    assert central_scalar(M32, RationalMatrix([[1]])) == e("3/4")
    e12 = RationalMatrix([[0, 1], [0, 0]])
    assert central_scalar(MA2, e12) == e("1/2")


def test_rho_generator_matrices_m2():
    t = rho_M_matrix(M2, "T")
    labels = t.labels
    assert labels == ((Fraction(0),), (Fraction(1),))
    assert t.entry(labels[0], labels[0]) == 1
    assert t.entry(labels[1], labels[1]) == e("1/4")
    assert t.entry(labels[0], labels[1]).is_zero()

    s = rho_M_matrix(M2, "S")
    c = cyc_inv_sqrt(2)
    assert s.entry(labels[0], labels[0]) == c
    assert s.entry(labels[0], labels[1]) == c
    assert s.entry(labels[1], labels[0]) == c
    assert s.entry(labels[1], labels[1]) == c * e("1/2")
    assert s.is_unitary() and t.is_unitary()


def test_rho_heisenberg_shift_m32():
    h = HeisenbergElement.of([1], [0])
    mat = rho_M_matrix(M32, h)
    perm = mat.phase_permutation()
    shift = {
        (Fraction(0),): (Fraction(3, 2),),
        (Fraction(1, 2),): (Fraction(2),),
        (Fraction(1),): (Fraction(5, 2),),
        (Fraction(3, 2),): (Fraction(0),),
        (Fraction(2),): (Fraction(1, 2),),
        (Fraction(5, 2),): (Fraction(1),),
    }
    for src, (dst, phase) in perm.items():
        assert dst == shift[src]
        assert phase == 1

    diag = rho_M_matrix(M32, HeisenbergElement.of([0], [1]))
    for src, (dst, phase) in diag.phase_permutation().items():
        assert dst == src
        assert phase == e(src[0])


def test_rho_homomorphism_on_pool():
    rng = random.Random(9)
    for m in POOL:
        n = m.nrows
        for _ in range(3):
            a = random_element(rng, n)
            b = random_element(rng, n)
            assert rho_M_matrix(m, a) * rho_M_matrix(m, b) == rho_M_matrix(m, a * b)
            assert rho_M_matrix(m, a).is_unitary()
    with pytest.raises(NotInGroup):
        rho_M_matrix(M32, HeisenbergElement.of(["1/2"], [0]))


def test_rho_fails_off_scope():
    # 2m is not integral for m = (2/3); the shift and character operators no
    # longer compose as a homomorphism (the defect shows up with the
    # character acting after the shift)
    m = RationalMatrix([["2/3"]])
    a = HeisenbergElement.of([1], [0])
    b = HeisenbergElement.of([0], [1])
    assert rho_M_matrix(m, b) * rho_M_matrix(m, a) != rho_M_matrix(m, b * a)


def test_gauss_sums_frozen():
    assert gauss_sum(M2) == e("1/8")
    assert gauss_sum(M32) == e("1/8")
    assert gauss_sum(MD) == e("1/4")
    assert gauss_sum(MA2) == e("1/4")
    assert signature_mod8(M2) == 1
    assert signature_mod8(M32) == 1
    assert signature_mod8(MD) == 2
    assert signature_mod8(MA2) == 2
    for m in POOL:
        gs = gauss_sum(m)
        assert (gs * gs.conjugate()).rational_value() == 1


def test_rho_relations_report_pool():
    for m in POOL:
        report = rho_relations_report(m)
        assert report["two_m_integral"]
        for name, item in report["items"].items():
            assert item["holds"], (m, name, item["witness"])


def test_rho_relations_report_off_scope():
    # the four matrix relations are identities of the discriminant form and
    # survive outside the 2m-integral scope; only the flag records the scope
    report = rho_relations_report(RationalMatrix([["2/3"]]))
    assert not report["two_m_integral"]
    for name, item in report["items"].items():
        assert item["holds"], (name, item["witness"])


def test_pi_matrix_m32():
    alpha, beta = (Fraction(1, 4),), (Fraction(1, 3),)
    swap = pi_matrix(M32, alpha, beta, HeisenbergElement.of([1], [0]))
    perm = swap.phase_permutation()
    r0, r1 = (Fraction(0),), (Fraction(1, 2),)
    assert perm[r0] == (r1, e("1/4"))
    assert perm[r1] == (r0, e("1/4"))

    diag = pi_matrix(M32, alpha, beta, HeisenbergElement.of([0], [1]))
    perm = diag.phase_permutation()
    assert perm[r0] == (r0, e("1/3"))
    assert perm[r1] == (r1, e("5/6"))


def test_pi_homomorphism_and_commutator_on_pool():
    rng = random.Random(10)
    for m in POOL:
        n = m.nrows
        alpha = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n))
        beta = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n))
        for _ in range(3):
            a = random_element(rng, n)
            b = random_element(rng, n)
            pa = pi_matrix(m, alpha, beta, a)
            pb = pi_matrix(m, alpha, beta, b)
            assert pa * pb == pi_matrix(m, alpha, beta, a * b)
            assert pa.is_unitary()
        lam = [rng.randint(-2, 2) for _ in range(n)]
        mu = [rng.randint(-2, 2) for _ in range(n)]
        ps = pi_matrix(m, alpha, beta, HeisenbergElement.of(lam, [0] * n))
        pd = pi_matrix(m, alpha, beta, HeisenbergElement.of([0] * n, mu))
        assert ps * pd == e(bilinear_eval(m, mu, lam)) * (pd * ps)


def test_pi_fails_off_scope():
    m = RationalMatrix([["8/5"]])
    a = HeisenbergElement.of([1], [0])
    b = HeisenbergElement.of([0], [1])
    z = (Fraction(0),)
    lhs = pi_matrix(m, z, z, b) * pi_matrix(m, z, z, a)
    assert lhs != pi_matrix(m, z, z, b * a)


def test_pi_characters_separate_and_act_transitively():
    for m in POOL:
        n = m.nrows
        beta = tuple(Fraction(1, 3) for _ in range(n))
        diags = [
            pi_matrix(m, (Fraction(0),) * n, beta, HeisenbergElement.of([0] * n, unit(i, n)))
            for i in range(n)
        ]
        labels = diags[0].labels
        signatures = set()
        for r in labels:
            sig = tuple(
                tuple(sorted(d.entry(r, r).terms.items())) for d in diags
            )
            signatures.add(sig)
        assert len(signatures) == len(labels)

        shifts = [
            pi_matrix(m, (Fraction(0),) * n, beta, HeisenbergElement.of(unit(i, n), [0] * n))
            for i in range(n)
        ]
        reached = {labels[0]}
        frontier = [labels[0]]
        while frontier:
            nxt = []
            for r in frontier:
                for s in shifts:
                    dst, _ = s.phase_permutation()[r]
                    if dst not in reached:
                        reached.add(dst)
                        nxt.append(dst)
            frontier = nxt
        assert reached == set(labels)


def test_orbit_frozen_m32():
    orbit = orbit_alpha_beta(M32, ("1/4",), (0,))
    q = Fraction(1, 4)
    p0 = ((Fraction(0),), (q,))
    p1 = ((q,), (Fraction(0),))
    p2 = ((q,), (q,))
    assert orbit.pairs == (p0, p1, p2)
    assert orbit.t_perm == (2, 1, 0)
    assert orbit.s_perm == (1, 0, 2)
    assert orbit.index(p2) == 2


def test_orbit_trivial_and_closure():
    orbit = orbit_alpha_beta(MA2, (0, 0), (0, 0))
    assert orbit.pairs == (((Fraction(0),) * 2,) * 2,)
    assert orbit.t_perm == (0,) and orbit.s_perm == (0,)

    rng = random.Random(11)
    for m in POOL:
        n = m.nrows
        alpha = tuple(Fraction(rng.randint(0, 3), 4) for _ in range(n))
        beta = tuple(Fraction(rng.randint(0, 3), 4) for _ in range(n))
        orbit = orbit_alpha_beta(m, alpha, beta)
        assert sorted(orbit.t_perm) == list(range(len(orbit.pairs)))
        assert sorted(orbit.s_perm) == list(range(len(orbit.pairs)))


INDUCED_CASES = [
    (M32, ("1/4",), (0,)),
    (M32, (0,), (0,)),
    (M2, ("1/3",), (0,)),
    (MD, (0, 0), (0, 0)),
    (MA2, (0, 0), (0, 0)),
]


def pair_action(lam, mu, gen):
    if gen == "T":
        return lam, tuple(a + b for a, b in zip(lam, mu))
    return mu, tuple(-a for a in lam)


@pytest.mark.parametrize("m, alpha, beta", INDUCED_CASES)
def test_induced_commutation_rule(m, alpha, beta):
    n = m.nrows
    for gen in ("S", "T"):
        g = rho_induced_matrix(m, alpha, beta, gen)
        assert g.is_unitary()
        for i in range(n):
            for which in ("lam", "mu"):
                lam = unit(i, n) if which == "lam" else (Fraction(0),) * n
                mu = unit(i, n) if which == "mu" else (Fraction(0),) * n
                h = rho_induced_matrix(m, alpha, beta, HeisenbergElement.of(lam, mu))
                lam2, mu2 = pair_action(lam, mu, gen)
                h2 = rho_induced_matrix(
                    m, alpha, beta, HeisenbergElement.of(lam2, mu2)
                )
                assert h * g == g * h2, (m, alpha, beta, gen, which, i)


def test_induced_heisenberg_blocks():
    rng = random.Random(12)
    m, alpha, beta = INDUCED_CASES[0]
    a = random_element(rng, 1)
    b = random_element(rng, 1)
    ia = rho_induced_matrix(m, alpha, beta, a)
    ib = rho_induced_matrix(m, alpha, beta, b)
    assert ia * ib == rho_induced_matrix(m, alpha, beta, a * b)
    # blocks sit on the diagonal: a label pair mixing two orbit pairs is zero
    orbit = orbit_alpha_beta(m, alpha, beta)
    r0 = (Fraction(0),)
    assert ia.entry((orbit.pairs[0], r0), (orbit.pairs[1], r0)).is_zero()


def test_pi_isomorphism_positive():
    res = pi_isomorphism(M32, ("1/4",), ("1/3",), M32, ("5/4",), ("-1/6",))
    assert res.isomorphic is True
    assert res.witness is None
    assert res.intertwiner is not None and res.intertwiner.is_unitary()

    res = pi_isomorphism(M2, (0,), (0,), RationalMatrix([[4]]), (0,), (0,))
    assert res.isomorphic is True

    res = pi_isomorphism(MD, (0, 0), (0, 0), MD, ("1/2", 1), (0, -2))
    assert res.isomorphic is True


def test_pi_isomorphism_negative_central():
    res = pi_isomorphism(M2, (0,), (0,), RationalMatrix([[3]]), (0,), (0,))
    assert res.isomorphic is False
    assert "E[0,0]" in res.witness

    res = pi_isomorphism(M2, (0,), (0,), RationalMatrix([["5/2"]]), (0,), (0,))
    assert res.isomorphic is False
    assert "not integral" in res.witness

    m2 = RationalMatrix([[4, 2], [2, 4]])
    res = pi_isomorphism(MA2, (0, 0), (0, 0), m2, (0, 0), (0, 0))
    assert res.isomorphic is False
    assert "E[0,1]" in res.witness


def test_pi_isomorphism_negative_spectrum():
    res = pi_isomorphism(M32, (0,), (0,), M32, ("1/4",), (0,))
    assert res.isomorphic is False
    assert "eigenvalue" in res.witness

    res = pi_isomorphism(M32, (0,), (0,), M32, (0,), ("1/4",))
    assert res.isomorphic is False
    assert "eigenvalue" in res.witness

    res = pi_isomorphism(M2, (0,), (0,), MD, (0, 0), (0, 0))
    assert res.isomorphic is False
    assert res.witness == "ranks differ"


def test_pi_isomorphism_intertwines_random_elements():
    # the verified generators do generate: spot-check the intertwiner against
    # random words
    rng = random.Random(13)
    res = pi_isomorphism(M32, ("1/4",), ("1/3",), M32, ("5/4",), ("-1/6",))
    iota = res.intertwiner
    labels2 = pi_matrix(M32, ("5/4",), ("-1/6",), HeisenbergElement.identity(1)).labels
    for _ in range(5):
        h = random_element(rng, 1)
        p1 = pi_matrix(M32, ("1/4",), ("1/3",), h)
        p2 = pi_matrix(M32, ("5/4",), ("-1/6",), h)
        lhs = iota * p1
        rhs = RepMatrix(iota.labels, (p2 * RepMatrix(labels2, iota.entries)).entries)
        assert lhs == rhs
