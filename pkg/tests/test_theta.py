import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobiq.cyclotomic import CycScalar, RepMatrix
from jacobiq.errors import NotAdmissible, NotInGroup, NotUpperHalfPlane
from jacobiq.discgroup import disc_group
from jacobiq.heisenberg import HeisenbergElement, gauss_sum, rho_M_matrix
from jacobiq.rational import RationalMatrix, dot, gram_eval, vec
from jacobiq.theta import (
    FourierExpansion,
    evaluate_expansion,
    modularity_residual,
    theta_component,
    theta_multiplier,
    theta_shifted,
    theta_vector,
    truncation_estimate,
)

M2 = RationalMatrix([[2]])
M32 = RationalMatrix([[Fraction(3, 2)]])
MD = RationalMatrix([[Fraction(1, 2), 0], [0, 2]])
MA2 = RationalMatrix([[2, 1], [1, 2]])
POOL = [M2, M32, MD, MA2]


def e_num(x):
    return cmath.exp(2j * cmath.pi * x)


def test_component_spec_values():
    t = theta_component(M2, (0,), 2)
    assert t.terms == {
        (Fraction(0), (Fraction(0),)): CycScalar.one(),
        (Fraction(1), (Fraction(2),)): CycScalar.one(),
        (Fraction(1), (Fraction(-2),)): CycScalar.one(),
    }
    t = theta_component(M2, (1,), Fraction(1, 2))
    assert sorted(t.terms) == [
        (Fraction(1, 4), (Fraction(-1),)),
        (Fraction(1, 4), (Fraction(1),)),
    ]
    assert len(theta_component(M2, (0,), -1)) == 0


def test_component_m32_window():
    # exponents xi^2/3 for xi = 1/2 mod 3: 1/12, 25/12, then 49/12
    t = theta_component(M32, (Fraction(1, 2),), 3)
    assert sorted(t.terms) == [
        (Fraction(1, 12), (Fraction(1, 2),)),
        (Fraction(25, 12), (Fraction(-5, 2),)),
    ]
    t = theta_component(M32, (Fraction(1, 2),), 5)
    assert (Fraction(49, 12), (Fraction(7, 2),)) in t.terms


def test_component_errors():
    with pytest.raises(NotAdmissible):
        theta_component(RationalMatrix([[1]]), (0,), 2)
    with pytest.raises(NotInGroup):
        theta_component(M2, (Fraction(1, 3),), 2)


def test_vector_theta_component_count():
    for m in POOL:
        assert len(theta_vector(m, 1)) == disc_group(m).order


def test_shifted_trivial_equals_component():
    for m, nu in [(M2, (1,)), (M32, (Fraction(1, 2),))]:
        n = m.nrows
        zero = (0,) * n
        assert theta_shifted(m, nu, zero, zero, 3) == theta_component(m, nu, 3)


def test_shifted_spec_values():
    t = theta_shifted(M2, (0,), (0,), (Fraction(1, 2),), 2)
    for (mm, r), coeff in t.items():
        assert coeff == CycScalar.e(Fraction(r[0], 4))
    t = theta_shifted(M2, (0,), (1,), (0,), 2)
    assert sorted(t.terms) == [
        (Fraction(1, 4), (Fraction(-1),)),
        (Fraction(1, 4), (Fraction(1),)),
    ]
    for (mm, r), _coeff in t.items():
        assert mm == gram_eval(M2.inverse(), r) / 2


def slash_point_numeric(m, expansion, alpha, beta, tau, z):
    """theta | [m^{-1}alpha,0,0][0,m^{-1}beta,0] at the direct point
    z + lam tau + mu, evaluated from the unshifted expansion."""
    n = m.nrows
    lam = m.inverse() * vec(alpha)
    mu = m.inverse() * vec(beta)
    zs = (z,) if n == 1 else tuple(z)
    point = tuple(c + float(a) * tau + float(b) for c, a, b in zip(zs, lam, mu))
    mlam = m * lam
    pref = e_num(
        float(gram_eval(m, lam)) / 2 * tau
        + sum(float(a) * c for a, c in zip(mlam, zs))
        + float(dot(mlam, mu))
    )
    return pref * evaluate_expansion(expansion, tau, point)


def test_shifted_matches_numeric_slash():
    cases = [
        (M32, (Fraction(1, 2),), (Fraction(1, 3),), (Fraction(1, 5),)),
        (M2, (1,), (Fraction(1, 2),), (Fraction(3, 7),)),
        (MD, (0, 0), (Fraction(1, 3), 0), (0, Fraction(1, 2))),
    ]
    points = [(1j + Fraction(k, 10), 0.04 * k - 0.1 + 0.15j) for k in range(10)]
    checked = 0
    for m, nu, alpha, beta in cases:
        n = m.nrows
        shifted = theta_shifted(m, nu, alpha, beta, 25)
        base = theta_component(m, nu, 60)
        for tau_q, z0 in points[: 10 if n == 1 else 2]:
            tau = complex(tau_q)
            z = z0 if n == 1 else (z0, 0.1j - 0.02)
            lhs = evaluate_expansion(shifted, tau, z)
            rhs = slash_point_numeric(m, base, alpha, beta, tau, z)
            assert abs(lhs - rhs) < 1e-9
            checked += 1
    assert checked >= 10


def test_evaluate_trivials():
    assert evaluate_expansion(FourierExpansion.empty(1, 5), 1j, 0.2) == 0
    one = FourierExpansion(1, 0, {(0, (0,)): CycScalar.one()})
    assert abs(evaluate_expansion(one, 0.3 + 2j, 0.7j) - 1) == 0
    with pytest.raises(NotUpperHalfPlane):
        evaluate_expansion(one, 1 - 0.1j, 0.0)
    vector = FourierExpansion(1, 1, {(0, (0,)): (CycScalar.one(), CycScalar.one())})
    with pytest.raises(ValueError):
        evaluate_expansion(vector, 1j, 0.0)


def test_evaluate_against_direct_sum():
    val = evaluate_expansion(theta_component(M2, (0,), 50), 2j, 0.0)
    oracle = sum(
        cmath.exp(2j * cmath.pi * (xi * xi / 4) * 2j)
        for xi in range(-30, 31)
        if xi % 2 == 0
    )
    assert abs(val - oracle) < 1e-12


def test_expansion_invariants():
    with pytest.raises(AssertionError):
        FourierExpansion(1, 1, {(2, (0,)): CycScalar.one()})
    with pytest.raises(AssertionError):
        FourierExpansion(1, 1, {(Fraction(-1, 2), (0,)): CycScalar.one()})
    dropped = FourierExpansion(1, 1, {(0, (0,)): CycScalar.zero()})
    assert len(dropped) == 0


def test_truncation_estimate_behaves():
    small = truncation_estimate(M2, 40, 1j)
    assert 0 < small < 1e-80
    assert truncation_estimate(M2, 10, 0.1j) > small
    with pytest.raises(NotUpperHalfPlane):
        truncation_estimate(M2, 10, -1j)


def test_multiplier_shapes():
    s_plus = theta_multiplier(M32, "S")
    s_minus = rho_M_matrix(M32, "S")
    g = disc_group(M32)
    assert s_plus.entry(g.reps[1], g.reps[2]) == s_minus.entry(
        g.reps[1], g.reps[2]
    ).conjugate()
    assert s_plus.is_unitary()


def test_multiplier_triple_relation():
    # the conjugate system satisfies (S T)^3 = gauss_sum * id
    for m in (M32, MA2):
        s = theta_multiplier(m, "S")
        t = theta_multiplier(m, "T")
        assert (s * t) ** 3 == gauss_sum(m) * RepMatrix.identity(s.labels)


def test_residual_T_pool():
    for m in POOL:
        z = 0.1 + 0.2j if m.nrows == 1 else (0.1 + 0.2j, -0.05j)
        assert modularity_residual(m, 30, 1j, z, "T") < 1e-12


def test_residual_S_pool():
    for m in POOL:
        z = 0.1 + 0.2j if m.nrows == 1 else (0.1 + 0.2j, -0.05j)
        assert modularity_residual(m, 40, 1j, z, "S") < 1e-9


def test_residual_heisenberg():
    assert (
        modularity_residual(M2, 40, 1j, 0.3j, HeisenbergElement.of((1,), (1,)))
        < 1e-10
    )
    # triple form of gen, with a nonzero kappa
    assert modularity_residual(M32, 40, 1j, 0.2j, ((1,), (2,), 1)) < 1e-10
    assert (
        modularity_residual(MA2, 40, 1j, (0.1j, 0.05), ((1, 0), (0, 1), 0))
        < 1e-10
    )


def test_residual_monotone_in_prec():
    for m in (M2, M32):
        coarse = modularity_residual(m, 30, 0.1j, 0.02, "S")
        fine = modularity_residual(m, 60, 0.1j, 0.02, "S")
        assert fine <= coarse


def test_residual_rejects_lower_half_plane():
    with pytest.raises(NotUpperHalfPlane):
        modularity_residual(M2, 10, -1j, 0.0, "S")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0, 1]), st.integers(-2, 2))
def test_relation1_on_theta_window(which, lam):
    m = (M2, M32)[which]
    g = disc_group(m)
    prec = Fraction(8)
    comps = {nu: theta_component(m, nu, prec) for nu in g.reps}
    shift = m * (lam,)
    half_norm = gram_eval(m, (lam,)) / 2
    for nu, comp in comps.items():
        target = comps[g.canonicalize(tuple(a + b for a, b in zip(nu, shift)))]
        for (mm, r), coeff in comp.items():
            mm2 = mm + half_norm + dot(r, (lam,))
            if mm2 > prec:
                continue
            r2 = tuple(a + b for a, b in zip(r, shift))
            assert target.coefficient(mm2, r2) == coeff
