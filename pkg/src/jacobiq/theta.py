"""q-expansions and numeric evaluation of the vector theta of a rational
index, with the modularity residual as the key numeric check.

Coefficients stay exact (CycScalar) all the way through the expansion layer;
floats enter only in evaluate_expansion and the residuals.  The theta vector
transforms under T and integer Heisenberg elements by the discriminant-group
matrices themselves and under S by the conjugate of rho_M_matrix(m, "S"),
i.e. the positive Fourier kernel.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycScalar, RepMatrix
from .discgroup import DiscGroup, disc_group
from .errors import NotAdmissible, NotInGroup, NotUpperHalfPlane
from .heisenberg import HeisenbergElement, rho_M_matrix
from .lattice import enumerate_coset_points
from .rational import RationalMatrix, dot, rat, vadd, vec


@dataclass(frozen=True, eq=False)
class FourierExpansion:
    """Truncated sum c(m, r) q^m zeta^r with exact coefficients.

    terms maps (m, r) to a CycScalar, or to a tuple of CycScalar when the
    expansion is vector valued; r is a tuple of Fractions of length n.  Every
    stored exponent satisfies 0 <= m <= prec (zero coefficients are dropped).
    """

    n: int
    prec: Fraction
    terms: dict

    def __post_init__(self):
        prec = rat(self.prec)
        clean = {}
        for (m, r), coeff in self.terms.items():
            m = rat(m)
            r = vec(r)
            assert len(r) == self.n, "support vector has the wrong length"
            assert 0 <= m <= prec, "exponent outside [0, prec]"
            if isinstance(coeff, tuple):
                coeff = tuple(_coerce(c) for c in coeff)
                if all(c.is_zero() for c in coeff):
                    continue
            else:
                coeff = _coerce(coeff)
                if coeff.is_zero():
                    continue
            clean[(m, r)] = coeff
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def empty(cls, n, prec) -> "FourierExpansion":
        return cls(n, rat(prec), {})

    def coefficient(self, m, r):
        """Scalar coefficient at (m, r); zero when absent."""
        return self.terms.get((rat(m), vec(r)), CycScalar.zero())

    def items(self):
        """Terms in deterministic (m, r) order."""
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FourierExpansion):
            return NotImplemented
        if self.n != other.n or self.prec != other.prec:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = CycScalar.zero()
        return all(
            self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys
        )


def _coerce(c) -> CycScalar:
    if isinstance(c, CycScalar):
        return c
    return CycScalar.one() * c


def _component_terms(g: DiscGroup, nu, alpha, beta, prec: Fraction) -> dict:
    """Terms of theta shifted by (alpha, beta): exponent m^{-1}[xi+alpha]/2 at
    elliptic index xi + alpha with phase e(t(xi+alpha) m^{-1} beta), where xi
    runs over nu + (m Z^n cap Z^n)."""
    m_inv = g.m.inverse()
    mz = g.split.m_z
    q = mz.T * m_inv * mz
    base = vadd(vec(nu), alpha)
    shift = mz.inverse() * base
    m_inv_beta = m_inv * beta
    terms = {}
    for u, val in enumerate_coset_points(q, shift, 2 * prec):
        point = vadd(base, mz * u)
        terms[(val / 2, point)] = CycScalar.e(dot(point, m_inv_beta))
    return terms


def _admissible_disc(m: RationalMatrix) -> DiscGroup:
    g = disc_group(m)
    if not g.admissible:
        raise NotAdmissible("index matrix is not admissible")
    return g


def theta_component(m: RationalMatrix, nu, prec) -> FourierExpansion:
    """Expansion of the theta component at nu: terms (m^{-1}[xi]/2, xi) -> 1
    over xi = nu mod (m Z^n cap Z^n), closed cutoff at prec."""
    g = _admissible_disc(m)
    nu = vec(nu)
    if not g.quotient.contains(nu):
        raise NotInGroup(f"{nu} is not in the discriminant group")
    prec = rat(prec)
    n = g.m.nrows
    if prec < 0:
        return FourierExpansion.empty(n, prec)
    zeros = vec([0] * n)
    return FourierExpansion(n, prec, _component_terms(g, nu, zeros, zeros, prec))


def theta_shifted(m: RationalMatrix, nu, alpha, beta, prec) -> FourierExpansion:
    """Theta component slashed with [m^{-1}alpha, 0, 0] then [0, m^{-1}beta, 0]
    at the direct point z + lam tau + mu: exponents m^{-1}[xi+alpha]/2,
    elliptic indices xi + alpha, coefficients e(t(xi+alpha) m^{-1} beta)."""
    g = _admissible_disc(m)
    nu = vec(nu)
    if not g.quotient.contains(nu):
        raise NotInGroup(f"{nu} is not in the discriminant group")
    prec = rat(prec)
    n = g.m.nrows
    if prec < 0:
        return FourierExpansion.empty(n, prec)
    return FourierExpansion(
        n, prec, _component_terms(g, nu, vec(alpha), vec(beta), prec)
    )


def theta_vector(m: RationalMatrix, prec):
    """All components of the vector theta, ordered like disc_group(m).reps."""
    g = disc_group(m)
    return tuple(theta_component(g.m, nu, prec) for nu in g.reps)


# --- numeric layer -------------------------------------------------------------


def _e_num(x) -> complex:
    return cmath.exp(2j * cmath.pi * x)


def _as_zvector(z, n):
    if isinstance(z, (int, float, complex)):
        assert n == 1, "scalar z only makes sense in one variable"
        return (complex(z),)
    z = tuple(complex(c) for c in z)
    assert len(z) == n, "z has the wrong length"
    return z


def evaluate_expansion(f: FourierExpansion, tau: complex, z) -> complex:
    """Sum the (scalar) expansion at (tau, z) in double precision."""
    tau = complex(tau)
    if not tau.imag > 0:
        raise NotUpperHalfPlane("tau must have positive imaginary part")
    zs = _as_zvector(z, f.n)
    total = complex(0)
    for (m, r), coeff in f.items():
        if isinstance(coeff, tuple):
            raise ValueError("evaluate_expansion needs a scalar expansion")
        phase = float(m) * tau + sum(float(a) * b for a, b in zip(r, zs))
        total += coeff.numeric() * _e_num(phase)
    return total


def truncation_estimate(m: RationalMatrix, prec, tau: complex, z_norm=0.0) -> float:
    """Upper estimate of the dropped tail of a theta component cut at prec,
    evaluated at tau with |Im z| <= z_norm: shell counts are bounded through
    the largest eigenvalue (<= trace) of m, summed against |q|^shell."""
    tau = complex(tau)
    if not tau.imag > 0:
        raise NotUpperHalfPlane("tau must have positive imaginary part")
    n = m.nrows
    lam_max = float(m.trace())
    x = math.exp(-2 * math.pi * tau.imag)
    start = max(float(prec), 0.0)
    total = 0.0
    for j in range(400):
        p = start + j + 1
        radius = math.sqrt(2 * p * lam_max)
        count = (2 * math.floor(radius) + 1) ** n
        total += count * x ** (start + j) * math.exp(2 * math.pi * radius * z_norm)
    return total / (1 - x)


def theta_multiplier(m: RationalMatrix, gen) -> RepMatrix:
    """Matrix by which the theta vector transforms under the slash action of
    gen.  T and integer Heisenberg elements act by rho_M_matrix itself; S by
    its conjugate, the positive Fourier kernel e(+t nu m^{-1} nu')."""
    if isinstance(gen, str) and gen == "S":
        return rho_M_matrix(m, "S").conj_transpose()
    return rho_M_matrix(m, gen)


def _as_heisenberg(gen, n) -> HeisenbergElement:
    if isinstance(gen, HeisenbergElement):
        return gen

    def as_vec(x):
        if isinstance(x, (int, Fraction)):
            assert n == 1, "scalar entry only makes sense in one variable"
            return (rat(x),)
        return vec(x)

    lam, mu, kappa = gen
    if isinstance(kappa, (int, Fraction)):
        assert n == 1 or kappa == 0, "kappa must be a matrix for n > 1"
        kappa = (
            RationalMatrix([[rat(kappa)]]) if n == 1 else RationalMatrix.zero(n)
        )
    elif not isinstance(kappa, RationalMatrix):
        kappa = RationalMatrix(kappa)
    return HeisenbergElement.of(as_vec(lam), as_vec(mu), kappa)


def modularity_residual(m: RationalMatrix, prec, tau: complex, z, gen) -> float:
    """Sup-norm distance between the theta vector slashed with gen (weight
    n/2, numeric) and theta_multiplier(m, gen) applied to the theta vector.

    gen is "S", "T", or an integer Heisenberg element (or (lam, mu, kappa)
    triple).  The slash normalizations are
      T: phi(tau+1, z)
      S: e(n/8) sqrt(tau)^{-n} e(-m[z]/(2 tau)) phi(-1/tau, -z/tau)
      [lam,mu,kappa]: e(m[lam] tau/2 - t lam m z - (3/2) t mu m lam
                        + tr(m kappa)/2) phi(tau, z - lam tau + mu)
    with the principal branch of the square root.  The truncation tail at
    prec is not included; see truncation_estimate for a bound on it.
    """
    tau = complex(tau)
    if not tau.imag > 0:
        raise NotUpperHalfPlane("tau must have positive imaginary part")
    g = _admissible_disc(m)
    n = g.m.nrows
    zs = _as_zvector(z, n)
    prec = rat(prec)
    comps = tuple(
        FourierExpansion(n, prec, _component_terms(g, nu, vec([0] * n), vec([0] * n), prec))
        for nu in g.reps
    )
    vals = [evaluate_expansion(c, tau, zs) for c in comps]
    rows = [[float(x) for x in m.row(i)] for i in range(n)]

    def mv(vector):
        return [sum(row[j] * vector[j] for j in range(n)) for row in rows]

    if isinstance(gen, str) and gen == "T":
        lhs = [evaluate_expansion(c, tau + 1, zs) for c in comps]
        mult = theta_multiplier(m, "T")
    elif isinstance(gen, str) and gen == "S":
        mz = mv(zs)
        m_of_z = sum(a * b for a, b in zip(zs, mz))
        factor = (
            _e_num(Fraction(n, 8))
            * cmath.sqrt(tau) ** (-n)
            * _e_num(-m_of_z / (2 * tau))
        )
        point = tuple(-c / tau for c in zs)
        lhs = [factor * evaluate_expansion(c, -1 / tau, point) for c in comps]
        mult = theta_multiplier(m, "S")
    else:
        elem = _as_heisenberg(gen, n)
        lam = [float(a) for a in elem.lam]
        mu = [float(a) for a in elem.mu]
        mlam = mv(lam)
        m_of_lam = sum(a * b for a, b in zip(lam, mlam))
        lam_m_z = sum(a * b for a, b in zip(mlam, zs))
        mu_m_lam = sum(a * b for a, b in zip(mu, mlam))
        tr_m_kappa = float((m * elem.kappa).trace())
        factor = _e_num(
            m_of_lam * tau / 2 - lam_m_z - 1.5 * mu_m_lam + tr_m_kappa / 2
        )
        point = tuple(c - a * tau + b for c, a, b in zip(zs, lam, mu))
        lhs = [factor * evaluate_expansion(c, tau, point) for c in comps]
        mult = theta_multiplier(m, elem)
    numeric = mult.numeric()
    residual = 0.0
    for i in range(len(comps)):
        rhs = sum(numeric[i][j] * vals[j] for j in range(len(comps)))
        residual = max(residual, abs(lhs[i] - rhs))
    return residual
