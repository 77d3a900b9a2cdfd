"""Fourier data of Jacobi forms: symmetry closure under the two coefficient
relations, theta decomposition and reconstruction, and the vanishing
certifier.

A form's data is a truncated FourierExpansion with one coefficient vector per
key, indexed by the labels of a type descriptor.  Three descriptors are
provided: the one-dimensional trivial type, the discriminant-group type, and
the induced type over an (alpha, beta) orbit.  Each descriptor knows how a
coefficient vector moves under r -> r + M lam (relation 1) and under
r -> -r (relation 2, through its minus_one matrix), and carries the central
character of its index.

Decomposition splits a form into scalar component streams h_nu indexed by
(M Z^N + Z^N) / M Z^N; reconstruction assembles the double sum over orbit
pairs and nu' in M Z^N / (M Z^N cap Z^N) at coefficient level.  Both
directions are exact, with explicit precision bookkeeping through the
component offsets min M^{-1}[xi + alpha] / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .cyclotomic import CycScalar, RepMatrix
from .discgroup import DiscGroup, LatticeQuotient, is_admissible_index, split_index
from .errors import (
    DimensionMismatch,
    InconsistentExpansion,
    InconsistentSeed,
    InsufficientPrecision,
    NotAdmissible,
    PrecisionMismatch,
    RankTooLarge,
)
from .heisenberg import (
    OrbitAB,
    central_scalar,
    orbit_alpha_beta,
    signature_mod8,
)
from .lattice import enumerate_coset_points, rd
from .rational import (
    RationalMatrix,
    dot,
    gram_eval,
    is_integral_vector,
    rat,
    vadd,
    vec,
    vsub,
)
from .theta import FourierExpansion

_e = CycScalar.e


def _fmt(x) -> str:
    """Plain rendering of nested rational tuples for error messages."""
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(c) for c in x) + ")"
    return str(x)


def _as_index(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _admissible_index(m) -> RationalMatrix:
    m = _as_index(m)
    if not is_admissible_index(m):
        raise NotAdmissible("index matrix is not admissible")
    return m


def _apply(mat: RepMatrix, values: tuple) -> tuple:
    """mat times a coefficient vector laid out along mat.labels."""
    perm = mat.phase_permutation()
    out = [CycScalar.zero()] * len(values)
    if perm is not None:
        for j, col in enumerate(mat.labels):
            row, phase = perm[col]
            out[mat.index(row)] = phase * values[j]
        return tuple(out)
    for i in range(len(values)):
        acc = CycScalar.zero()
        for j in range(len(values)):
            acc = acc + mat.entries[i][j] * values[j]
        out[i] = acc
    return tuple(out)


# --- type descriptors ----------------------------------------------------------


@dataclass(frozen=True)
class TrivialType:
    """One-dimensional type: relations move only the support."""

    @property
    def labels(self) -> tuple:
        return ((),)

    def relation1_shift(self, label, lam):
        return label, CycScalar.one()

    def minus_one(self) -> RepMatrix:
        return RepMatrix.identity(self.labels)

    def kappa_scalar(self, kappa) -> CycScalar:
        return CycScalar.one()


@dataclass(frozen=True)
class RhoMType:
    """Type on the discriminant-group basis.

    Relation 1 permutes labels by d -> d + M lam.  minus_one is the negation
    permutation scaled by e(-sig/4), the scalar that makes the theta vector
    itself satisfy relation 2 at weight N/2.
    """

    m: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, "m", _admissible_index(self.m))

    @property
    def disc(self) -> DiscGroup:
        return DiscGroup(self.m)

    @property
    def labels(self) -> tuple:
        return self.disc.reps

    def components(self):
        """(label, disc class, alpha, beta) for every basis vector."""
        zero = vec([0] * self.m.nrows)
        return tuple((d, d, zero, zero) for d in self.disc.reps)

    def relation1_shift(self, label, lam):
        shift = self.m * lam
        return self.disc.canonicalize(vadd(label, shift)), CycScalar.one()

    def minus_one(self) -> RepMatrix:
        g = self.disc
        scalar = _e(Fraction(-signature_mod8(g), 4))
        return RepMatrix.from_function(
            g.reps,
            lambda r, c: scalar if r == g.neg(c) else CycScalar.zero(),
        )

    def kappa_scalar(self, kappa) -> CycScalar:
        return central_scalar(self.m, kappa)


@dataclass(frozen=True)
class ThetaDecompType:
    """Type over the (alpha, beta) orbit: labels are (pair, d).

    Relation 1 keeps the pair and picks up e(t beta lam); minus_one sends
    (pair, d) to (canon(-alpha, -beta), canon(-d + F u)), u the lattice shift
    of the pair canonicalization, with the intertwiner phase
    e(-t(d + alpha) M^{-1} F v).
    """

    m: RationalMatrix
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", _admissible_index(self.m))
        object.__setattr__(self, "alpha", vec(self.alpha))
        object.__setattr__(self, "beta", vec(self.beta))

    @property
    def disc(self) -> DiscGroup:
        return DiscGroup(self.m)

    @property
    def orbit(self) -> OrbitAB:
        return orbit_alpha_beta(self.m, self.alpha, self.beta)

    @property
    def labels(self) -> tuple:
        disc = self.disc
        return tuple((pair, d) for pair in self.orbit.pairs for d in disc.reps)

    def components(self):
        disc = self.disc
        return tuple(
            ((pair, d), d, pair[0], pair[1])
            for pair in self.orbit.pairs
            for d in disc.reps
        )

    def relation1_shift(self, label, lam):
        pair, d = label
        shift = self.m * lam
        d2 = self.disc.canonicalize(vadd(d, shift))
        return (pair, d2), _e(dot(pair[1], lam))

    def minus_one(self) -> RepMatrix:
        g = self.disc
        orbit = self.orbit
        f = g.split.m_frac
        f_inv = f.inverse()
        m_inv = g.m_inv
        scalar = _e(Fraction(-signature_mod8(g), 4))
        entries = {}
        for idx, pair in enumerate(orbit.pairs):
            a, b = pair
            star = orbit.pairs[orbit.s_perm[orbit.s_perm[idx]]]
            u = f_inv * vsub(tuple(-x for x in a), star[0])
            v = f_inv * vsub(tuple(-x for x in b), star[1])
            assert is_integral_vector(u) and is_integral_vector(v)
            fv = f * v
            for d in g.reps:
                d2 = g.canonicalize(vadd(tuple(-x for x in d), f * u))
                phase = scalar * _e(-dot(vadd(d, a), m_inv * fv))
                entries[(pair, d), (star, d2)] = phase
        labels = self.labels
        return RepMatrix.from_function(
            labels, lambda r, c: entries.get((r, c), CycScalar.zero())
        )

    def kappa_scalar(self, kappa) -> CycScalar:
        return central_scalar(self.m, kappa)


def _decomp_type(m: RationalMatrix, orbit):
    """Normalize an orbit argument to a decomposable type descriptor."""
    if isinstance(orbit, (RhoMType, ThetaDecompType)):
        return orbit
    if orbit is None:
        return RhoMType(m)
    if isinstance(orbit, OrbitAB):
        alpha, beta = orbit.pairs[0]
        return ThetaDecompType(m, alpha, beta)
    alpha, beta = orbit
    alpha = vec(alpha)
    beta = vec(beta)
    if all(x == 0 for x in alpha) and all(x == 0 for x in beta):
        return RhoMType(m)
    return ThetaDecompType(m, alpha, beta)


# --- form data and component streams -------------------------------------------


@dataclass(frozen=True)
class JacobiFormData:
    """Weight, index, type descriptor, and a vector-valued expansion.

    Coefficient vectors are laid out along jtype.labels; scalar values are
    accepted when the type is one dimensional.  Support positivity
    m >= M^{-1}[r] / 2 is an invariant: it says exactly that every component
    stream of the decomposition starts at exponent zero or later.
    """

    weight: Fraction
    m: RationalMatrix
    jtype: object
    expansion: FourierExpansion

    def __post_init__(self):
        weight = rat(self.weight)
        if (2 * weight).denominator != 1:
            raise ValueError("weight must be half integral")
        m = _as_index(self.m)
        if self.expansion.n != m.nrows:
            raise DimensionMismatch("expansion rank differs from the index")
        labels = self.jtype.labels
        m_inv = m.inverse()
        terms = {}
        for (mm, r), coeff in self.expansion.terms.items():
            if not isinstance(coeff, tuple):
                coeff = (coeff,)
            if len(coeff) != len(labels):
                raise DimensionMismatch(
                    "coefficient vector does not match the type basis"
                )
            assert mm >= gram_eval(m_inv, r) / 2, "support positivity fails"
            terms[(mm, r)] = coeff
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "m", m)
        object.__setattr__(
            self,
            "expansion",
            FourierExpansion(self.expansion.n, self.expansion.prec, terms),
        )

    @property
    def prec(self) -> Fraction:
        return self.expansion.prec

    def coefficient(self, mm, r) -> tuple:
        val = self.expansion.terms.get((rat(mm), vec(r)))
        if val is None:
            return (CycScalar.zero(),) * len(self.jtype.labels)
        return val

    def entry(self, mm, r, label) -> CycScalar:
        return self.coefficient(mm, r)[self.jtype.labels.index(label)]


@dataclass(frozen=True, eq=False)
class ComponentVector:
    """Scalar q-expansion streams h_nu over (M Z^N + Z^N) / M Z^N.

    weight is the stream weight k - N/2.  Exponents are rationals in
    [0, prec]; every class has a dict entry, possibly empty.
    """

    m: RationalMatrix
    weight: Fraction
    prec: Fraction
    components: dict

    def __post_init__(self):
        m = _as_index(self.m)
        quot = _h_quotient(m)
        prec = rat(self.prec)
        clean = {nu: {} for nu in quot.reps}
        for nu, stream in self.components.items():
            nu = quot.canonicalize(vec(nu))
            for n, coeff in stream.items():
                n = rat(n)
                assert 0 <= n <= prec, "stream exponent outside [0, prec]"
                if not isinstance(coeff, CycScalar):
                    coeff = CycScalar.one() * coeff
                if coeff.is_zero():
                    continue
                if n in clean[nu] and clean[nu][n] != coeff:
                    raise InconsistentExpansion(
                        f"classes {_fmt(nu)} collide at exponent {n}"
                    )
                clean[nu][n] = coeff
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "weight", rat(self.weight))
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "components", clean)

    @classmethod
    def zero(cls, m, weight, prec) -> "ComponentVector":
        return cls(_as_index(m), rat(weight), rat(prec), {})

    @property
    def classes(self) -> tuple:
        return _h_quotient(self.m).reps

    def coefficient(self, nu, n) -> CycScalar:
        nu = _h_quotient(self.m).canonicalize(vec(nu))
        return self.components[nu].get(rat(n), CycScalar.zero())

    def truncate(self, prec) -> "ComponentVector":
        prec = rat(prec)
        assert prec <= self.prec, "cannot extend a truncated stream"
        return ComponentVector(
            self.m,
            self.weight,
            prec,
            {
                nu: {n: c for n, c in stream.items() if n <= prec}
                for nu, stream in self.components.items()
            },
        )

    def is_zero(self) -> bool:
        return all(not stream for stream in self.components.values())

    def items(self):
        return tuple(
            (nu, tuple(sorted(self.components[nu].items())))
            for nu in self.classes
        )

    def __eq__(self, other):
        if not isinstance(other, ComponentVector):
            return NotImplemented
        return (
            self.m == other.m
            and self.weight == other.weight
            and self.prec == other.prec
            and self.items() == other.items()
        )


def _h_quotient(m: RationalMatrix) -> LatticeQuotient:
    return LatticeQuotient(split_index(m).m_frac, m)


def _component_offsets(m: RationalMatrix, jtype) -> dict:
    """Smallest exponent min M^{-1}[xi + alpha] / 2 of each component."""
    m_inv = m.inverse()
    mz = split_index(m).m_z
    q = mz.T * m_inv * mz
    mz_inv = mz.inverse()
    offsets = {}
    for label, d, alpha, _beta in jtype.components():
        base = vadd(d, alpha)
        bound = gram_eval(m_inv, base)
        pts = enumerate_coset_points(q, mz_inv * base, bound)
        offsets[label] = min(val for _u, val in pts) / 2
    return offsets


# --- symmetry closure -----------------------------------------------------------


def symmetrize_expansion(seed: FourierExpansion, k, m, jtype) -> JacobiFormData:
    """Close a seed under both coefficient relations.

    Relation 1 spreads every seed key across its r -> r + M lam orbit within
    the truncation; relation 2 then adds e(k/2) minus_one times the vector at
    (m, -r).  Any collision with a different value raises InconsistentSeed
    with the witness key.
    """
    m = _as_index(m)
    k = rat(k)
    labels = jtype.labels
    index_of = {lab: i for i, lab in enumerate(labels)}
    m_inv = m.inverse()
    prec = seed.prec
    out = {}

    def store(key, value, origin):
        if all(c.is_zero() for c in value):
            value = None
        if key not in out:
            if value is not None:
                out[key] = value
            return
        if value is None or out[key] != value:
            raise InconsistentSeed(
                f"coefficient at {_fmt(key)} propagated from {_fmt(origin)} "
                "disagrees with the stored value"
            )

    def normalized(coeff):
        if not isinstance(coeff, tuple):
            coeff = (coeff,)
        if len(coeff) != len(labels):
            raise DimensionMismatch(
                "seed coefficient does not match the type basis"
            )
        return coeff

    for (mm, r), coeff in seed.items():
        coeff = normalized(coeff)
        excess = mm - gram_eval(m_inv, r) / 2
        if excess < 0:
            raise InconsistentSeed(
                f"seed key ({mm}, {_fmt(r)}) violates support positivity"
            )
        bound = 2 * (prec - mm) + gram_eval(m_inv, r)
        for lam, val in enumerate_coset_points(m, m_inv * r, bound):
            mm2 = excess + val / 2
            if mm2 > prec:
                continue
            r2 = vadd(r, m * lam)
            moved = [CycScalar.zero()] * len(labels)
            for j, lab in enumerate(labels):
                lab2, phase = jtype.relation1_shift(lab, lam)
                moved[index_of[lab2]] = phase * coeff[j]
            store((mm2, r2), tuple(moved), (mm, r))

    minus = jtype.minus_one()
    weight_factor = _e(k / 2)
    queue = list(out.items())
    seen = set()
    while queue:
        (mm, r), value = queue.pop()
        if (mm, r) in seen:
            continue
        seen.add((mm, r))
        neg_key = (mm, tuple(-x for x in r))
        mirrored = tuple(weight_factor * c for c in _apply(minus, value))
        fresh = neg_key not in out
        store(neg_key, mirrored, (mm, r))
        if fresh and neg_key in out:
            queue.append((neg_key, out[neg_key]))

    return JacobiFormData(k, m, jtype, FourierExpansion(m.nrows, prec, out))


# --- theta decomposition --------------------------------------------------------


def theta_decompose(phi: JacobiFormData) -> ComponentVector:
    """Split a form into its component streams.

    c(h_nu; n) = e(-t(xi+alpha) M^{-1} beta) c(phi; n + M^{-1}[xi+alpha]/2,
    xi+alpha) for every lift xi of nu and every orbit pair; disagreement
    between two readings, or a reading outside the type's support, raises
    InconsistentExpansion.  The result is verified by reconstructing it and
    comparing against phi on the common truncation.
    """
    jtype = phi.jtype
    if not hasattr(jtype, "components"):
        raise ValueError("type has no theta-decomposition structure")
    m = phi.m
    m_inv = m.inverse()
    mz_inv = split_index(m).m_z.inverse()
    quot = _h_quotient(m)
    comps = jtype.components()
    offsets = _component_offsets(m, jtype)
    max_off = max(offsets.values())
    min_off = min(offsets.values())
    prec_h = phi.prec - max_off

    streams = {nu: {} for nu in quot.reps}
    for (mm, rr), cvec in phi.expansion.items():
        for i, (label, d, alpha, beta) in enumerate(comps):
            entryval = cvec[i]
            if entryval.is_zero():
                continue
            xi = vsub(rr, alpha)
            if not is_integral_vector(mz_inv * vsub(xi, d)):
                raise InconsistentExpansion(
                    f"coefficient at ({mm}, {_fmt(rr)}) lies outside "
                    f"the support of label {_fmt(label)}"
                )
            n = mm - gram_eval(m_inv, rr) / 2
            if n > prec_h:
                continue
            nu = quot.canonicalize(d)
            value = _e(-dot(rr, m_inv * beta)) * entryval
            stored = streams[nu].get(n)
            if stored is None:
                streams[nu][n] = value
            elif stored != value:
                raise InconsistentExpansion(
                    f"lifts of class {_fmt(nu)} disagree at exponent {n}"
                )

    h = ComponentVector(m, phi.weight - Fraction(m.nrows, 2), prec_h, streams)

    prec_check = min(phi.prec, prec_h + min_off)
    recon = theta_reconstruct(h, m, jtype, prec_check)
    mine = {
        key: val for key, val in phi.expansion.terms.items() if key[0] <= prec_check
    }
    theirs = recon.expansion.terms
    for key in set(mine) | set(theirs):
        if mine.get(key) != theirs.get(key):
            raise InconsistentExpansion(
                f"expansion does not match its decomposition at {_fmt(key)}"
            )
    return h


def theta_reconstruct(h: ComponentVector, m, orbit, prec) -> JacobiFormData:
    """Assemble a form from component streams.

    Every stream term c q^n spreads over the component's coset: coefficient
    c e(t(xi+alpha) M^{-1} beta) at (n + M^{-1}[xi+alpha]/2, xi+alpha).
    Raises PrecisionMismatch when the target truncation needs stream
    coefficients beyond h.prec.
    """
    m = _as_index(m)
    jtype = _decomp_type(m, orbit)
    if h.m != m:
        raise DimensionMismatch("component streams carry a different index")
    prec = rat(prec)
    quot = _h_quotient(m)
    m_inv = m.inverse()
    mz = split_index(m).m_z
    q = mz.T * m_inv * mz
    mz_inv = mz.inverse()
    comps = jtype.components()
    offsets = _component_offsets(m, jtype)
    if prec - min(offsets.values()) > h.prec:
        raise PrecisionMismatch(
            f"target precision {prec} needs streams beyond {h.prec}"
        )
    labels = jtype.labels
    index_of = {lab: i for i, lab in enumerate(labels)}
    terms = {}
    for label, d, alpha, beta in comps:
        i = index_of[label]
        nu = quot.canonicalize(d)
        base = vadd(d, alpha)
        shift = mz_inv * base
        m_inv_beta = m_inv * beta
        for n, coeff in h.components[nu].items():
            bound = 2 * (prec - n)
            if bound < 0:
                continue
            for u, val in enumerate_coset_points(q, shift, bound):
                point = vadd(base, mz * u)
                key = (n + val / 2, point)
                value = coeff * _e(dot(point, m_inv_beta))
                stored = terms.setdefault(key, [CycScalar.zero()] * len(labels))
                assert stored[i].is_zero(), "component supports overlap"
                stored[i] = value
    packed = {key: tuple(value) for key, value in terms.items()}
    k = h.weight + Fraction(m.nrows, 2)
    return JacobiFormData(k, m, jtype, FourierExpansion(m.nrows, prec, packed))


# --- vanishing certification ----------------------------------------------------


def vanishing_bound(k, m) -> Fraction:
    """k/12 + 1 + rd(M)/2: coefficients below it determine the form."""
    m = _as_index(m)
    if m.nrows > 4:
        raise RankTooLarge("covering radius is only computed up to rank 4")
    return rat(k) / 12 + 1 + rd(m) / 2


def vv_vanishing_bound(k) -> Fraction:
    """k/12 + 1, the scalar bound for component streams."""
    return rat(k) / 12 + 1


class CertifyResult(NamedTuple):
    """Outcome of the vanishing scan.  vanishes certifies the form is zero;
    otherwise witness holds the first nonzero (exponent, index, label)."""

    vanishes: bool
    bound: Fraction
    witness: Optional[tuple]


def certify_vanishing(phi: JacobiFormData) -> CertifyResult:
    """Scan [0, bound) for a nonzero coefficient.

    An empty scan certifies phi = 0; the truncation must reach the bound,
    else InsufficientPrecision.  The scan is half open: a coefficient at the
    bound itself is not consulted.
    """
    bound = vanishing_bound(phi.weight, phi.m)
    if phi.prec < bound:
        raise InsufficientPrecision(
            f"truncation {phi.prec} does not reach the bound {bound}"
        )
    labels = phi.jtype.labels
    for (mm, rr), cvec in phi.expansion.items():
        if mm >= bound:
            continue
        for i, c in enumerate(cvec):
            if not c.is_zero():
                return CertifyResult(False, bound, (mm, rr, labels[i]))
    return CertifyResult(True, bound, None)


def central_character_check(jtype, m) -> bool:
    """True iff the type's central character matches e(tr(M kappa)/2) on the
    generator matrices E_ii and E_ij + E_ji."""
    m = _as_index(m)
    n = m.nrows
    for i in range(n):
        for j in range(i, n):
            kappa = [[0] * n for _ in range(n)]
            kappa[i][j] += 1
            kappa[j][i] += 1
            if i == j:
                kappa[i][i] = 1
            kmat = RationalMatrix(kappa)
            if jtype.kappa_scalar(kmat) != central_scalar(m, kmat):
                return False
    return True
