"""Heisenberg elements and the finite representations attached to an index.

Three layers, all exact over cyclotomic scalars:

  * rho_M_matrix: the representation on the discriminant group, with S and T
    acting by the normalized finite Fourier matrix and the quadratic-form
    diagonal, and integer Heisenberg elements by shift and character
    operators.
  * pi_matrix: the representation on the coset space (m Z^N + Z^N) / Z^N
    twisted by a character pair (alpha, beta).
  * rho_induced_matrix: the block representation over the orbit of
    (alpha, beta) under (a, b) -> (a + b, b) and (a, b) -> (-b, a), with
    pi-blocks on the diagonal for Heisenberg elements.

The Heisenberg action matrices exist for any admissible index.  They compose
as a homomorphism exactly when 2m is integral; outside that scope the report
functions say so instead of asserting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import NamedTuple, Optional

from .cyclotomic import CycScalar, RepMatrix, cyc_inv_sqrt
from .discgroup import DiscGroup, LatticeQuotient, split_index
from .errors import NotAdmissible, NotInGroup
from .rational import (
    RationalMatrix,
    bilinear_eval,
    dot,
    gram_eval,
    is_integral_vector,
    rat,
    vec,
)


def _outer(x, y) -> RationalMatrix:
    return RationalMatrix([[a * b for b in y] for a in x])


@dataclass(frozen=True)
class HeisenbergElement:
    """Group element (lam, mu, kappa) with the twisted commutator law."""

    lam: tuple
    mu: tuple
    kappa: RationalMatrix

    @classmethod
    def of(cls, lam, mu, kappa=None) -> "HeisenbergElement":
        lam = vec(lam)
        mu = vec(mu)
        if len(lam) != len(mu):
            from .errors import DimensionMismatch

            raise DimensionMismatch("lam and mu lengths differ")
        n = len(lam)
        if kappa is None:
            kappa = RationalMatrix.zero(n)
        if (kappa.nrows, kappa.ncols) != (n, n):
            from .errors import DimensionMismatch

            raise DimensionMismatch("kappa size differs from vector length")
        return cls(lam, mu, kappa)

    @property
    def rank(self) -> int:
        return len(self.lam)

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        if not isinstance(other, HeisenbergElement):
            return NotImplemented
        kappa = (
            self.kappa
            + other.kappa
            + _outer(self.lam, other.mu)
            - _outer(self.mu, other.lam)
        )
        return HeisenbergElement(
            tuple(a + b for a, b in zip(self.lam, other.lam)),
            tuple(a + b for a, b in zip(self.mu, other.mu)),
            kappa,
        )

    def inverse(self) -> "HeisenbergElement":
        kappa = -self.kappa + _outer(self.lam, self.mu) - _outer(self.mu, self.lam)
        return HeisenbergElement(
            tuple(-a for a in self.lam), tuple(-a for a in self.mu), kappa
        )

    @classmethod
    def identity(cls, n) -> "HeisenbergElement":
        return cls.of([0] * n, [0] * n)

    def is_integral(self) -> bool:
        return (
            is_integral_vector(self.lam)
            and is_integral_vector(self.mu)
            and self.kappa.is_integral()
        )


def heisenberg_mul(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    return a * b


def heisenberg_inverse(a: HeisenbergElement) -> HeisenbergElement:
    return a.inverse()


def central_scalar(m: RationalMatrix, kappa: RationalMatrix) -> CycScalar:
    """e(tr(m kappa) / 2), the central character of the index."""
    return CycScalar.e((m * kappa).trace() / 2)


def _e(q) -> CycScalar:
    return CycScalar.e(q)


# --- representation on the discriminant group ---------------------------------


def _disc(m) -> DiscGroup:
    g = m if isinstance(m, DiscGroup) else DiscGroup(m)
    if not g.admissible:
        raise NotAdmissible("index matrix is not admissible")
    return g


def rho_M_matrix(m, gen) -> RepMatrix:
    """Matrix of a generator on the discriminant group basis.

    gen is "S", "T", or an integer HeisenbergElement.  S acts by the
    normalized Fourier matrix e(-b(nu, nu')), T by the diagonal of the
    quadratic form, (lam, 0, 0) by the shift nu -> nu + m lam, (0, mu, 0) by
    the character diagonal e(nu . mu), and kappa centrally.  The sign in the
    S kernel is the one for which (S T)^3 = gauss_sum * S^2 holds; the theta
    vector itself transforms with the conjugate matrix.
    """
    g = _disc(m)
    labels = g.reps
    if gen == "S":
        norm = cyc_inv_sqrt(g.order)
        return RepMatrix.from_function(
            labels, lambda r, c: norm * _e(-g.bform(r, c))
        )
    if gen == "T":
        return RepMatrix(
            labels,
            [
                [_e(g.qvalue(r)) if r == c else 0 for c in labels]
                for r in labels
            ],
        )
    if isinstance(gen, HeisenbergElement):
        if not (is_integral_vector(gen.lam) and is_integral_vector(gen.mu)):
            raise NotInGroup("discriminant-group action needs integer lam, mu")
        shift = g.m * gen.lam
        perm = {c: g.canonicalize(tuple(a + b for a, b in zip(c, shift))) for c in labels}
        scalar = central_scalar(g.m, gen.kappa - _outer(gen.lam, gen.mu))
        return RepMatrix.from_function(
            labels,
            lambda r, c: scalar * _e(dot(c, gen.mu))
            if r == perm[c]
            else CycScalar.zero(),
        )
    raise ValueError(f"unknown generator {gen!r}")


def gauss_sum(m) -> CycScalar:
    """Normalized Gauss sum of the discriminant form: the average of
    e(q(nu)) scaled by order^(-1/2).  Has absolute value 1."""
    g = _disc(m)
    total = sum((_e(g.qvalue(r)) for r in g.reps), CycScalar.zero())
    return cyc_inv_sqrt(g.order) * total


def signature_mod8(m) -> int:
    """The s in gauss_sum = e(s/8)."""
    gs = gauss_sum(m)
    for s in range(8):
        if gs == _e(Fraction(s, 8)):
            return s
    raise NotAdmissible("gauss sum is not an eighth root of unity")


def rho_relations_report(m) -> dict:
    """Exact pass/fail record for the defining relations of the generator
    matrices on the discriminant group.  Nothing is asserted: each item
    carries its own verdict and a witness when it fails.
    """
    g = _disc(m)
    n = g.m.nrows
    s_mat = rho_M_matrix(g, "S")
    t_mat = rho_M_matrix(g, "T")
    gs = gauss_sum(g)
    items = {}

    unit = (gs * gs.conjugate()).rational_value()
    items["gauss_sum_unit_modulus"] = {
        "holds": unit == 1,
        "witness": None if unit == 1 else str(unit),
    }

    s2 = s_mat * s_mat
    st3 = (s_mat * t_mat) ** 3
    ok = st3 == gs * s2
    items["st_cubed_is_gauss_times_s_squared"] = {"holds": ok, "witness": None}

    perm = s2.phase_permutation()
    ok = perm is not None and all(
        dest == g.neg(src) and phase == 1 for src, (dest, phase) in perm.items()
    )
    items["s_squared_is_negation_permutation"] = {
        "holds": ok,
        "witness": None if ok else "s^2 is not the phase-free negation map",
    }

    sh = s_mat.conj_transpose()
    ok = True
    witness = None
    for i in range(n):
        for j in range(n):
            lam = tuple(Fraction(int(i == k)) for k in range(n))
            mu = tuple(Fraction(int(j == k)) for k in range(n))
            lhs = s_mat * rho_M_matrix(g, HeisenbergElement.of(lam, mu)) * sh
            swapped = HeisenbergElement.of(mu, tuple(-x for x in lam))
            phase = _e(-2 * bilinear_eval(g.m, mu, lam))
            if lhs != phase * rho_M_matrix(g, swapped):
                ok = False
                witness = f"lam=e_{i}, mu=e_{j}"
                break
        if not ok:
            break
    items["s_conjugation_swaps_lam_mu"] = {"holds": ok, "witness": witness}

    return {
        "disc_order": g.order,
        "two_m_integral": (2 * g.m).is_integral(),
        "signature_mod8": signature_mod8(g),
        "items": items,
    }


# --- representation on the coset space ----------------------------------------


@dataclass(frozen=True)
class PiRep:
    """The coset-space representation data for one (alpha, beta) pair."""

    m: RationalMatrix
    alpha: tuple
    beta: tuple

    @property
    def frac_part(self) -> RationalMatrix:
        return split_index(self.m).m_frac

    def quotient(self) -> LatticeQuotient:
        n = self.m.nrows
        return LatticeQuotient(self.frac_part, RationalMatrix.identity(n))

    def matrix(self, element: HeisenbergElement) -> RepMatrix:
        return pi_matrix(self.m, self.alpha, self.beta, element)


def _coset_quotient(m: RationalMatrix) -> LatticeQuotient:
    sp = split_index(m)
    return LatticeQuotient(sp.m_frac, RationalMatrix.identity(m.nrows))


def pi_matrix(m: RationalMatrix, alpha, beta, element: HeisenbergElement) -> RepMatrix:
    """Matrix of an integer Heisenberg element on the coset space basis.

    (lam, 0, 0) shifts r by m_frac lam with character e(alpha . lam),
    (0, mu, 0) is diagonal with e((beta + r) . mu), and kappa acts by the
    central character; the mixed element factors as shift * diagonal times
    e(tr(m (kappa - lam mu^T)) / 2).
    """
    alpha = vec(alpha)
    beta = vec(beta)
    if not (is_integral_vector(element.lam) and is_integral_vector(element.mu)):
        raise NotInGroup("coset-space action needs integer lam, mu")
    quot = _coset_quotient(m)
    labels = quot.reps
    shift = quot.ambient * element.lam
    perm = {
        c: quot.canonicalize(tuple(a + b for a, b in zip(c, shift))) for c in labels
    }
    scalar = central_scalar(m, element.kappa - _outer(element.lam, element.mu))
    scalar = scalar * _e(dot(alpha, element.lam))

    def entry(r, c):
        if r != perm[c]:
            return CycScalar.zero()
        return scalar * _e(dot(tuple(a + b for a, b in zip(beta, c)), element.mu))

    return RepMatrix.from_function(labels, entry)


# --- orbit of (alpha, beta) and the induced representation --------------------


def _canon_mod_columns(basis: RationalMatrix, basis_inv: RationalMatrix, x) -> tuple:
    c = basis_inv * vec(x)
    return basis * tuple(y % 1 for y in c)


class OrbitAB(NamedTuple):
    """Orbit of a character pair under (a,b) -> (a+b, b) and (a,b) -> (-b, a),
    taken mod the lattice spanned by the fractional part's columns.  pairs is
    sorted; t_perm and s_perm give the index maps of the two moves."""

    pairs: tuple
    t_perm: tuple
    s_perm: tuple

    def index(self, pair) -> int:
        return self.pairs.index(pair)


def orbit_alpha_beta(m: RationalMatrix, alpha, beta) -> OrbitAB:
    f = split_index(m).m_frac
    f_inv = f.inverse()

    def canon_pair(a, b):
        return (
            _canon_mod_columns(f, f_inv, a),
            _canon_mod_columns(f, f_inv, b),
        )

    start = canon_pair(vec(alpha), vec(beta))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a, b in frontier:
            t_img = canon_pair(tuple(x + y for x, y in zip(a, b)), b)
            s_img = canon_pair(tuple(-y for y in b), a)
            for img in (t_img, s_img):
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    pairs = tuple(sorted(seen))
    index = {p: i for i, p in enumerate(pairs)}
    t_perm = []
    s_perm = []
    for a, b in pairs:
        t_perm.append(index[canon_pair(tuple(x + y for x, y in zip(a, b)), b)])
        s_perm.append(index[canon_pair(tuple(-y for y in b), a)])
    return OrbitAB(pairs, tuple(t_perm), tuple(s_perm))


def rho_induced_matrix(m: RationalMatrix, alpha, beta, gen) -> RepMatrix:
    """Matrix of a generator on the induced space: one coset-space block per
    orbit pair.

    T maps the (a, b) block to the (a+b, b) block with the diagonal cocycle
    t_r = e(m[lam_r]/2), lam_r the integer solve of m_frac lam = r.  S maps
    (a, b) to (-b, a) with the normalized Fourier kernel
    e(lam(r) . r') / sqrt(#R).  Block labels carry the canonicalized pair, so
    each map picks up the phase e(-u . r) of the intertwiner that moves the
    raw image pair into its canonical box, u = m_frac^{-1}(raw - canonical).
    Heisenberg elements act block by block through the coset-space
    representation.
    """
    orbit = orbit_alpha_beta(m, alpha, beta)
    quot = _coset_quotient(m)
    f_inv = quot.ambient.inverse()
    labels = tuple((pair, r) for pair in orbit.pairs for r in quot.reps)

    def lam_of(r):
        lam = f_inv * r
        assert is_integral_vector(lam)
        return lam

    def canon_shift(raw, canonical):
        u = f_inv * tuple(x - y for x, y in zip(raw, canonical))
        assert is_integral_vector(u)
        return u

    entries = {}
    if gen == "T":
        for pi_idx, pair in enumerate(orbit.pairs):
            a, b = pair
            dest = orbit.pairs[orbit.t_perm[pi_idx]]
            u = canon_shift(tuple(x + y for x, y in zip(a, b)), dest[0])
            for r in quot.reps:
                lam = lam_of(r)
                entries[(dest, r), (pair, r)] = _e(
                    gram_eval(m, lam) / 2 - dot(u, r)
                )
    elif gen == "S":
        norm = cyc_inv_sqrt(quot.order)
        for pi_idx, pair in enumerate(orbit.pairs):
            a, b = pair
            dest = orbit.pairs[orbit.s_perm[pi_idx]]
            u = canon_shift(tuple(-x for x in b), dest[0])
            for r in quot.reps:
                lam_r = lam_of(r)
                for rp in quot.reps:
                    entries[(dest, rp), (pair, r)] = norm * _e(
                        dot(lam_r, rp) - dot(u, rp)
                    )
    elif isinstance(gen, HeisenbergElement):
        for pair in orbit.pairs:
            a, b = pair
            block = pi_matrix(m, a, b, gen)
            for i, r in enumerate(block.labels):
                for j, c in enumerate(block.labels):
                    x = block.entries[i][j]
                    if not x.is_zero():
                        entries[(pair, r), (pair, c)] = x
    else:
        raise ValueError(f"unknown generator {gen!r}")

    return RepMatrix.from_function(
        labels, lambda r, c: entries.get((r, c), CycScalar.zero())
    )


# --- isomorphism of coset-space representations -------------------------------


class PiIsoResult(NamedTuple):
    """Outcome of the intertwiner search.  isomorphic is True with a verified
    intertwiner, False with a witness, or None when neither a construction
    nor a certificate was found."""

    isomorphic: Optional[bool]
    intertwiner: Optional[RepMatrix]
    witness: Optional[str]


def _generators(n):
    out = []
    for i in range(n):
        lam = [0] * n
        lam[i] = 1
        out.append(HeisenbergElement.of(lam, [0] * n))
        mu = [0] * n
        mu[i] = 1
        out.append(HeisenbergElement.of([0] * n, mu))
    for i in range(n):
        for j in range(n):
            kap = [[0] * n for _ in range(n)]
            kap[i][j] = 1
            out.append(HeisenbergElement.of([0] * n, [0] * n, RationalMatrix(kap)))
    return out


def pi_isomorphism(m1, alpha1, beta1, m2, alpha2, beta2) -> PiIsoResult:
    """Decide whether the two coset-space representations are intertwined by
    a shift-and-phase map, and produce the intertwiner or a witness.

    The candidate map sends e_r to e(abar . r) e_{r + beta1 - beta2} with
    m_frac abar = alpha2 - alpha1, and is verified exactly on a generating
    set.  Distinct central characters (the difference must be even, entry by
    entry) or mismatched generator spectra give certified negatives.
    """
    m1 = m1 if isinstance(m1, RationalMatrix) else RationalMatrix(m1)
    m2 = m2 if isinstance(m2, RationalMatrix) else RationalMatrix(m2)
    alpha1, beta1, alpha2, beta2 = map(vec, (alpha1, beta1, alpha2, beta2))
    n = m1.nrows
    if m2.nrows != n:
        return PiIsoResult(False, None, "ranks differ")
    diff = m1 - m2
    if not diff.is_integral():
        return PiIsoResult(False, None, "central characters differ: m1 - m2 is not integral")
    for i in range(n):
        for j in range(n):
            if diff[i, j] % 2:
                return PiIsoResult(
                    False,
                    None,
                    f"central characters differ at kappa = E[{i},{j}]: "
                    f"tr((m1 - m2) kappa)/2 = {diff[j, i]}/2",
                )
    q1 = _coset_quotient(m1)
    q2 = _coset_quotient(m2)
    if q1.order != q2.order:
        return PiIsoResult(False, None, "coset space dimensions differ")

    f1_inv = q1.ambient.inverse()
    abar = f1_inv * tuple(a2 - a1 for a1, a2 in zip(alpha1, alpha2))
    if not is_integral_vector(abar):
        wit = _spectrum_witness(m1, alpha1, beta1, m2, alpha2, beta2)
        if wit is not None:
            return PiIsoResult(False, None, wit)
        return PiIsoResult(None, None, "alpha difference is not in the coset lattice")
    bbar = tuple(b1 - b2 for b1, b2 in zip(beta1, beta2))
    try:
        dest = {r: q2.canonicalize(tuple(a + b for a, b in zip(r, bbar))) for r in q1.reps}
    except NotInGroup:
        wit = _spectrum_witness(m1, alpha1, beta1, m2, alpha2, beta2)
        if wit is not None:
            return PiIsoResult(False, None, wit)
        return PiIsoResult(None, None, "beta difference is not in the coset lattice")

    iota = {}
    for r in q1.reps:
        iota[(dest[r], r)] = _e(dot(abar, r))
    # rows live on q2 labels, columns on q1 labels; RepMatrix is square-only,
    # so the matrix is carried on the q1 labels and relabelled when composing
    # on the q2 side
    labels1 = q1.reps
    labels2 = q2.reps
    mat = RepMatrix(
        labels1,
        [
            [
                iota.get((labels2[i], labels1[j]), CycScalar.zero())
                for j in range(len(labels1))
            ]
            for i in range(len(labels2))
        ],
    )
    for h in _generators(n):
        p1 = pi_matrix(m1, alpha1, beta1, h)
        p2 = pi_matrix(m2, alpha2, beta2, h)
        lhs = mat * p1
        rhs = RepMatrix(labels1, (p2 * RepMatrix(labels2, mat.entries)).entries)
        if lhs != rhs:
            return PiIsoResult(
                None,
                None,
                f"candidate intertwiner fails at lam={h.lam}, mu={h.mu}",
            )
    return PiIsoResult(True, mat, None)


def _phase_perm_spectrum(mat: RepMatrix):
    """Sorted eigenvalue exponents of a phase permutation matrix, or None."""
    perm = mat.phase_permutation()
    if perm is None:
        return None
    succ = {src: dst for src, (dst, _ph) in perm.items()}
    phase = {src: ph for src, (_dst, ph) in perm.items()}
    out = []
    seen = set()
    for start in mat.labels:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        cur = succ[start]
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            cur = succ[cur]
        total = Fraction(0)
        for lab in cycle:
            terms = phase[lab].terms
            assert len(terms) == 1
            (q, c), = terms.items()
            assert c == 1
            total += q
        ell = len(cycle)
        for k in range(ell):
            out.append((total + k) / ell % 1)
    return sorted(out)


def _spectrum_witness(m1, alpha1, beta1, m2, alpha2, beta2):
    """Search small generators for an exact eigenvalue-multiset mismatch."""
    n = m1.nrows
    for h in _generators(n):
        if h.kappa != RationalMatrix.zero(n):
            continue
        s1 = _phase_perm_spectrum(pi_matrix(m1, alpha1, beta1, h))
        s2 = _phase_perm_spectrum(pi_matrix(m2, alpha2, beta2, h))
        if s1 is not None and s2 is not None and s1 != s2:
            fmt = lambda xs: "(" + ", ".join(str(x) for x in xs) + ")"
            return (
                f"generator lam={fmt(h.lam)}, mu={fmt(h.mu)} has different "
                f"eigenvalue multisets: {fmt(s1)} vs {fmt(s2)}"
            )
    return None
