"""Finite generator sets of moment matrices for spans of special cycles.

A generator is a strictly positive definite block matrix
T = [[m, tp/2], [p/2, M]] of rank r whose entries have denominator dividing
d.  Finiteness comes from three reductions: the index block M runs over
Minkowski-reduced classes with md(M) < B + rd(M)/2, the column p is reduced
to the nearest point modulo 2M Z^(r-1), and the corner m lies in the open
interval (0, B + rd(M)/2), where B = generator_bound(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import ceil
from typing import NamedTuple

from .discgroup import LatticeQuotient
from .errors import RankOutOfRange, RankTooLarge
from .lattice import _ldl, cvp_minimize, minkowski_reduce, rd, shortest_vectors
from .rational import RationalMatrix, gram_eval, rat, vec


def generator_bound(n) -> Fraction:
    """1 + (2 + 2n)/24 for signature parameter n >= 1."""
    n = rat(n)
    if n < 1:
        raise ValueError("signature parameter must be at least 1")
    return 1 + (2 + 2 * n) / 24


def _posdef(m: RationalMatrix) -> bool:
    """Leading principal minors, all positive."""
    n = m.nrows
    return all(m.submatrix(range(k), range(k)).det() > 0 for k in range(1, n + 1))


def _passes_radius_filter(gram: RationalMatrix, biggest, bound) -> bool:
    """md < bound + rd/2, with the exact Voronoi scan fenced by two cheap
    estimates: the packing radius below, the nearest-plane bound above."""
    if biggest < bound + shortest_vectors(gram).minimum / 8:
        return True
    gso, _unit = _ldl(gram)
    if biggest >= bound + sum(gso) / 8:
        return False
    return biggest < bound + rd(gram) / 2


def enumerate_index_classes(n, d, bound, cap_scale=1) -> list:
    """Minkowski-reduced positive definite M, d*M integral, with
    md(M) < bound + rd(M)/2.

    The diagonal search cap comes from rd <= n(n+1)/8 * md, which turns the
    target inequality into md * (1 - n(n+1)/16) < bound; the exact rd filter
    runs per surviving class.  cap_scale widens the search box only, never
    the filter, so the result is cap-stable.
    """
    if not 1 <= n <= 3:
        raise RankTooLarge("index classes are enumerated for ranks 1 to 3")
    if d < 1:
        raise ValueError("denominator bound must be at least 1")
    bound = rat(bound)
    if bound <= 0:
        return []
    slack = 1 - Fraction(n * (n + 1), 16)
    cap = bound / slack * cap_scale
    diag_vals = [
        Fraction(j, d) for j in range(1, ceil(cap * d) + 1) if Fraction(j, d) < cap
    ]

    classes = {}
    pairs = list(combinations_with_replacement(range(n), 2))
    off_pairs = [(i, j) for i, j in pairs if i < j]
    for diag in combinations_with_replacement(diag_vals, n):
        ranges = []
        for i, j in off_pairs:
            lim = min(diag[i], diag[j]) / 2
            top = int(lim * d)
            ranges.append([Fraction(v, d) for v in range(-top, top + 1)])
        for offs in product(*ranges):
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = diag[i]
            for (i, j), v in zip(off_pairs, offs):
                rows[i][j] = v
                rows[j][i] = v
            cand = RationalMatrix(rows)
            if not _posdef(cand):
                continue
            gram = minkowski_reduce(cand).gram
            key = gram.rows
            if key in classes:
                continue
            classes[key] = None
            biggest = max(gram[i, i] for i in range(n))
            if _passes_radius_filter(gram, biggest, bound):
                classes[key] = gram
    found = [g for g in classes.values() if g is not None]
    found.sort(key=lambda g: g.rows)
    return found


class IndexClassInfo(NamedTuple):
    """Provenance of one index class in a generator set."""

    index: RationalMatrix
    rd: Fraction
    md: Fraction


@dataclass(frozen=True)
class MomentMatrix:
    """One generator: t = [[m, tp/2], [p/2, index]], strictly positive."""

    r: int
    t: RationalMatrix
    m: Fraction
    p: tuple
    index: RationalMatrix


@dataclass(frozen=True)
class CycleGeneratorSet:
    """All generators for given (r, n, d), with per-class provenance."""

    r: int
    n: int
    d: int
    bound: Fraction
    matrices: tuple
    classes: tuple

    def __len__(self):
        return len(self.matrices)


def _reduce_column(m: RationalMatrix, p0):
    """Nearest-point representative of p0 modulo 2M Z^N under the M^{-1}
    metric; ties go to the lexicographically greatest residue."""
    shift = m.inverse() * p0
    half = tuple(x / 2 for x in shift)
    _val, mins = cvp_minimize(m, tuple(-x for x in half))
    two_m = 2 * m
    best = None
    for u in mins:
        cand = tuple(a - b for a, b in zip(p0, two_m * u))
        if best is None or cand > best:
            best = cand
    return best


def _block_matrix(mm, p, m: RationalMatrix) -> RationalMatrix:
    n = m.nrows
    rows = [[mm] + [x / 2 for x in p]]
    for i in range(n):
        rows.append([p[i] / 2] + [m[i, j] for j in range(n)])
    return RationalMatrix(rows)


def cycle_generators(r, n, d, cap_scale=1) -> CycleGeneratorSet:
    """Every moment matrix generator of rank r for signature parameter n and
    denominator bound d, sorted."""
    if not 2 <= r < 5:
        raise RankOutOfRange("generator enumeration needs 2 <= r < 5")
    if n < 1 or d < 1:
        raise ValueError("signature and denominator parameters start at 1")
    b = generator_bound(n)
    blocks = enumerate_index_classes(r - 1, d, b, cap_scale=cap_scale)
    infos = []
    mats = []
    scale = RationalMatrix.diagonal([Fraction(1, d)] * (r - 1))
    for block in blocks:
        radius = rd(block)
        infos.append(
            IndexClassInfo(block, radius, max(block[i, i] for i in range(r - 1)))
        )
        corner_cap = b + radius / 2
        quot = LatticeQuotient(scale, 2 * block)
        reduced = sorted(_reduce_column(block, vec(p0)) for p0 in quot.reps)
        block_inv = block.inverse()
        for p in reduced:
            floor_term = gram_eval(block_inv, p) / 4
            j = 1
            while Fraction(j, d) < corner_cap:
                mm = Fraction(j, d)
                j += 1
                if mm <= floor_term:
                    continue
                mats.append(MomentMatrix(r, _block_matrix(mm, p, block), mm, p, block))
    mats.sort(key=lambda g: g.t.rows)
    return CycleGeneratorSet(r, n, d, b, tuple(mats), tuple(infos))
