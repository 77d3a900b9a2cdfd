from fractions import Fraction

import pytest

from jacobiq.cycles import (
    CycleGeneratorSet,
    MomentMatrix,
    cycle_generators,
    enumerate_index_classes,
    generator_bound,
)
from jacobiq.errors import RankOutOfRange, RankTooLarge
from jacobiq.lattice import md, minkowski_reduce, rd
from oracles import brute_rank2_moments, leibniz_det


def test_generator_bound_values():
    assert generator_bound(2) == Fraction(5, 4)
    assert generator_bound(10) == Fraction(23, 12)
    assert generator_bound(1) == Fraction(7, 6)
    with pytest.raises(ValueError):
        generator_bound(0)


def test_enumerate_scalar_classes():
    ones = enumerate_index_classes(1, 1, Fraction(5, 4))
    assert [g[0, 0] for g in ones] == [1]
    halves = enumerate_index_classes(1, 2, Fraction(5, 4))
    assert [g[0, 0] for g in halves] == [Fraction(1, 2), 1]
    assert enumerate_index_classes(2, 1, 0) == []
    assert enumerate_index_classes(3, 2, -1) == []
    with pytest.raises(RankTooLarge):
        enumerate_index_classes(4, 1, 1)
    with pytest.raises(RankTooLarge):
        enumerate_index_classes(0, 1, 1)


def test_enumerate_emits_reduced_classes():
    for n, d, b in ((1, 2, Fraction(5, 4)), (2, 1, 2), (2, 2, Fraction(3, 2)), (3, 1, Fraction(5, 4))):
        found = enumerate_index_classes(n, d, b)
        assert found == sorted(found, key=lambda g: g.rows)
        for g in found:
            assert minkowski_reduce(g).gram == g
            assert (d * g).is_integral()
            biggest = max(g[i, i] for i in range(n))
            assert biggest == md(g)
            assert biggest < b + rd(g) / 2
            assert rd(g) < 2 * md(g)
            for i in range(n):
                for j in range(i + 1, n):
                    assert 2 * abs(g[i, j]) <= min(g[i, i], g[j, j])


def test_worked_example_rank_two():
    gs = cycle_generators(2, 2, 1)
    assert gs.bound == Fraction(5, 4)
    assert len(gs) == 2
    assert [g.t.rows for g in gs.matrices] == [
        ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),
        ((Fraction(1), Fraction(1, 2)), (Fraction(1, 2), Fraction(1))),
    ]
    info = gs.classes[0]
    assert info.index[0, 0] == 1 and info.rd == Fraction(1, 4) and info.md == 1


def test_rank_two_matches_brute_scan():
    for n in (1, 2, 4):
        for d in (1, 2):
            gs = cycle_generators(2, n, d)
            mine = {(g.m, g.p[0], g.index[0, 0]) for g in gs.matrices}
            assert mine == brute_rank2_moments(n, d), (n, d)


def test_cap_doubling_stable():
    for r in (2, 3):
        for n in (1, 2, 4):
            for d in (1, 2):
                base = cycle_generators(r, n, d)
                wide = cycle_generators(r, n, d, cap_scale=2)
                assert len(base) == len(wide), (r, n, d)
                assert [g.t for g in base.matrices] == [g.t for g in wide.matrices]


def test_generator_set_invariants():
    gs = cycle_generators(3, 2, 2)
    rows_seen = [g.t.rows for g in gs.matrices]
    assert rows_seen == sorted(rows_seen)
    for g in gs.matrices:
        assert g.r == 3
        assert g.m.denominator <= 2 and (2 * g.index).is_integral()
        assert all(x.denominator <= 2 for x in g.p)
        assert (4 * g.t).is_integral()
        assert all(
            leibniz_det(g.t.submatrix(range(k), range(k))) > 0
            for k in range(1, 4)
        )
        radius = rd(g.index)
        assert g.m < gs.bound + radius / 2
        assert md(g.index) < gs.bound + radius / 2


def test_rank_gates():
    with pytest.raises(RankOutOfRange):
        cycle_generators(1, 1, 1)
    with pytest.raises(RankOutOfRange):
        cycle_generators(5, 1, 1)
    with pytest.raises(ValueError):
        cycle_generators(2, 0, 1)
    with pytest.raises(ValueError):
        cycle_generators(2, 1, 0)
