import random

import pytest
from helpers import brute_ideal_dim, random_ideal, random_stable_ideal

from lexlab import (InternalInconsistency, MonomialIdeal, RingSpec, colon,
                    depth_positive_stable, graded_generator_counts, intersect,
                    is_strongly_stable, maximal_ideal, saturate,
                    strong_stability_witness)
from lexlab.ideals import _saturate_by_colon

R3 = RingSpec(3)
R4 = RingSpec(4)
EXAMPLE = MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2), (0, 1, 2)))


def test_minimalize_examples():
    assert MonomialIdeal(R3, ((2, 0, 0), (2, 1, 0), (1, 1, 0))).gens == ((2, 0, 0), (1, 1, 0))
    assert MonomialIdeal(R3).is_zero
    gens = ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 0), (0, 1, 0))
    assert MonomialIdeal(R3, gens).gens == ((1, 0, 0), (0, 1, 0))


def test_unit_and_zero():
    unit = MonomialIdeal(R3, ((0, 0, 0), (1, 0, 0)))
    assert unit.is_unit and unit.gens == ((0, 0, 0),)
    assert not MonomialIdeal(R3).is_unit
    with pytest.raises(ValueError):
        MonomialIdeal(R3, ((1, 0),))


def test_contains_examples():
    assert not EXAMPLE.contains((1, 0, 1))          # xz
    assert EXAMPLE.contains((1, 1, 1))              # xyz, divisible by xy
    assert not MonomialIdeal(R3).contains((1, 0, 0))


def test_colon_examples():
    I = MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0)))
    x = MonomialIdeal(R3, ((1, 0, 0),))
    assert colon(I, x).gens == ((1, 0, 0), (0, 1, 0))
    unit = MonomialIdeal(R3, ((0, 0, 0),))
    assert colon(EXAMPLE, unit) == EXAMPLE
    with pytest.raises(ValueError):
        colon(EXAMPLE, MonomialIdeal(R3))


def test_iterated_colon_reaches_saturation():
    m = maximal_ideal(R3)
    current = EXAMPLE
    while True:
        nxt = colon(current, m)
        if nxt == current:
            break
        current = nxt
    assert current.gens == ((1, 0, 0), (0, 1, 0))


def test_saturate_examples():
    assert saturate(EXAMPLE).gens == ((1, 0, 0), (0, 1, 0))
    m2 = MonomialIdeal(R3, tuple((a, b, c) for a in range(3) for b in range(3)
                                 for c in range(3) if a + b + c == 2))
    assert saturate(m2).is_unit
    I4 = MonomialIdeal(R4, ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
                            (0, 3, 0, 0), (0, 2, 1, 0)))
    assert saturate(I4).gens == ((1, 0, 0, 0), (0, 3, 0, 0), (0, 2, 1, 0))


def test_saturate_properties():
    rng = random.Random(23)
    for _ in range(40):
        I = random_ideal(rng, R3)
        sat = saturate(I)
        assert saturate(sat) == sat
        assert all(sat.contains(g) for g in I.gens)
        # quotient sat/I vanishes in high degrees
        d = max(sat.max_generator_degree(), I.max_generator_degree()) + R3.n + 2
        assert brute_ideal_dim(sat, d) == brute_ideal_dim(I, d)


def test_both_saturation_paths_agree_on_stable_ideals():
    rng = random.Random(5)
    for _ in range(30):
        I = random_stable_ideal(rng, R3)
        assert is_strongly_stable(I)
        assert saturate(I) == _saturate_by_colon(I)


def test_strongly_stable_examples():
    assert is_strongly_stable(EXAMPLE)
    bad = MonomialIdeal(R3, ((1, 0, 1),))
    assert strong_stability_witness(bad) == ((1, 0, 1), 1, 2)
    assert is_strongly_stable(MonomialIdeal(R3, ((1, 0, 0),)))
    assert is_strongly_stable(MonomialIdeal(R3))   # vacuous


def test_graded_generator_counts():
    assert graded_generator_counts(EXAMPLE) == {2: 3, 3: 2}
    lex = MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0),
                             (0, 2, 1), (0, 1, 2)))
    assert graded_generator_counts(lex) == {2: 3, 3: 3}
    assert graded_generator_counts(MonomialIdeal(R3)) == {}
    rng = random.Random(17)
    for _ in range(20):
        I = random_ideal(rng, R4)
        assert sum(graded_generator_counts(I).values()) == len(I.gens)


def test_depth_positive_stable():
    assert depth_positive_stable(MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0))))
    assert not depth_positive_stable(EXAMPLE)
    I4 = MonomialIdeal(R4, ((1, 0, 0, 0), (0, 3, 0, 0), (0, 2, 1, 0)))
    assert depth_positive_stable(I4)
    with pytest.raises(ValueError):
        depth_positive_stable(MonomialIdeal(R3, ((1, 0, 1),)))


def test_intersect_is_symmetric_and_contained():
    rng = random.Random(31)
    for _ in range(20):
        a = random_ideal(rng, R3)
        b = random_ideal(rng, R3)
        ab = intersect(a, b)
        assert ab == intersect(b, a)
        for g in ab.gens:
            assert a.contains(g) and b.contains(g)
