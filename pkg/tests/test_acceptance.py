"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they go.
"""

import random
import time
from math import comb

import pytest
from helpers import brute_quotient_dim, random_ideal, random_stable_ideal

from lexlab import (DegreeWindow, MonomialIdeal, RingSpec, adjoin_variable,
                    default_window, exchange_property, gin, gotzmann_representation,
                    hilbert_function, is_gotzmann, is_strongly_stable, lex_ideal,
                    local_cohomology_table, all_strongly_stable, saturate,
                    saturated_lex_generators, hilbert_series, tables_agree)
from lexlab.hilbert import hilbert_numerator, macaulay_growth, values_from_numerator

R2 = RingSpec(2)
R3 = RingSpec(3)
R4 = RingSpec(4)
EXAMPLE = MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2), (0, 1, 2)))
EXAMPLE_LEX = MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0),
                                 (0, 2, 1), (0, 1, 2)))


def report(number, ok, elapsed, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance] criterion {number:2d}: {status}  ({elapsed:.2f}s) {detail}")
    assert ok, f"criterion {number} failed: {detail}"


@pytest.fixture(scope="module")
def sweep():
    members = [I for I in all_strongly_stable(R3, 3) if not I.is_zero]
    data = []
    for I in members:
        lex = lex_ideal(I)
        data.append((I, lex, default_window(I, lex)))
    return data


def test_criterion_1_example_reproduction():
    t0 = time.time()
    ok = lex_ideal(EXAMPLE) == EXAMPLE_LEX
    xy = MonomialIdeal(R3, ((1, 0, 0), (0, 1, 0)))
    rep = exchange_property(EXAMPLE)
    ok = ok and rep.holds and rep.left == xy and rep.right == xy
    elapsed = time.time() - t0
    report(1, ok and elapsed < 5.0, elapsed, "lex ideal and exchange on the worked example")


def test_criterion_2_tables_on_example():
    t0 = time.time()
    w = DegreeWindow(-10, 6)
    tI = local_cohomology_table(EXAMPLE, w)
    tL = local_cohomology_table(EXAMPLE_LEX, w)
    ok = tables_agree(tI, tL, w, max_row=3) is None
    ok = ok and tI.row(0) == {1: 2, 2: 2}
    elapsed = time.time() - t0
    report(2, ok and elapsed < 30.0, elapsed, "cohomology tables agree on [-10, 6]")


def test_criterion_3_negative_control():
    t0 = time.time()
    I = MonomialIdeal(R4, ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)))
    rep = exchange_property(I)
    left = MonomialIdeal(R4, ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
                              (0, 3, 0, 0), (0, 2, 1, 0)))
    right = MonomialIdeal(R4, ((1, 0, 0, 0), (0, 3, 0, 0), (0, 2, 1, 0)))
    ok = not rep.holds and rep.left == left and rep.right == right
    lex = lex_ideal(I)
    w = default_window(I, lex)
    mismatch = tables_agree(local_cohomology_table(I, w),
                            local_cohomology_table(lex, w), w)
    ok = ok and mismatch == (0, 1)
    report(3, ok, time.time() - t0, "two-planes ideal fails (i) and (ii) at (0, 1)")


def test_criterion_4_equivalence_sweep(sweep):
    t0 = time.time()
    violations = []
    for I, lex, w in sweep:
        cond_i = exchange_property(I).holds
        cond_ii = tables_agree(local_cohomology_table(I, w),
                               local_cohomology_table(lex, w), w) is None
        if cond_i != cond_ii:
            violations.append(I)
    elapsed = time.time() - t0
    report(4, not violations and elapsed < 15 * 60, elapsed,
           f"(i) iff (ii) across {len(sweep)} strongly stable ideals, "
           f"{len(violations)} violations")


def test_criterion_5_monotone_chain(sweep):
    t0 = time.time()
    bad = []
    for I, lex, w in sweep:
        g = gin(I, trials=3, seed=0)
        tI = local_cohomology_table(I, w)
        tG = local_cohomology_table(g, w)
        tL = local_cohomology_table(lex, w)
        for i in range(R3.n + 1):
            for j in w.degrees():
                if not tI.get(i, j) <= tG.get(i, j) <= tL.get(i, j):
                    bad.append((I, i, j))
    report(5, not bad, time.time() - t0,
           f"h^i(R/I) <= h^i(R/gin I) <= h^i(R/I^lex) across {len(sweep)} ideals")


def test_criterion_6_extension_oracle():
    t0 = time.time()
    rng = random.Random(2024)
    checked = 0
    ok = True
    while checked < 25:
        n = rng.randint(1, 3)
        I = random_stable_ideal(rng, RingSpec(n), max_gens=2, max_deg=3)
        if I.is_unit:
            continue
        win = default_window(I)
        table = local_cohomology_table(I, win)
        out_window = DegreeWindow(win.lo + 1, win.hi)
        extended = adjoin_variable(table, out_window)
        bigger = MonomialIdeal(RingSpec(n + 1), tuple(g + (0,) for g in I.gens))
        direct = local_cohomology_table(bigger, out_window)
        if extended != direct:
            ok = False
            break
        checked += 1
    report(6, ok, time.time() - t0,
           f"variable-adjunction recursion matches direct tables on {checked} samples")


def test_criterion_7_gotzmann_and_roundtrip():
    t0 = time.time()
    rng = random.Random(777)
    found = 0
    ok = True
    for _ in range(60):
        I = random_ideal(rng, R3, max_gens=4, max_deg=3)
        if I.is_unit or I.is_zero:
            continue
        lex = lex_ideal(I)
        if lex == saturate(lex):
            found += 1
            if not is_gotzmann(I):
                ok = False
                break
    ok = ok and found >= 5
    targets = [((1,), 3, (0, 1)), ((2, 2), 4, (0, 2, 1)), ((1, 3), 4, (0, 3, 1))]
    for coeffs, n, v in targets:
        g = gotzmann_representation(coeffs, n)
        if g.v != v:
            ok = False
            break
        built = saturated_lex_generators(g)
        data = hilbert_series(built, built.max_generator_degree() + n + 3)
        from fractions import Fraction
        if data.polynomial != tuple(Fraction(c) for c in coeffs):
            ok = False
            break
    report(7, ok, time.time() - t0,
           f"saturated-lex implies Gotzmann ({found} hits) and v-vector round trips")


def test_criterion_8_gin_suite():
    t0 = time.time()
    ok = gin(EXAMPLE, trials=3, seed=0) == EXAMPLE
    ok = ok and gin(MonomialIdeal(R3, ((1, 1, 0), (1, 0, 1))), trials=3, seed=0) \
        == MonomialIdeal(R3, ((2, 0, 0), (1, 1, 0)))
    rng = random.Random(88)
    checked = 0
    while ok and checked < 20:
        I = random_ideal(rng, R3, max_gens=3, max_deg=3)
        if I.is_unit:
            continue
        for seed in (0, 1):
            g_of_sat = gin(saturate(I), trials=3, seed=seed)
            sat_of_g = saturate(gin(I, trials=3, seed=seed))
            if g_of_sat != sat_of_g or not is_strongly_stable(g_of_sat):
                ok = False
                break
        checked += 1
    report(8, ok, time.time() - t0,
           f"gin fixed points, gin((xy,xz)), and commutation on {checked} samples x 2 seeds")


def test_criterion_9_principal_duality():
    t0 = time.time()
    ok = True
    rng = random.Random(9)
    for n in (2, 3):
        ring = RingSpec(n)
        for d in range(1, 6):
            shapes = {tuple(d if t == 0 else 0 for t in range(n))}
            for _ in range(2):
                e = [0] * n
                for _ in range(d):
                    e[rng.randrange(n)] += 1
                shapes.add(tuple(e))
            for f in shapes:
                I = MonomialIdeal(ring, (f,))
                table = local_cohomology_table(I)
                for j in table.window.degrees():
                    m = d - n - j
                    expected = (comb(m + n - 1, n - 1) if m >= 0 else 0) \
                        - (comb(m - d + n - 1, n - 1) if m - d >= 0 else 0)
                    if table.get(n - 1, j) != expected:
                        ok = False
    report(9, ok, time.time() - t0,
           "h^(n-1) of principal quotients matches dim(R/f)_(deg f - n - j)")


def test_criterion_10_hilbert_engine():
    t0 = time.time()
    rng = random.Random(1010)
    ok = True
    for _ in range(200):
        n = rng.randint(2, 4)
        I = random_ideal(rng, RingSpec(n), max_gens=6, max_deg=5)
        num_pivot = hilbert_numerator(I, "pivot")
        num_ie = hilbert_numerator(I, "inclusion-exclusion")
        if num_pivot != num_ie:
            ok = False
            break
        values = values_from_numerator(num_pivot, n, 9)
        brute = [brute_quotient_dim(I, d) for d in range(10)]
        if values != brute:
            ok = False
            break
        for d in range(1, 9):
            if brute[d] and brute[d + 1] > macaulay_growth(brute[d], d):
                ok = False
                break
    elapsed = time.time() - t0
    report(10, ok and elapsed < 300, elapsed,
           "pivot = inclusion-exclusion = enumeration on 200 ideals, growth bound holds")
