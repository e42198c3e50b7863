"""Acceptance criteria, one test per criterion.

Every comparison is exact: values are rationals, so the tolerance is zero.
Run ``pytest tests/test_acceptance.py`` (or this file directly); the terminal
summary prints one PASS/FAIL line per criterion.
"""

import random
import sys
import time
import timeit
from fractions import Fraction as F

import pytest

from bipolar_fre import (
    BipolarSystem,
    analyze_single,
    enumerate_families,
    extremal_single,
    extremal_system,
    greatest_fre_candidate,
    is_feasible_pair,
    negate,
    preprocess,
    residuum,
    system_solvable,
    tnorm,
    verify_solution,
    zero_rhs_solution,
)
from bipolar_fre.algebra import UnitRational, eval_bipolar_row, eval_fre_row
from bipolar_fre.oracle import oracle_solve, planted_instance, random_instance
from bipolar_fre.witness import NoFeasiblePair
from conftest import fr


def best_ms(fn, repeat=7, number=20):
    fn()  # warm caches
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number * 1000


def S(*sets):
    return {frozenset(j - 1 for j in s) for s in sets}


def random_suite(count, seed=2024):
    """Seeded mix of random and planted instances, m <= 5, n <= 4, d <= 6."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        m, n, d = rng.randint(1, 5), rng.randint(1, 4), rng.randint(1, 6)
        make = planted_instance if k % 2 else random_instance
        out.append(preprocess(make(rng.randrange(10**9), m, n, d))[0])
    return out


def covers(system, fre, jp, jm):
    """Feasibility straight from the definition, without the bitmask kernels."""
    for j in jp & jm:
        if fre.x_bar[j] + fre.y_bar[j] != 1:
            return False
    for i in range(system.n):
        b = system.b[i]
        if b == 0:  # the empty max is 0, so with no columns the row still holds
            continue
        if not (any(system.a_plus[i][j] * fre.x_bar[j] == b for j in jp)
                or any(system.a_minus[i][j] * fre.y_bar[j] == b for j in jm)):
            return False
    return True


@pytest.fixture(scope="module")
def suite():
    return random_suite(5000)


@pytest.mark.criterion(1, "single equation: greatest and least solutions, < 1 ms")
def test_ac1(single_eq):
    fre = greatest_fre_candidate(single_eq)
    assert fre.interleaved() == fr("1/2", 1, "4/5", 1)
    a = extremal_single(single_eq)
    assert a.greatest == fr("1/2", "4/5")
    assert a.least == fr(0, 0)
    assert best_ms(lambda: extremal_single(single_eq)) < 1.0


@pytest.mark.criterion(2, "single-equation variant: two minimal solutions")
def test_ac2(single_eq_variant):
    a = extremal_single(single_eq_variant)
    assert a.greatest == fr("1/2", "4/5")
    assert set(a.minimal) == {fr("1/2", 0), fr(0, "4/5")}
    assert len(a.minimal) == len(a.k_plus) == 2


@pytest.mark.criterion(3, "non-solution check reports row value 8/25")
def test_ac3(single_eq):
    check = verify_solution(single_eq, fr("0.4", "0.5"))
    assert check.rows[0].value == F(8, 25)
    assert check.ok is False


@pytest.mark.criterion(4, "forced-conflict system is unsolvable with witness")
def test_ac4(conflict_sys):
    v = system_solvable(conflict_sys)
    assert v.solvable is False
    fre = greatest_fre_candidate(conflict_sys)
    assert (fre.x_bar, fre.y_bar) == (fr(1), fr("1/2"))
    w = v.witness
    assert isinstance(w, NoFeasiblePair)
    c = w.conflict
    assert (c.column, c.plus_row, c.minus_row, c.total) == (0, 0, 1, F(3, 2))
    assert "row 1 forces it into J+, row 2 forces it into J-" in w.describe()


@pytest.mark.criterion(5, "three-by-three system: families and extremes, < 10 ms")
def test_ac5(three_sys):
    fre = greatest_fre_candidate(three_sys)
    assert fre.interleaved() == fr(1, "1/2", "4/5", "2/3", "1/2", "1/2")
    assert is_feasible_pair(three_sys, *S((2,), (1, 3)))
    fam = enumerate_families(three_sys)
    assert set(fam.s_plus) == S((), (1,), (2,), (3,), (1, 3), (2, 3))
    assert set(fam.s_minus) == S((1,), (2,), (1, 2), (1, 3), (2, 3), (1, 2, 3))
    r = extremal_system(three_sys)
    assert set(r.maximal) == {fr(1, "1/3", "1/2"), fr("1/2", "4/5", "1/2")}
    assert r.least == fr("1/2", "1/3", "1/2")
    assert len(r.maximal) == len(fam.s_plus_maximal) == 2
    assert len(r.minimal) == len(fam.s_minus_maximal) == 1
    assert best_ms(lambda: extremal_system(three_sys)) < 10.0


@pytest.mark.criterion(6, "zero right-hand side: 1000 random equations")
def test_ac6():
    rng = random.Random(6)
    solvable_seen = 0
    for _ in range(1000):
        m, d = rng.randint(1, 5), rng.randint(1, 4)
        ap = [UnitRational(rng.randint(0, d), d) for _ in range(m)]
        am = [UnitRational(rng.randint(0, d), d) for _ in range(m)]
        eq, prep = preprocess(BipolarSystem.single(ap, am, 0))
        criterion = all(p == 0 or q == 0 for p, q in zip(ap, am))
        ora = oracle_solve(eq)
        assert criterion == ora.solvable
        if criterion:
            solvable_seen += 1
            full = zero_rhs_solution(BipolarSystem.single(ap, am, 0))
            assert ora.extreme_solutions == (prep.restrict(full),)
    assert solvable_seen > 0


@pytest.mark.criterion(7, "oracle equivalence on 5000 random instances, < 60 s")
def test_ac7(suite):
    start = time.perf_counter()
    solvable = 0
    for s in suite:
        r = extremal_system(s)
        ora = oracle_solve(s)
        assert r.solvable == ora.solvable
        assert tuple(sorted(r.maximal)) == ora.maximal
        assert tuple(sorted(r.minimal)) == ora.minimal
        solvable += r.solvable
    elapsed = time.perf_counter() - start
    print(f"\n{len(suite)} instances, {solvable} solvable, {elapsed:.1f} s")
    assert len(suite) >= 5000 and 0 < solvable < len(suite)
    assert elapsed < 60.0


@pytest.mark.criterion(8, "algebraic laws on 10000 random samples")
def test_ac8():
    rng = random.Random(8)

    def draw():
        q = rng.randint(1, 50)
        return UnitRational(rng.randint(0, q), q)

    for _ in range(10_000):
        a, b, c = draw(), draw(), draw()
        assert (tnorm(a, c) <= b) == (c <= residuum(a, b))
        assert negate(negate(a)) == a
        m = rng.randint(0, 6)
        ap = [draw() for _ in range(m)]
        am = [draw() for _ in range(m)]
        x = [draw() for _ in range(m)]
        assert eval_bipolar_row(ap, am, x) == eval_fre_row(ap, am, x, [negate(v) for v in x])


@pytest.mark.criterion(9, "feasible pairs stay feasible when extended by tight columns")
def test_ac9(suite):
    checked = 0
    for s in suite:
        fre = greatest_fre_candidate(s)
        v = system_solvable(s)
        if not v.solvable:
            continue
        tight = [k for k in range(s.m) if fre.x_bar[k] + fre.y_bar[k] == 1]
        cols, eq = frozenset(range(s.m)), frozenset(tight)
        fam = enumerate_families(s)
        # the search certificate plus every family member with its largest partner
        pairs = [(v.certificate.j_plus, v.certificate.j_minus)]
        pairs += [(J, (cols - J) | eq) for J in fam.s_plus]
        pairs += [((cols - J) | eq, J) for J in fam.s_minus]
        for jp, jm in pairs:
            assert covers(s, fre, jp, jm)
            for k in tight:
                assert covers(s, fre, jp | {k}, jm)
                assert covers(s, fre, jp, jm | {k})
                assert is_feasible_pair(s, jp | {k}, jm)
                assert is_feasible_pair(s, jp, jm | {k})
                checked += 1
    assert checked > 0


@pytest.mark.criterion(10, "count identities and single/system agreement")
def test_ac10(suite):
    singles = 0
    for s in suite:
        r = extremal_system(s)
        if not r.solvable:
            continue
        assert len(r.maximal) == len(r.families.s_plus_maximal)
        assert len(r.minimal) == len(r.families.s_minus_maximal)
        if s.n == 1:
            a = analyze_single(s)
            assert (a.maximal, a.minimal) == (r.maximal, r.minimal)
            assert (a.greatest, a.least) == (r.greatest, r.least)
            singles += 1
    assert singles > 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
