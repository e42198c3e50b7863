"""Brute-force ground truth for the closed-form solver.

Any solution can be pushed, column by column, to one whose every component is
either the residual upper bound ``x̄_j`` or the lower bound ``1 - ȳ_j``, and
pushing up (down) never decreases (increases) it. So the ``2^m`` "extreme"
tuples decide solvability and contain every maximal and minimal solution.
This module enumerates them and checks each by direct evaluation, sharing
nothing with the solver beyond :mod:`.algebra` and the instance type.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import ONE, UnitRational, eval_bipolar_row, negate, residuum
from .errors import DimensionError, EnumerationCapExceeded
from .model import BipolarSystem, Solution

DEFAULT_MAX_ORACLE = 14


@dataclass(frozen=True)
class OracleReport:
    solvable: bool
    extreme_solutions: Tuple[Solution, ...]
    maximal: Tuple[Solution, ...]
    minimal: Tuple[Solution, ...]


@dataclass(frozen=True)
class RowCheck:
    value: UnitRational
    target: UnitRational

    @property
    def ok(self) -> bool:
        return self.value == self.target


@dataclass(frozen=True)
class SolutionCheck:
    rows: Tuple[RowCheck, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def verify_solution(system: BipolarSystem, x: Sequence[UnitRational]) -> SolutionCheck:
    if len(x) != system.m:
        raise DimensionError(f"solution has {len(x)} entries, expected {system.m}")
    return SolutionCheck(tuple(
        RowCheck(eval_bipolar_row(system.a_plus[i], system.a_minus[i], x), system.b[i])
        for i in range(system.n)
    ))


def _bounds(system):
    upper, lower = [], []
    for j in range(system.m):
        xj = yj = ONE
        for i in range(system.n):
            xj = min(xj, residuum(system.a_plus[i][j], system.b[i]))
            yj = min(yj, residuum(system.a_minus[i][j], system.b[i]))
        upper.append(xj)
        lower.append(negate(yj))
    return upper, lower


def leq(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    return all(a <= b for a, b in zip(x, y))


def maximal_elements(points: Sequence[Solution]) -> Tuple[Solution, ...]:
    pts = sorted(set(points))
    return tuple(p for p in pts if not any(q != p and leq(p, q) for q in pts))


def minimal_elements(points: Sequence[Solution]) -> Tuple[Solution, ...]:
    pts = sorted(set(points))
    return tuple(p for p in pts if not any(q != p and leq(q, p) for q in pts))


def oracle_solve(system: BipolarSystem, max_oracle: int = DEFAULT_MAX_ORACLE) -> OracleReport:
    if system.m > max_oracle:
        raise EnumerationCapExceeded("oracle", system.m, max_oracle)
    upper, lower = _bounds(system)
    choices = [sorted({u, v}) for u, v in zip(upper, lower)]
    found = [
        x for x in itertools.product(*choices)
        if all(
            eval_bipolar_row(system.a_plus[i], system.a_minus[i], x) == system.b[i]
            for i in range(system.n)
        )
    ]
    found.sort()
    return OracleReport(bool(found), tuple(found),
                        maximal_elements(found), minimal_elements(found))


def grid_solutions(system: BipolarSystem, d: int) -> List[Solution]:
    """Every solution with all components in ``{0, 1/d, ..., 1}``.

    Coarse and exponential; used only to check that off-extreme solutions sit
    between the reported minimal and maximal ones.
    """
    grid = [UnitRational(k, d) for k in range(d + 1)]
    return [
        x for x in itertools.product(grid, repeat=system.m)
        if all(
            eval_bipolar_row(system.a_plus[i], system.a_minus[i], x) == system.b[i]
            for i in range(system.n)
        )
    ]


def random_instance(seed: int, m: int, n: int, grid_denominator: int) -> BipolarSystem:
    """Deterministic instance with every entry drawn from ``{0, 1/d, ..., 1}``."""
    if m < 1 or n < 1 or grid_denominator < 1:
        raise ValueError("m, n and grid_denominator must be positive")
    rng = random.Random(seed)
    d = grid_denominator

    def draw():
        return UnitRational(rng.randint(0, d), d)

    ap = tuple(tuple(draw() for _ in range(m)) for _ in range(n))
    am = tuple(tuple(draw() for _ in range(m)) for _ in range(n))
    b = tuple(draw() for _ in range(n))
    return BipolarSystem(ap, am, b)


def planted_instance(seed: int, m: int, n: int, grid_denominator: int) -> BipolarSystem:
    """Like :func:`random_instance`, but ``b`` is the image of a random grid point.

    Such systems are solvable by construction, which keeps the solvable share
    of a random suite high.
    """
    base = random_instance(seed, m, n, grid_denominator)
    rng = random.Random(f"planted-{seed}")
    d = grid_denominator
    x = tuple(UnitRational(rng.randint(0, d), d) for _ in range(m))
    b = tuple(eval_bipolar_row(base.a_plus[i], base.a_minus[i], x) for i in range(n))
    return BipolarSystem(base.a_plus, base.a_minus, b)
