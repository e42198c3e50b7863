"""Greatest solution of the corresponding (non-bipolar) max-product FRE.

Replacing every ``1 - x_j`` by an independent unknown ``y_j`` gives an
ordinary max-product system in ``2m`` unknowns. Its greatest solution, when
one exists, is the column-wise minimum of Goguen residua; whether it exists
is decided by plugging that candidate back in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .algebra import ONE, UnitRational, eval_fre_row, residuum
from .errors import DimensionError
from .model import BipolarSystem, Vector


@dataclass(frozen=True)
class FreGreatestSolution:
    x_bar: Vector
    y_bar: Vector
    fre_solvable: bool
    # First row (0-based) whose value misses b_i, when not solvable.
    failing_row: Optional[int] = None

    def interleaved(self) -> Tuple[UnitRational, ...]:
        """``(x̄_1, ȳ_1, ..., x̄_m, ȳ_m)``, the order used in the literature."""
        out = []
        for x, y in zip(self.x_bar, self.y_bar):
            out.extend((x, y))
        return tuple(out)


def greatest_fre_candidate(system: BipolarSystem) -> FreGreatestSolution:
    m, n = system.m, system.n
    x_bar = []
    y_bar = []
    for j in range(m):
        xj = yj = ONE
        for i in range(n):
            bi = system.b[i]
            xj = min(xj, residuum(system.a_plus[i][j], bi))
            yj = min(yj, residuum(system.a_minus[i][j], bi))
        x_bar.append(xj)
        y_bar.append(yj)
    x_bar, y_bar = tuple(x_bar), tuple(y_bar)
    failing = _first_failing_row(system, x_bar, y_bar)
    return FreGreatestSolution(x_bar, y_bar, failing is None, failing)


def _first_failing_row(system, x, y):
    for i in range(system.n):
        if eval_fre_row(system.a_plus[i], system.a_minus[i], x, y) != system.b[i]:
            return i
    return None


def is_fre_solution(
    system: BipolarSystem, x: Sequence[UnitRational], y: Sequence[UnitRational]
) -> bool:
    """True when ``(x, y)`` satisfies every row of the corresponding FRE exactly."""
    if len(x) != system.m or len(y) != system.m:
        raise DimensionError(
            f"expected vectors of length {system.m}, got {len(x)} and {len(y)}"
        )
    return _first_failing_row(system, tuple(x), tuple(y)) is None
