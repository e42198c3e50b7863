"""Closed-form analysis of one bipolar equation (``n == 1``).

With ``(x̄, ȳ)`` the greatest solution of the relaxed equation, the bipolar
equation is solvable exactly when the relaxation is and ``x̄_j + ȳ_j >= 1``
for every column. For ``b != 0`` the extremal solutions are read off the
index sets ``K+ = {k : a+_k x̄_k = b}`` and ``K- = {k : a-_k ȳ_k = b}``; for
``b == 0`` the solution is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from .algebra import ONE, ZERO, eval_fre_row, negate
from .errors import ContractViolation, DimensionError
from .fre import FreGreatestSolution, greatest_fre_candidate
from .model import BipolarSystem, Solution
from .witness import FreUnsolvable, NegationGap, Verdict, Witness


@dataclass(frozen=True)
class SingleAnalysis:
    solvable: bool
    k_plus: FrozenSet[int]
    k_minus: FrozenSet[int]
    greatest: Optional[Solution]
    least: Optional[Solution]
    maximal: Tuple[Solution, ...]
    minimal: Tuple[Solution, ...]
    unsolvable_witness: Optional[Witness]
    fre: FreGreatestSolution


def _require_single(eq: BipolarSystem):
    if eq.n != 1:
        raise DimensionError(f"expected a single equation, got {eq.n} rows")


def solvable_single(eq: BipolarSystem) -> Verdict:
    _require_single(eq)
    return _verdict(eq, greatest_fre_candidate(eq))


def _verdict(eq, fre):
    if not fre.fre_solvable:
        attained = eval_fre_row(eq.a_plus[0], eq.a_minus[0], fre.x_bar, fre.y_bar)
        return Verdict(False, FreUnsolvable(0, attained, eq.b[0]))
    for j, (x, y) in enumerate(zip(fre.x_bar, fre.y_bar)):
        if x + y < 1:
            return Verdict(False, NegationGap(j, x, y))
    return Verdict(True, None)


def zero_rhs_solution(eq: BipolarSystem) -> Solution:
    """The unique solution when ``b == 0``: 1 where ``a+_j = 0``, else 0."""
    _require_single(eq)
    if eq.b[0] != 0:
        raise ContractViolation("zero_rhs_solution needs b = 0")
    ap, am = eq.a_plus[0], eq.a_minus[0]
    if any(p != 0 and q != 0 for p, q in zip(ap, am)):
        raise ContractViolation(
            "b = 0 is unsolvable when some column has both coefficients nonzero"
        )
    return tuple(ONE if p == 0 else ZERO for p in ap)


def extremal_single(eq: BipolarSystem) -> SingleAnalysis:
    """Greatest/least or maximal/minimal solutions of a solvable equation."""
    _require_single(eq)
    fre = greatest_fre_candidate(eq)
    verdict = _verdict(eq, fre)
    if not verdict.solvable:
        raise ContractViolation(f"equation is unsolvable: {verdict.witness.describe()}")
    return _extremal(eq, fre)


def _extremal(eq, fre):
    b = eq.b[0]
    ap, am = eq.a_plus[0], eq.a_minus[0]
    x_bar, y_bar = fre.x_bar, fre.y_bar
    k_plus = frozenset(k for k in range(eq.m) if ap[k] * x_bar[k] == b)
    k_minus = frozenset(k for k in range(eq.m) if am[k] * y_bar[k] == b)

    if b == 0:
        unique = zero_rhs_solution(eq)
        return SingleAnalysis(True, k_plus, k_minus, unique, unique,
                              (unique,), (unique,), None, fre)

    low = tuple(negate(y) for y in y_bar)
    if k_plus:
        maximal = (x_bar,)
    else:
        maximal = tuple(sorted(_swap(x_bar, k, low[k]) for k in k_minus))
    if k_minus:
        minimal = (low,)
    else:
        minimal = tuple(sorted(_swap(low, k, x_bar[k]) for k in k_plus))
    # every solution lies below some maximal one, so a lone maximal is greatest
    greatest = maximal[0] if len(maximal) == 1 else None
    least = minimal[0] if len(minimal) == 1 else None
    return SingleAnalysis(True, k_plus, k_minus, greatest, least,
                          maximal, minimal, None, fre)


def _swap(base, k, value):
    return base[:k] + (value,) + base[k + 1:]


def analyze_single(eq: BipolarSystem) -> SingleAnalysis:
    """Like :func:`extremal_single`, but reports unsolvable input instead of raising."""
    _require_single(eq)
    fre = greatest_fre_candidate(eq)
    verdict = _verdict(eq, fre)
    if verdict.solvable:
        return _extremal(eq, fre)
    return SingleAnalysis(False, frozenset(), frozenset(), None, None, (), (),
                          verdict.witness, fre)
