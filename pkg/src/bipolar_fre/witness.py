"""Reasons a bipolar equation or system has no solution.

Column and row numbers in :meth:`describe` strings are 1-based, matching how
the equations are usually written down; the attributes stay 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple, Union


@dataclass(frozen=True)
class FreUnsolvable:
    """The relaxed FRE already fails: row ``row`` cannot reach ``b_row``."""

    row: int
    attained: Fraction
    target: Fraction

    kind = "fre-unsolvable"

    def describe(self) -> str:
        return (
            f"corresponding FRE unsolvable: row {self.row + 1} reaches at most "
            f"{self.attained}, needs {self.target}"
        )


@dataclass(frozen=True)
class NegationGap:
    """``x̄_j + ȳ_j < 1``: no value of ``x_j`` fits under both bounds."""

    column: int
    x_bar: Fraction
    y_bar: Fraction

    kind = "negation-gap"

    def describe(self) -> str:
        j = self.column + 1
        return (
            f"column {j}: x̄{j}+ȳ{j} = {self.x_bar + self.y_bar} < 1 "
            f"(x̄{j} = {self.x_bar}, ȳ{j} = {self.y_bar})"
        )


@dataclass(frozen=True)
class RowConflict:
    """One row can only be met through ``x̄_j``, another only through ``ȳ_j``."""

    column: int
    plus_row: int
    minus_row: int
    total: Fraction

    def describe(self) -> str:
        j = self.column + 1
        return (
            f"row-forced conflict at column {j}: row {self.plus_row + 1} forces it "
            f"into J+, row {self.minus_row + 1} forces it into J-, but "
            f"x̄{j}+ȳ{j} = {self.total} ≠ 1"
        )


@dataclass(frozen=True)
class NoFeasiblePair:
    """Every ``(J+, J-)`` leaves some row uncovered.

    ``row_options[i]`` lists the columns through which row ``i`` can be met:
    ``(plus_columns, minus_columns)``.
    """

    row_options: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    conflict: Optional[RowConflict] = None

    kind = "no-feasible-pair"

    def describe(self) -> str:
        if self.conflict is not None:
            return self.conflict.describe()
        return "no feasible pair: the rows' cover options cannot be combined consistently"


Witness = Union[FreUnsolvable, NegationGap, NoFeasiblePair]


class Verdict(NamedTuple):
    solvable: bool
    witness: Optional[Witness]
    certificate: object = None
