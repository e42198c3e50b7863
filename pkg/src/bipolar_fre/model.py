"""Problem instances and the null-column preprocessing step."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .algebra import UnitRational, parse_scalar
from .errors import DimensionError, RangeError

Matrix = Tuple[Tuple[UnitRational, ...], ...]
Vector = Tuple[UnitRational, ...]
#: A candidate assignment of the unknowns, one exact value per column.
Solution = Tuple[UnitRational, ...]
#: A solution re-expanded to original arity; ``None`` marks a free unknown.
ExpandedSolution = Tuple[Optional[UnitRational], ...]


@dataclass(frozen=True)
class BipolarSystem:
    """``n`` bipolar max-product equations in ``m`` unknowns.

    Row ``i`` reads ``max_j (a_plus[i][j] * x_j) v (a_minus[i][j] * (1 - x_j)) = b[i]``.
    A single equation is the ``n == 1`` case. Indices are 0-based throughout
    the Python API.
    """

    a_plus: Matrix
    a_minus: Matrix
    b: Vector
    m: int = field(init=False)

    def __post_init__(self):
        width = len(self.a_plus[0]) if self.a_plus else 0
        object.__setattr__(self, "m", width)

    @property
    def n(self) -> int:
        return len(self.b)

    @classmethod
    def build(cls, a_plus, a_minus, b) -> "BipolarSystem":
        """Coerce nested sequences into exact values and validate them."""
        ap = tuple(tuple(_coerce(v, f"a_plus[{i}][{j}]") for j, v in enumerate(row))
                   for i, row in enumerate(a_plus))
        am = tuple(tuple(_coerce(v, f"a_minus[{i}][{j}]") for j, v in enumerate(row))
                   for i, row in enumerate(a_minus))
        bb = tuple(_coerce(v, f"b[{i}]") for i, v in enumerate(b))
        return validate(cls(ap, am, bb))

    @classmethod
    def single(cls, a_plus, a_minus, b) -> "BipolarSystem":
        """One equation: coefficient vectors and a scalar right-hand side."""
        return cls.build([list(a_plus)], [list(a_minus)], [b])

    def row(self, i: int) -> "BipolarSystem":
        return BipolarSystem((self.a_plus[i],), (self.a_minus[i],), (self.b[i],))


def _coerce(value, where):
    if isinstance(value, str):
        return parse_scalar(value, where)
    try:
        return UnitRational(value)
    except RangeError:
        raise RangeError(Fraction(value), where) from None


def validate(system: BipolarSystem) -> BipolarSystem:
    """Check shapes and ranges; return the instance unchanged.

    Raises :class:`DimensionError` or :class:`RangeError` naming the
    offending position.
    """
    n = len(system.b)
    if n < 1:
        raise DimensionError("a system needs at least one equation")
    for name, mat in (("a_plus", system.a_plus), ("a_minus", system.a_minus)):
        if len(mat) != n:
            raise DimensionError(f"{name} has {len(mat)} rows but b has length {n}")
    m = len(system.a_plus[0])
    if m < 1:
        raise DimensionError("a system needs at least one unknown")
    for name, mat in (("a_plus", system.a_plus), ("a_minus", system.a_minus)):
        for i, row in enumerate(mat):
            if len(row) != m:
                raise DimensionError(f"{name} row {i} has {len(row)} entries, expected {m}")
            for j, v in enumerate(row):
                _check_unit(v, f"{name}[{i}][{j}]")
    for i, v in enumerate(system.b):
        _check_unit(v, f"b[{i}]")
    return system


def _check_unit(v, where):
    if not isinstance(v, Fraction) and not isinstance(v, int):
        raise RangeError(v, where)
    if v < 0 or v > 1:
        raise RangeError(Fraction(v), where)


@dataclass(frozen=True)
class PreprocessReport:
    """Which columns were removed as free, and where the kept ones came from."""

    original_m: int
    dropped_columns: Tuple[int, ...]
    column_map: Tuple[int, ...]  # retained index -> original index

    def expand(self, solution: Sequence[UnitRational]) -> ExpandedSolution:
        """Re-insert free slots (``None``) into a reduced-arity solution."""
        if len(solution) != len(self.column_map):
            raise DimensionError(
                f"solution has {len(solution)} entries, expected {len(self.column_map)}"
            )
        out: list = [None] * self.original_m
        for k, j in enumerate(self.column_map):
            out[j] = solution[k]
        return tuple(out)

    def restrict(self, solution: Sequence[Optional[UnitRational]]) -> Solution:
        """Drop the free slots of an original-arity solution."""
        if len(solution) != self.original_m:
            raise DimensionError(
                f"solution has {len(solution)} entries, expected {self.original_m}"
            )
        return tuple(solution[j] for j in self.column_map)


def preprocess(system: BipolarSystem) -> Tuple[BipolarSystem, PreprocessReport]:
    """Remove every column whose coefficients are zero in all rows.

    Such an unknown never influences any row, so it may take any value. The
    result may have ``m == 0`` when every column is null.
    """
    m = system.m
    keep = tuple(
        j for j in range(m)
        if any(system.a_plus[i][j] or system.a_minus[i][j] for i in range(system.n))
    )
    dropped = tuple(j for j in range(m) if j not in keep)
    report = PreprocessReport(m, dropped, keep)
    if not dropped:
        return system, report
    ap = tuple(tuple(row[j] for j in keep) for row in system.a_plus)
    am = tuple(tuple(row[j] for j in keep) for row in system.a_minus)
    return BipolarSystem(ap, am, system.b), report
