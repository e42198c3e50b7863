"""JSON problem files and report documents.

A problem file looks like::

    {
      "schema_version": "1",
      "a_plus":  [["0.8", "0.5"]],
      "a_minus": [["0.1", "0.4"]],
      "b": ["0.4"]
    }

Scalars are strings in decimal (``"0.25"``) or fraction (``"1/4"``) form and
are read exactly; ``"0.3333333"`` is 3333333/10000000, not 1/3. Reports use
fraction strings everywhere; decimals appear only as an annotation.
Indices in reports are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .algebra import UnitRational, parse_scalar
from .errors import DimensionError, ParseError
from .model import BipolarSystem, validate

SCHEMA_VERSION = "1"
FREE = "free"


@dataclass(frozen=True)
class ProblemDocument:
    schema_version: str
    a_plus: Tuple[Tuple[UnitRational, ...], ...]
    a_minus: Tuple[Tuple[UnitRational, ...], ...]
    b: Tuple[UnitRational, ...]
    row_labels: Optional[Tuple[str, ...]] = None
    column_labels: Optional[Tuple[str, ...]] = None

    def to_system(self) -> BipolarSystem:
        return validate(BipolarSystem(self.a_plus, self.a_minus, self.b))

    @classmethod
    def from_system(cls, system: BipolarSystem, **labels) -> "ProblemDocument":
        return cls(SCHEMA_VERSION, system.a_plus, system.a_minus, system.b, **labels)


def parse_problem(text: str) -> ProblemDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise ParseError("problem document must be a JSON object")
    missing = [k for k in ("a_plus", "a_minus", "b") if k not in raw]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    version = raw.get("schema_version", SCHEMA_VERSION)
    if str(version) != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {version!r}")

    ap = _matrix(raw["a_plus"], "a_plus")
    am = _matrix(raw["a_minus"], "a_minus")
    if not isinstance(raw["b"], list):
        raise ParseError("b must be an array")
    b = tuple(parse_scalar(v, f"b[{i}]") for i, v in enumerate(raw["b"]))
    doc = ProblemDocument(
        str(version), ap, am, b,
        _labels(raw.get("row_labels"), "row_labels"),
        _labels(raw.get("column_labels"), "column_labels"),
    )
    system = doc.to_system()
    if doc.row_labels is not None and len(doc.row_labels) != system.n:
        raise DimensionError(f"row_labels has {len(doc.row_labels)} entries, expected {system.n}")
    if doc.column_labels is not None and len(doc.column_labels) != system.m:
        raise DimensionError(
            f"column_labels has {len(doc.column_labels)} entries, expected {system.m}"
        )
    return doc


def _matrix(rows, name):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{name} must be an array of arrays")
    return tuple(
        tuple(parse_scalar(v, f"{name}[{i}][{j}]") for j, v in enumerate(row))
        for i, row in enumerate(rows)
    )


def _labels(value, name):
    if value is None:
        return None
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{name} must be an array of strings")
    return tuple(value)


def render_problem(doc: ProblemDocument) -> str:
    out = {
        "schema_version": doc.schema_version,
        "a_plus": [[fmt(v) for v in row] for row in doc.a_plus],
        "a_minus": [[fmt(v) for v in row] for row in doc.a_minus],
        "b": [fmt(v) for v in doc.b],
    }
    if doc.row_labels is not None:
        out["row_labels"] = list(doc.row_labels)
    if doc.column_labels is not None:
        out["column_labels"] = list(doc.column_labels)
    return json.dumps(out, indent=2) + "\n"


def parse_solution(text: str, where: str = "solution") -> Tuple[UnitRational, ...]:
    """Read ``["1/2", "0.8"]``, ``{"x": [...]}`` or ``(0.5, 0.8)``."""
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        parts = [p for p in stripped[1:-1].split(",") if p.strip()]
        return tuple(parse_scalar(p.strip(), f"{where}[{k}]") for k, p in enumerate(parts))
    try:
        raw = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{where}: syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if isinstance(raw, dict):
        raw = raw.get("x")
    if not isinstance(raw, list):
        raise ParseError(f"{where} must be an array of scalars")
    return tuple(parse_scalar(v, f"{where}[{k}]") for k, v in enumerate(raw))


def fmt(value: Optional[Fraction]) -> str:
    """Exact fraction string; ``None`` (a free unknown) renders as ``"free"``."""
    if value is None:
        return FREE
    return str(Fraction(value))


def fmt_decimal(value: Optional[Fraction], places: int = 6) -> str:
    if value is None:
        return FREE
    q = round(Fraction(value), places)
    text = f"{q.numerator * 10**places // q.denominator}"
    text = text.rjust(places + 1, "0")
    whole, frac = text[:-places], text[-places:].rstrip("0")
    return f"{whole}.{frac}" if frac else whole


def fmt_tuple(values: Sequence[Optional[Fraction]]):
    return [fmt(v) for v in values]


def fmt_set(indices) -> list:
    return sorted(j + 1 for j in indices)
