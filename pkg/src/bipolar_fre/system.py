"""Systems of bipolar max-product equations.

A pair of column sets ``(J+, J-)`` is *feasible* when every row ``i`` is met
exactly, either by some ``j in J+`` with ``a+_ij x̄_j = b_i`` or by some
``j in J-`` with ``a-_ij ȳ_j = b_i``, and columns in both sets satisfy
``x̄_j + ȳ_j = 1``. A system is solvable iff such a pair exists and
``x̄_j + ȳ_j >= 1`` for all ``j``. The inclusion-maximal first components
(the family S+) index the maximal solutions one-to-one; the maximal second
components (S-) index the minimal ones.

Family enumeration works on integer bitmasks (see :mod:`.kernels`); only the
preparation of the cover masks touches exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from . import kernels
from .algebra import UnitRational, eval_bipolar_row, eval_fre_row, negate
from .errors import ContractViolation, DimensionError, EnumerationCapExceeded
from .fre import FreGreatestSolution, greatest_fre_candidate
from .model import BipolarSystem, Solution
from .witness import (
    FreUnsolvable,
    NegationGap,
    NoFeasiblePair,
    RowConflict,
    Verdict,
    Witness,
)

#: Largest number of undecided columns searched when deciding solvability.
DEFAULT_MAX_SEARCH = 20
#: Largest ``m`` for which the families S+ and S- are enumerated in full.
DEFAULT_MAX_ENUM = 16

IndexSet = FrozenSet[int]


@dataclass(frozen=True)
class FeasiblePair:
    j_plus: IndexSet
    j_minus: IndexSet


@dataclass(frozen=True)
class FeasibleFamilies:
    s_plus: Tuple[IndexSet, ...]
    s_minus: Tuple[IndexSet, ...]
    s_plus_maximal: Tuple[IndexSet, ...]
    s_minus_maximal: Tuple[IndexSet, ...]


@dataclass(frozen=True)
class ExtremalReport:
    solvable: bool
    greatest: Optional[Solution]
    least: Optional[Solution]
    maximal: Tuple[Solution, ...]
    minimal: Tuple[Solution, ...]
    families: Optional[FeasibleFamilies]
    witness: Optional[Witness]
    certificate: Optional[FeasiblePair]
    fre: FreGreatestSolution


@dataclass(frozen=True)
class _Covers:
    plus: Tuple[int, ...]
    minus: Tuple[int, ...]
    eq: int
    m: int


def _covers(system: BipolarSystem, fre: FreGreatestSolution) -> _Covers:
    plus = []
    minus = []
    for i in range(system.n):
        bi = system.b[i]
        p = q = 0
        for j in range(system.m):
            if system.a_plus[i][j] * fre.x_bar[j] == bi:
                p |= 1 << j
            if system.a_minus[i][j] * fre.y_bar[j] == bi:
                q |= 1 << j
        plus.append(p)
        minus.append(q)
    eq = 0
    for j in range(system.m):
        if fre.x_bar[j] + fre.y_bar[j] == 1:
            eq |= 1 << j
    return _Covers(tuple(plus), tuple(minus), eq, system.m)


def _mask(indices: Iterable[int], m: int) -> int:
    mask = 0
    for j in indices:
        if not 0 <= j < m:
            raise IndexError(f"column index {j} out of range for m = {m}")
        mask |= 1 << j
    return mask


def _unmask(mask: int) -> IndexSet:
    return frozenset(j for j in range(mask.bit_length()) if mask >> j & 1)


def _family_key(s: IndexSet):
    return (len(s), sorted(s))


def _pair_ok(cov: _Covers, jp: int, jm: int) -> bool:
    if jp & jm & ~cov.eq:
        return False
    return all(p & jp or q & jm for p, q in zip(cov.plus, cov.minus))


def _solvable_fre(system):
    fre = greatest_fre_candidate(system)
    if not fre.fre_solvable:
        raise ContractViolation("the corresponding FRE is unsolvable")
    return fre


def is_feasible_pair(
    system: BipolarSystem,
    j_plus: Iterable[int],
    j_minus: Iterable[int],
    fre: Optional[FreGreatestSolution] = None,
) -> bool:
    """Decide whether ``(j_plus, j_minus)`` is a feasible pair (0-based columns)."""
    jp = _mask(j_plus, system.m)
    jm = _mask(j_minus, system.m)
    if fre is None:
        fre = _solvable_fre(system)
    elif not fre.fre_solvable:
        raise ContractViolation("the corresponding FRE is unsolvable")
    if system.m == 0:
        return all(bi == 0 for bi in system.b)
    return _pair_ok(_covers(system, fre), jp, jm)


def system_solvable(system: BipolarSystem, max_search: int = DEFAULT_MAX_SEARCH) -> Verdict:
    """Decide solvability; certify with a feasible pair or explain the failure.

    The certificate is a :class:`FeasiblePair`; the witness is one of
    :class:`FreUnsolvable`, :class:`NegationGap` or :class:`NoFeasiblePair`.
    """
    return _decide(system, greatest_fre_candidate(system), max_search)


def _decide(system, fre, max_search):
    if not fre.fre_solvable:
        i = fre.failing_row
        attained = eval_fre_row(system.a_plus[i], system.a_minus[i], fre.x_bar, fre.y_bar)
        return Verdict(False, FreUnsolvable(i, attained, system.b[i]))
    for j, (x, y) in enumerate(zip(fre.x_bar, fre.y_bar)):
        if x + y < 1:
            return Verdict(False, NegationGap(j, x, y))
    if system.m == 0:
        return Verdict(True, None, FeasiblePair(frozenset(), frozenset()))

    cov = _covers(system, fre)
    undecided = system.m - cov.eq.bit_count()
    if undecided > max_search:
        raise EnumerationCapExceeded("feasible-pair search", undecided, max_search)
    jp = kernels.find_assignment(cov.plus, cov.minus, cov.m, cov.eq)
    if jp < 0:
        return Verdict(False, _no_pair_witness(system, fre, cov))
    full = (1 << cov.m) - 1
    jm = (full & ~jp) | cov.eq
    return Verdict(True, None, FeasiblePair(_unmask(jp), _unmask(jm)))


def _no_pair_witness(system, fre, cov):
    options = tuple(
        (tuple(sorted(_unmask(p))), tuple(sorted(_unmask(q))))
        for p, q in zip(cov.plus, cov.minus)
    )
    forced_plus = {}
    forced_minus = {}
    for i, (ps, qs) in enumerate(options):
        if len(ps) == 1 and not qs:
            forced_plus.setdefault(ps[0], i)
        if len(qs) == 1 and not ps:
            forced_minus.setdefault(qs[0], i)
    conflict = None
    for j in sorted(set(forced_plus) & set(forced_minus)):
        total = fre.x_bar[j] + fre.y_bar[j]
        if total != 1:
            conflict = RowConflict(j, forced_plus[j], forced_minus[j], total)
            break
    return NoFeasiblePair(options, conflict)


def _assemble_plus(fre, j_plus) -> Solution:
    return tuple(
        fre.x_bar[j] if j in j_plus else negate(fre.y_bar[j]) for j in range(len(fre.x_bar))
    )


def _assemble_minus(fre, j_minus) -> Solution:
    return tuple(
        negate(fre.y_bar[j]) if j in j_minus else fre.x_bar[j] for j in range(len(fre.x_bar))
    )


def pair_to_solution(system: BipolarSystem, pair: FeasiblePair) -> Solution:
    """``x̄_j`` on ``J+``, ``1 - ȳ_j`` elsewhere; solves the system."""
    fre = _solvable_fre(system)
    for j, (x, y) in enumerate(zip(fre.x_bar, fre.y_bar)):
        if x + y < 1:
            raise ContractViolation(f"x̄+ȳ < 1 at column {j}")
    if not is_feasible_pair(system, pair.j_plus, pair.j_minus, fre):
        raise ContractViolation("pair is not feasible")
    return _assemble_plus(fre, pair.j_plus)


def enumerate_families(system: BipolarSystem, max_enum: int = DEFAULT_MAX_ENUM) -> FeasibleFamilies:
    """The families S+ and S- and their inclusion-maximal members.

    Every one of the ``2^m`` subsets is tested on each side; the instance must
    be solvable.
    """
    fre = greatest_fre_candidate(system)
    verdict = _decide(system, fre, max(max_enum, DEFAULT_MAX_SEARCH))
    if not verdict.solvable:
        raise ContractViolation(f"system is unsolvable: {verdict.witness.describe()}")
    return _families(system, fre, max_enum)


def _families(system, fre, max_enum):
    if system.m == 0:
        empty = (frozenset(),)
        return FeasibleFamilies(empty, empty, empty, empty)
    if system.m > max_enum:
        raise EnumerationCapExceeded("family enumeration", system.m, max_enum)
    cov = _covers(system, fre)
    plus_masks = kernels.sweep_family(cov.plus, cov.minus, cov.m, cov.eq)
    minus_masks = kernels.sweep_family(cov.minus, cov.plus, cov.m, cov.eq)

    def ordered(masks):
        return tuple(sorted((_unmask(s) for s in masks), key=_family_key))

    return FeasibleFamilies(
        ordered(plus_masks),
        ordered(minus_masks),
        ordered(kernels.maximal_masks(plus_masks)),
        ordered(kernels.maximal_masks(minus_masks)),
    )


def extremal_system(
    system: BipolarSystem,
    max_search: int = DEFAULT_MAX_SEARCH,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> ExtremalReport:
    """Full solvability report with all maximal and minimal solutions."""
    fre = greatest_fre_candidate(system)
    verdict = _decide(system, fre, max_search)
    if not verdict.solvable:
        return ExtremalReport(False, None, None, (), (), None, verdict.witness, None, fre)
    fam = _families(system, fre, max_enum)
    maximal = tuple(sorted(_assemble_plus(fre, J) for J in fam.s_plus_maximal))
    minimal = tuple(sorted(_assemble_minus(fre, J) for J in fam.s_minus_maximal))
    greatest = maximal[0] if len(maximal) == 1 else None
    least = minimal[0] if len(minimal) == 1 else None
    return ExtremalReport(True, greatest, least, maximal, minimal, fam, None,
                          verdict.certificate, fre)


def is_solution(system: BipolarSystem, x: Sequence[UnitRational]) -> bool:
    if len(x) != system.m:
        raise DimensionError(f"solution has {len(x)} entries, expected {system.m}")
    return all(
        eval_bipolar_row(system.a_plus[i], system.a_minus[i], x) == system.b[i]
        for i in range(system.n)
    )


def push_up(system: BipolarSystem, x: Sequence[UnitRational]) -> Solution:
    """Raise every component not at ``1 - ȳ_j`` to ``x̄_j``; still a solution."""
    if not is_solution(system, x):
        raise ContractViolation("push_up needs a solution")
    fre = greatest_fre_candidate(system)
    return tuple(
        UnitRational(xj) if xj == negate(y) else xb
        for xj, xb, y in zip(x, fre.x_bar, fre.y_bar)
    )


def push_down(system: BipolarSystem, x: Sequence[UnitRational]) -> Solution:
    """Lower every component not at ``x̄_j`` to ``1 - ȳ_j``; still a solution."""
    if not is_solution(system, x):
        raise ContractViolation("push_down needs a solution")
    fre = greatest_fre_candidate(system)
    return tuple(
        UnitRational(xj) if xj == xb else negate(y)
        for xj, xb, y in zip(x, fre.x_bar, fre.y_bar)
    )
