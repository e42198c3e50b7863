"""Exact solver for bipolar max-product fuzzy relation equations."""

from .algebra import (
    UnitRational,
    eval_bipolar_row,
    eval_fre_row,
    negate,
    parse_scalar,
    residuum,
    tnorm,
)
from .errors import (
    BipolarError,
    ContractViolation,
    DimensionError,
    EnumerationCapExceeded,
    ParseError,
    RangeError,
)
from .fre import FreGreatestSolution, greatest_fre_candidate, is_fre_solution
from .kernels import BACKEND
from .model import BipolarSystem, PreprocessReport, preprocess, validate
from .oracle import oracle_solve, random_instance, verify_solution
from .single import (
    SingleAnalysis,
    analyze_single,
    extremal_single,
    solvable_single,
    zero_rhs_solution,
)
from .system import (
    ExtremalReport,
    FeasibleFamilies,
    FeasiblePair,
    enumerate_families,
    extremal_system,
    is_feasible_pair,
    pair_to_solution,
    push_down,
    push_up,
    system_solvable,
)

__version__ = "0.1.0"
