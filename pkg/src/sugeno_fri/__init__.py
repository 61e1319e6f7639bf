"""Exact solver for max-component minimisation under max-Sugeno-Weber
fuzzy relational inequalities."""

from .files import load_fixture, load_problem, parse_problem, result_document
from .oracle import GeneratorConfig, brute_force_minimal, random_instance
from .solver import (
    CandidateMatrix,
    InfeasibleError,
    InvalidAssignmentError,
    MinimalSolution,
    SearchLimits,
    SolveResult,
    antichain,
    assemble,
    build_candidates,
    enumerate_minimal_solutions,
    optimal_value,
    solve,
)
from .system import (
    FeasibilityReport,
    Problem,
    ProblemValidationError,
    check_feasibility,
    compute_j2_sets,
    compute_max_solution,
    is_solution,
    max_composition,
    validate,
)
from .tnorm import (
    InvalidLambdaError,
    UnsatisfiableThresholdError,
    residual_geq,
    residual_leq,
    tnorm,
)

__version__ = "0.1.0"
