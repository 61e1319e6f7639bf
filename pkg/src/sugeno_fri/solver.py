"""Minimal-solution enumeration and the optimal-value driver.

The feasible region is a union of boxes ``[x(e), X_max]``, one per
assignment ``e`` of a satisfying column to every lower row, where ``x(e)``
is the componentwise max of the per-row minimal vectors. Rather than
materialising all assignments, :func:`enumerate_minimal_solutions` runs a
covering depth-first search: branch only on rows the partial vector does not
yet satisfy, and cut any branch whose partial vector already dominates a
recorded solution.
"""

import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .system import DEFAULT_TOL, FeasibilityReport, Problem, check_feasibility
from .tnorm import residual_geq


class InfeasibleError(ValueError):
    """Raised when an operation needs a feasible instance and gets none."""


class InvalidAssignmentError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CandidateMatrix:
    """Per-row minimal activation values.

    Attributes:
        values: ``(m2, n)`` array; ``values[i, j]`` is the smallest ``x_j``
            that satisfies lower row ``i`` on its own, NaN where
            ``d_ij < b2_i``.
        feasible_mask: True where the value is defined and does not exceed
            the maximum solution (within tolerance).
        assignment_count: exact number of assignments, the product of the
            row supports.
        active_rows: rows with a positive threshold; the others are met by
            the zero vector and never branched on.
    """

    values: np.ndarray
    feasible_mask: np.ndarray
    assignment_count: int
    active_rows: tuple

    @property
    def shape(self):
        return self.values.shape

    def restrict(self, ceiling):
        """Copy with the mask narrowed to values ``<= ceiling``."""
        with np.errstate(invalid="ignore"):
            mask = self.feasible_mask & (self.values <= ceiling)
        mask.setflags(write=False)
        return replace(self, feasible_mask=mask)


def build_candidates(problem: Problem, report: FeasibilityReport = None, tol=DEFAULT_TOL):
    if report is None:
        report = check_feasibility(problem, tol)
    m2, n = problem.d_matrix.shape
    values = np.full((m2, n), np.nan)
    for i, cols in enumerate(report.j2_sets):
        cols = list(cols)
        if cols:
            values[i, cols] = residual_geq(
                problem.lam, problem.d_matrix[i, cols], problem.b_lower[i]
            )
    with np.errstate(invalid="ignore"):
        mask = values <= report.x_max[None, :] + tol
    values.setflags(write=False)
    mask.setflags(write=False)
    count = math.prod(len(cols) for cols in report.j2_sets)
    active = tuple(int(i) for i in np.flatnonzero(problem.b_lower > 0.0))
    return CandidateMatrix(values, mask, count, active)


@dataclass(frozen=True, order=True)
class MinimalSolution:
    """A lower corner ``x(e)`` of the feasible region.

    ``witness`` holds one generating assignment (0-based column per lower
    row) when it was requested; it is excluded from equality and ordering.
    """

    x: tuple
    objective: float = field(compare=False)
    witness: tuple = field(default=None, compare=False)

    @property
    def array(self):
        return np.array(self.x)


def assemble(e, candidates: CandidateMatrix) -> MinimalSolution:
    """Build ``x(e)``: per column, the max value of the rows assigned to it."""
    values = candidates.values
    m2, n = values.shape
    e = tuple(int(j) for j in e)
    if len(e) != m2:
        raise InvalidAssignmentError(f"assignment has {len(e)} entries, expected {m2}")
    x = [0.0] * n
    for i, j in enumerate(e):
        if not 0 <= j < n or math.isnan(values[i, j]):
            raise InvalidAssignmentError(f"column {j} cannot satisfy row {i} on its own")
        x[j] = max(x[j], float(values[i, j]))
    return MinimalSolution(tuple(x), max(x), e)


def antichain(vectors, tol=DEFAULT_TOL):
    """Minimal elements under componentwise ``<=`` (with slack ``tol``).

    Vectors equal within ``tol`` collapse to one representative. Returns the
    survivors sorted lexicographically.
    """
    ordered = sorted(set(map(tuple, vectors)), key=lambda v: (sum(v), v))
    kept = []
    for v in ordered:
        if not any(all(a <= b + tol for a, b in zip(u, v)) for u in kept):
            kept.append(v)
    return sorted(kept)


@dataclass(frozen=True)
class SearchLimits:
    """Optional caps on the covering search. ``time_budget`` is in seconds."""

    max_solutions: int = None
    max_nodes: int = None
    time_budget: float = None


@dataclass(frozen=True)
class Enumeration:
    solutions: tuple
    complete: bool
    nodes_expanded: int
    solutions_recorded: int


class _BudgetExceeded(Exception):
    pass


class _CoverSearch:
    def __init__(self, options, n, tol, limits, record_witness, deadline):
        self.options = options  # row -> [(col, value), ...]
        self.n = n
        self.tol = tol
        self.limits = limits or SearchLimits()
        self.record_witness = record_witness
        self.deadline = deadline
        self.recorded = {}  # vector -> witness, kept as an antichain
        self.nodes = 0
        self.n_recorded = 0

    def _tick(self):
        self.nodes += 1
        lim = self.limits
        if lim.max_nodes is not None and self.nodes > lim.max_nodes:
            raise _BudgetExceeded
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.perf_counter() > self.deadline:
                raise _BudgetExceeded

    def _dominates_recorded(self, p):
        tol = self.tol
        for s in self.recorded:
            if all(a <= b + tol for a, b in zip(s, p)):
                return True
        return False

    def _record(self, p, chosen):
        tol = self.tol
        for s in [s for s in self.recorded if all(a <= b + tol for a, b in zip(p, s))]:
            del self.recorded[s]
        witness = None
        if self.record_witness:
            witness = dict(chosen)
            for i, opts in self.options.items():
                if i not in witness:
                    witness[i] = next(j for j, v in opts if p[j] >= v)
        self.recorded[tuple(p)] = witness
        self.n_recorded += 1
        lim = self.limits
        if lim.max_solutions is not None and self.n_recorded >= lim.max_solutions:
            raise _BudgetExceeded

    def _next_row(self, p):
        best, best_len = None, None
        for i, opts in self.options.items():
            if any(p[j] >= v for j, v in opts):
                continue
            if best is None or len(opts) < best_len:
                best, best_len = i, len(opts)
        return best

    def run(self, p, chosen):
        self._tick()
        if self._dominates_recorded(p):
            return
        row = self._next_row(p)
        if row is None:
            self._record(p, chosen)
            return
        for j, v in self.options[row]:
            q = list(p)
            if v > q[j]:
                q[j] = v
            chosen.append((row, j))
            self.run(q, chosen)
            chosen.pop()


def _branch_options(candidates, order_seed):
    rng = random.Random(order_seed) if order_seed is not None else None
    rows = list(candidates.active_rows)
    if rng is not None:
        rng.shuffle(rows)
    options = {}
    for i in rows:
        cols = [int(j) for j in np.flatnonzero(candidates.feasible_mask[i])]
        if rng is not None:
            rng.shuffle(cols)
        options[i] = [(j, float(candidates.values[i, j])) for j in cols]
    return options


def _run_subtree(options, n, tol, limits, record_witness, deadline, start, chosen):
    search = _CoverSearch(options, n, tol, limits, record_witness, deadline)
    complete = True
    try:
        search.run(start, list(chosen))
    except _BudgetExceeded:
        complete = False
    return search.recorded, complete, search.nodes, search.n_recorded


def default_workers():
    """Worker count from ``SUGENO_FRI_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("SUGENO_FRI_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_minimal_solutions(
    problem: Problem,
    candidates: CandidateMatrix,
    limits: SearchLimits = None,
    *,
    tol=DEFAULT_TOL,
    record_witness=False,
    order_seed=None,
    workers=1,
) -> Enumeration:
    """All minimal elements of ``{x(e)}`` lying under the maximum solution.

    Args:
        problem: The instance the candidates were built from.
        candidates: Output of :func:`build_candidates`, possibly narrowed
            with :meth:`CandidateMatrix.restrict`.
        limits: Optional node, solution and time caps. When one trips, the
            partial antichain found so far is returned with
            ``complete=False``.
        tol: Slack for dominance and duplicate tests.
        record_witness: Keep one generating assignment per solution.
        order_seed: Shuffle row tie-breaking and column order. The result
            does not depend on it; it exists so tests can check that.
        workers: Split the first branching level across processes.

    Raises:
        InfeasibleError: if some active row has no admissible column.
    """
    mask = candidates.feasible_mask
    for i in candidates.active_rows:
        if not mask[i].any():
            raise InfeasibleError(f"lower row {i} has no column under the maximum solution")

    n = problem.n
    options = _branch_options(candidates, order_seed)
    limits = limits or SearchLimits()
    deadline = None
    if limits.time_budget is not None:
        deadline = time.perf_counter() + limits.time_budget

    # rows with b2_i == 0 pin the zero column choice; any column will do
    base_witness = {}
    if record_witness:
        for i in range(candidates.shape[0]):
            if i not in options:
                base_witness[i] = int(np.flatnonzero(mask[i])[0])

    if workers > 1 and options:
        root = _CoverSearch(options, n, tol, limits, record_witness, deadline)
        row = root._next_row([0.0] * n)
        starts = []
        for j, v in options[row]:
            q = [0.0] * n
            q[j] = v
            starts.append((q, [(row, j)]))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_subtree, options, n, tol, limits, record_witness, deadline, q, ch)
                for q, ch in starts
            ]
            parts = [f.result() for f in futures]
        recorded = {}
        complete = True
        nodes, n_recorded = 1, 0
        for rec, ok, k, r in parts:
            for vec, wit in rec.items():
                recorded.setdefault(vec, wit)
            complete &= ok
            nodes += k
            n_recorded += r
    else:
        recorded, complete, nodes, n_recorded = _run_subtree(
            options, n, tol, limits, record_witness, deadline, [0.0] * n, []
        )

    solutions = []
    for vec in antichain(recorded, tol):
        witness = None
        if record_witness:
            full = {**base_witness, **recorded[vec]}
            witness = tuple(full[i] for i in range(candidates.shape[0]))
        solutions.append(MinimalSolution(vec, max(vec), witness))
    return Enumeration(tuple(solutions), complete, nodes, n_recorded)


def optimal_value(candidates: CandidateMatrix) -> float:
    """Exact optimum without enumeration.

    ``z(x(e)) = max_i v[i, e(i)]`` and the admissible choices are independent
    per row, so the minimum over assignments is the max over rows of each
    row's smallest admissible value.

    Raises:
        InfeasibleError: if some row has no admissible column.
    """
    z = 0.0
    for i in candidates.active_rows:
        admissible = candidates.values[i][candidates.feasible_mask[i]]
        if admissible.size == 0:
            raise InfeasibleError(f"lower row {i} has no column under the maximum solution")
        z = max(z, float(admissible.min()))
    return z


@dataclass(frozen=True)
class SearchStats:
    nodes_expanded: int
    solutions_recorded: int
    assignment_count: int
    elapsed: float  # seconds


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    reason: str
    x_max: np.ndarray
    z_star: float
    optimal_solutions: tuple
    minimal_solutions: tuple
    complete: bool
    stats: SearchStats


def solve(
    problem: Problem,
    *,
    all_minimal=False,
    tol=DEFAULT_TOL,
    limits: SearchLimits = None,
    record_witness=False,
    workers=1,
    order_seed=None,
) -> SolveResult:
    """Decide feasibility, then find the optimum and its minimal solutions.

    Without ``all_minimal`` the search is confined to admissible values not
    above the optimum: every optimal minimal solution uses only such values,
    and anything found there is minimal in the full region too.
    ``minimal_solutions`` is ``None`` unless ``all_minimal`` is set.
    """
    t0 = time.perf_counter()
    report = check_feasibility(problem, tol)

    def stats(nodes=0, recorded=0, count=0):
        return SearchStats(nodes, recorded, count, time.perf_counter() - t0)

    if not report.lower_system_consistent:
        return SolveResult(False, report.reason, report.x_max, None, (), None, True, stats())

    candidates = build_candidates(problem, report, tol)
    try:
        z_star = optimal_value(candidates)
    except InfeasibleError:
        z_star = None
    if not report.joint_feasible or z_star is None:
        return SolveResult(
            False, "max-solution-violates-lower-system", report.x_max, None, (), None, True,
            stats(count=candidates.assignment_count),
        )

    search_space = candidates if all_minimal else candidates.restrict(z_star + tol)
    found = enumerate_minimal_solutions(
        problem, search_space, limits,
        tol=tol, record_witness=record_witness, order_seed=order_seed, workers=workers,
    )
    if found.complete:
        best = min(s.objective for s in found.solutions)
        if abs(best - z_star) > tol:
            raise RuntimeError(f"enumerated optimum {best!r} disagrees with closed form {z_star!r}")
    optimal = tuple(s for s in found.solutions if s.objective <= z_star + tol)
    return SolveResult(
        True,
        None,
        report.x_max,
        z_star,
        optimal,
        found.solutions if all_minimal else None,
        found.complete,
        stats(found.nodes_expanded, found.solutions_recorded, candidates.assignment_count),
    )
