"""Brute-force reference solver and random instance generator.

The brute force follows the literal recipe: materialise ``x(e)`` for every
assignment, keep those under the maximum solution, and reduce by pairwise
comparison. It only borrows the t-norm residuals and the system-level
primitives, never the covering search, so it can check that search.
"""

import math
from dataclasses import dataclass

import numpy as np

from .solver import MinimalSolution
from .system import DEFAULT_TOL, Problem, compute_j2_sets, compute_max_solution, validate
from .tnorm import check_lambda, residual_geq

DEFAULT_CAP = 100_000


class CapExceededError(RuntimeError):
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} assignments exceed the cap of {cap}")


def _pairwise_minimal(points, tol):
    # repeatedly take the smallest-sum survivor; everything above it goes
    remaining = points[np.argsort(points.sum(axis=1), kind="stable")]
    minimal = []
    while len(remaining):
        head = remaining[0]
        minimal.append(head)
        above = np.all(remaining >= head - tol, axis=1)
        remaining = remaining[~above]
    return minimal


def assignment_corners(problem: Problem, cap: int = DEFAULT_CAP):
    """``x(e)`` for every assignment ``e``, one row per assignment.

    Raises:
        CapExceededError: if the number of assignments exceeds ``cap``.
    """
    j2 = compute_j2_sets(problem)
    count = math.prod(len(s) for s in j2)
    if count > cap:
        raise CapExceededError(count, cap)
    if count == 0:
        return np.zeros((0, problem.n))
    grids = np.meshgrid(*[np.array(s) for s in j2], indexing="ij")
    assignments = np.stack([g.ravel() for g in grids], axis=1)
    corners = np.zeros((count, problem.n))
    rows = np.arange(count)
    for i in range(problem.m2):
        cols = assignments[:, i]
        vals = residual_geq(problem.lam, problem.d_matrix[i, cols], problem.b_lower[i])
        np.maximum.at(corners, (rows, cols), vals)
    return corners


def brute_force_minimal(problem: Problem, cap: int = DEFAULT_CAP, tol: float = DEFAULT_TOL):
    """Minimal solutions by exhaustive enumeration of all assignments.

    Returns:
        List of :class:`MinimalSolution` sorted lexicographically; empty when
        the instance is infeasible.

    Raises:
        CapExceededError: if the number of assignments exceeds ``cap``.
    """
    corners = assignment_corners(problem, cap)
    x_max = compute_max_solution(problem)
    points = corners[np.all(corners <= x_max + tol, axis=1)]
    if len(points) == 0:
        return []
    points = np.unique(points, axis=0)
    sols = [MinimalSolution(tuple(map(float, p)), float(p.max())) for p in _pairwise_minimal(points, tol)]
    return sorted(sols)


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for :func:`random_instance`.

    ``density`` is the chance that a lower row gets one coefficient lifted to
    at least its threshold, which makes ``J_i^2`` nonempty. ``decimals``
    rounds every entry, producing exact ties.
    """

    n: int
    m1: int
    m2: int
    lambda_range: tuple = (-0.9, 50.0)
    density: float = 1.0
    seed: int = 0
    d_range: tuple = (0.0, 1.0)
    b_lower_range: tuple = (0.0, 1.0)
    a_range: tuple = (0.0, 1.0)
    b_upper_range: tuple = (0.0, 1.0)
    decimals: int = None

    def __post_init__(self):
        check_lambda(self.lambda_range[0])
        if self.lambda_range[1] < self.lambda_range[0]:
            raise ValueError("lambda_range is reversed")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")
        if self.n < 1 or self.m2 < 1 or self.m1 < 0:
            raise ValueError("need n >= 1, m2 >= 1, m1 >= 0")


def random_instance(config: GeneratorConfig) -> Problem:
    """Deterministic random instance for ``config.seed``."""
    rng = np.random.default_rng(config.seed)
    c = config
    lo = c.lambda_range[0]
    # keep strictly inside (-1, inf) even if the range touches -1
    lam = float(rng.uniform(lo, c.lambda_range[1]))
    if lam <= -1.0:
        lam = np.nextafter(-1.0, 0.0)

    def draw(bounds, size):
        out = rng.uniform(bounds[0], bounds[1], size)
        if c.decimals is not None:
            out = np.clip(np.round(out, c.decimals), 0.0, 1.0)
        return out

    a = draw(c.a_range, (c.m1, c.n))
    b1 = draw(c.b_upper_range, c.m1)
    d = draw(c.d_range, (c.m2, c.n))
    b2 = draw(c.b_lower_range, c.m2)
    lift = rng.random(c.m2) < c.density
    cols = rng.integers(0, c.n, c.m2)
    for i in np.flatnonzero(lift):
        j = cols[i]
        if d[i, j] < b2[i]:
            d[i, j] = rng.uniform(b2[i], 1.0) if c.decimals is None else b2[i]
    raw = {"lambda": lam, "D": d.tolist(), "b2": b2.tolist()}
    if c.m1:
        raw["A"] = a.tolist()
        raw["b1"] = b1.tolist()
    return validate(raw)
