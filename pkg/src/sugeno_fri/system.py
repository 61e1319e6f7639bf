"""Problem data model, validation and the feasibility tests.

The instance is

    min max(x)  s.t.  max_j T(a_ij, x_j) <= b1_i,   max_j T(d_ij, x_j) >= b2_i,

with ``x`` in [0, 1]^n and ``T`` the Sugeno-Weber t-norm. Indices in the API
are 0-based; validation messages use 1-based ``[row,col]`` positions.
"""

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .tnorm import residual_leq, tnorm

DEFAULT_TOL = 1e-9


class ProblemValidationError(ValueError):
    """Raised by :func:`validate`; ``violations`` lists every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DimensionMismatchError(ValueError):
    pass


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Problem:
    """A validated instance. Build it with :func:`validate` or :meth:`create`."""

    a_matrix: np.ndarray
    b_upper: np.ndarray
    d_matrix: np.ndarray
    b_lower: np.ndarray
    lam: float

    @classmethod
    def create(cls, d_matrix, b_lower, lam, a_matrix=None, b_upper=None):
        raw = {"lambda": lam, "D": d_matrix, "b2": b_lower}
        if a_matrix is not None or b_upper is not None:
            raw["A"] = a_matrix
            raw["b1"] = b_upper
        return validate(raw)

    @property
    def n(self):
        return self.d_matrix.shape[1]

    @property
    def m1(self):
        return self.a_matrix.shape[0]

    @property
    def m2(self):
        return self.d_matrix.shape[0]

    def to_dict(self):
        """Plain-list form accepted back by :func:`validate`."""
        out = {"lambda": self.lam}
        if self.m1:
            out["A"] = self.a_matrix.tolist()
            out["b1"] = self.b_upper.tolist()
        out["D"] = self.d_matrix.tolist()
        out["b2"] = self.b_lower.tolist()
        return out


def _as_matrix(name, value, errors):
    try:
        rows = [list(r) for r in value]
    except TypeError:
        errors.append(f"{name}: expected an array of arrays")
        return None
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        errors.append(f"{name}: rows have differing lengths {sorted(widths)}")
        return None
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError):
        errors.append(f"{name}: entries must be numbers")
        return None
    if arr.size == 0:
        arr = arr.reshape(len(rows), 0)
    return arr


def _as_vector(name, value, errors):
    try:
        arr = np.array(list(value), dtype=float)
    except (TypeError, ValueError):
        errors.append(f"{name}: expected an array of numbers")
        return None
    if arr.ndim != 1:
        errors.append(f"{name}: expected a flat array")
        return None
    return arr


def _check_range(name, arr, errors):
    bad = ~((arr >= 0.0) & (arr <= 1.0))
    for idx in zip(*np.nonzero(bad)):
        pos = ",".join(str(k + 1) for k in idx)
        errors.append(f"{name}[{pos}] = {float(arr[idx])!r} outside [0, 1]")


def validate(raw: Mapping) -> Problem:
    """Check a raw mapping (keys ``lambda``, ``A``, ``b1``, ``D``, ``b2``).

    ``A`` and ``b1`` may both be missing, meaning there is no upper system.
    Every violation is collected before raising.

    Raises:
        ProblemValidationError: with the complete list of violations.
    """
    errors = []

    lam = raw.get("lambda")
    if lam is None:
        errors.append("lambda: missing")
    else:
        try:
            lam = float(lam)
        except (TypeError, ValueError):
            errors.append(f"lambda: not a number ({lam!r})")
            lam = None
        else:
            if not lam > -1.0:
                errors.append(f"lambda: must be > -1, got {lam!r}")

    has_a, has_b1 = raw.get("A") is not None, raw.get("b1") is not None
    if has_a != has_b1:
        errors.append("A/b1: must be given together or both omitted")

    d = _as_matrix("D", raw["D"], errors) if raw.get("D") is not None else None
    b2 = _as_vector("b2", raw["b2"], errors) if raw.get("b2") is not None else None
    if raw.get("D") is None:
        errors.append("D: missing")
    if raw.get("b2") is None:
        errors.append("b2: missing")

    a = _as_matrix("A", raw["A"], errors) if has_a else None
    b1 = _as_vector("b1", raw["b1"], errors) if has_b1 else None

    n = None
    if d is not None:
        if d.shape[0] < 1:
            errors.append("D: needs at least one row")
        elif d.shape[1] < 1:
            errors.append("D: needs at least one column")
        else:
            n = d.shape[1]
        _check_range("D", d, errors)
        if b2 is not None and b2.shape[0] != d.shape[0]:
            errors.append(f"b2: length {b2.shape[0]} != rows of D ({d.shape[0]})")
    if b2 is not None:
        _check_range("b2", b2, errors)
    if a is not None:
        if a.shape[0] and n is not None and a.shape[1] != n:
            errors.append(f"A: {a.shape[1]} columns but D has {n}")
        _check_range("A", a, errors)
        if b1 is not None and b1.shape[0] != a.shape[0]:
            errors.append(f"b1: length {b1.shape[0]} != rows of A ({a.shape[0]})")
    if b1 is not None:
        _check_range("b1", b1, errors)

    if errors:
        raise ProblemValidationError(errors)

    if a is None or a.shape[0] == 0:
        a = np.zeros((0, n))
        b1 = np.zeros(0)
    return Problem(_frozen(a), _frozen(b1), _frozen(d), _frozen(b2), lam)


def max_composition(lam, m, x):
    """``(M o x)_i = max_j T(m_ij, x_j)``; a zero-row matrix gives an empty vector."""
    m = np.asarray(m, dtype=float)
    x = np.asarray(x, dtype=float)
    if m.ndim != 2 or x.ndim != 1 or m.shape[1] != x.shape[0]:
        raise DimensionMismatchError(
            f"matrix of shape {m.shape} cannot compose with vector of shape {x.shape}"
        )
    if m.shape[0] == 0:
        return np.zeros(0)
    return np.max(tnorm(lam, m, x[None, :]), axis=1)


def _check_len(problem, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n,):
        raise DimensionMismatchError(f"expected a vector of length {problem.n}, got {x.shape}")
    return x


def satisfies_lower(problem, x, tol=DEFAULT_TOL):
    """Membership in the ``>=`` system alone."""
    x = _check_len(problem, x)
    return bool(np.all(max_composition(problem.lam, problem.d_matrix, x) >= problem.b_lower - tol))


def is_solution(problem: Problem, x, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``x`` is feasible for both systems, up to ``tol``."""
    x = _check_len(problem, x)
    if np.any(x < -tol) or np.any(x > 1.0 + tol):
        return False
    upper = max_composition(problem.lam, problem.a_matrix, x)
    if np.any(upper > problem.b_upper + tol):
        return False
    return satisfies_lower(problem, x, tol)


def compute_j2_sets(problem):
    """For each lower row, the ascending columns j with ``d_ij >= b2_i``."""
    hits = problem.d_matrix >= problem.b_lower[:, None]
    return tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in hits)


def compute_max_solution(problem):
    """Componentwise-largest x with ``A o x <= b1``; all ones when there is no A."""
    if problem.m1 == 0:
        return np.ones(problem.n)
    per_row = residual_leq(problem.lam, problem.a_matrix, problem.b_upper[:, None])
    return np.min(per_row, axis=0)


@dataclass(frozen=True)
class FeasibilityReport:
    j2_sets: tuple
    x_max: np.ndarray
    lower_system_consistent: bool
    joint_feasible: bool

    @property
    def reason(self):
        """Why the instance is infeasible, or ``None``."""
        if not self.lower_system_consistent:
            return "lower-system-inconsistent"
        if not self.joint_feasible:
            return "max-solution-violates-lower-system"
        return None


def check_feasibility(problem: Problem, tol: float = DEFAULT_TOL) -> FeasibilityReport:
    """Run both feasibility tests.

    The lower system alone is consistent iff every ``J_i^2`` is nonempty
    (equivalently, the all-ones vector satisfies it). The joint instance is
    feasible iff the maximum solution of the upper system satisfies the lower
    one; in that case the maximum solution is itself a feasible point.
    """
    j2 = compute_j2_sets(problem)
    x_max = _frozen(compute_max_solution(problem))
    consistent = all(j2)
    joint = consistent and satisfies_lower(problem, x_max, tol)
    return FeasibilityReport(j2, x_max, consistent, joint)


__all__ = [
    "DEFAULT_TOL",
    "DimensionMismatchError",
    "FeasibilityReport",
    "Problem",
    "ProblemValidationError",
    "check_feasibility",
    "compute_j2_sets",
    "compute_max_solution",
    "is_solution",
    "max_composition",
    "satisfies_lower",
    "validate",
]
