"""Sugeno-Weber t-norm and its two residual solvers.

All functions broadcast over numpy arrays and return plain floats for
scalar input.
"""

import numpy as np


class InvalidLambdaError(ValueError):
    """Raised when the family parameter is not strictly greater than -1."""


class UnsatisfiableThresholdError(ValueError):
    """Raised when no x in [0, 1] can lift T(d, x) up to the threshold."""


def check_lambda(lam):
    """Return ``lam`` as a float, raising if it lies outside (-1, inf)."""
    lam = float(lam)
    if not lam > -1.0:  # also rejects nan
        raise InvalidLambdaError(f"lambda must be > -1, got {lam!r}")
    return lam


def _out(value):
    return float(value) if np.ndim(value) == 0 else value


def tnorm(lam, x, y):
    """Sugeno-Weber t-norm ``max((x + y - 1 + lam*x*y) / (1 + lam), 0)``.

    Evaluated as ``x*y - (1-x)*(1-y)/(1+lam)``, which is algebraically the
    same but keeps ``T(x, 1) == x`` and symmetry exact in floating point and
    stays well conditioned as ``lam`` approaches -1.

    Args:
        lam: Family parameter, ``lam > -1``.
        x: Membership grade(s) in [0, 1].
        y: Membership grade(s) in [0, 1].

    Returns:
        The t-norm value(s) in [0, 1].
    """
    lam = check_lambda(lam)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return _out(np.maximum(x * y - (1.0 - x) * (1.0 - y) / (1.0 + lam), 0.0))


def residual_leq(lam, a, b):
    """Largest ``x`` in [0, 1] with ``T(a, x) <= b``.

    Returns 1 when ``a <= b`` (the row puts no restriction on ``x``),
    otherwise ``((1 + lam)*b + 1 - a) / (1 + lam*a)``. The two branches are
    merged as ``min(1, formula)`` since the formula reaches 1 exactly when
    ``a <= b``. ``1 + lam*a >= min(1, 1 + lam) > 0``, so no guard is needed.
    """
    lam = check_lambda(lam)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    u = ((1.0 + lam) * b + 1.0 - a) / (1.0 + lam * a)
    u = np.where(a <= b, 1.0, u)
    return _out(np.clip(u, 0.0, 1.0))


def residual_geq(lam, d, b):
    """Smallest ``x`` in [0, 1] with ``T(d, x) >= b``.

    Args:
        lam: Family parameter, ``lam > -1``.
        d: Coefficient(s) in [0, 1].
        b: Threshold(s) in [0, 1]; must satisfy ``d >= b``.

    Returns:
        0 where ``b == 0``, else ``((1 + lam)*b + 1 - d) / (1 + lam*d)``.

    Raises:
        UnsatisfiableThresholdError: if ``d < b`` anywhere, since
            ``T(d, x) <= min(d, x)`` can never reach ``b``.
    """
    lam = check_lambda(lam)
    d = np.asarray(d, dtype=float)
    b = np.asarray(b, dtype=float)
    bad = d < b
    if np.any(bad):
        if d.ndim == 0 and b.ndim == 0:
            raise UnsatisfiableThresholdError(f"d={float(d)!r} < b={float(b)!r}")
        raise UnsatisfiableThresholdError(
            f"d < b at {int(np.count_nonzero(bad))} position(s)"
        )
    v = ((1.0 + lam) * b + 1.0 - d) / (1.0 + lam * d)
    v = np.where(b == 0.0, 0.0, v)
    return _out(np.clip(v, 0.0, 1.0))
