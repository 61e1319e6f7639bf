"""
The Sugeno-Weber t-norm family
------------------------------
How T(x, y) moves with lambda, and the two residuals the solver is built on.
"""

import numpy as np

from sugeno_fri import residual_geq, residual_leq, tnorm

x, y = 0.6, 0.7
for lam in [-0.999, -0.5, 0.0, 1.0, 10.0, 1e6]:
    print(f"lambda={lam:>9}:  T({x}, {y}) = {tnorm(lam, x, y):.6f}")
print("product x*y =", x * y)  # the lambda -> infinity limit

# lambda = 0 is the Lukasiewicz t-norm max(x + y - 1, 0)
grid = np.linspace(0, 1, 5)
print(tnorm(0.0, grid[:, None], grid[None, :]))

# Largest x keeping T(a, x) under a cap, smallest x lifting it over a floor
lam, a, b = 2.0, 0.8308, 0.0838
u = residual_leq(lam, a, b)
print(f"largest x with T({a}, x) <= {b}: {u:.6f}  ->  T = {tnorm(lam, a, u):.6f}")

d, b = 0.6569, 0.0392
v = residual_geq(lam, d, b)
print(f"smallest x with T({d}, x) >= {b}: {v:.6f}  ->  T = {tnorm(lam, d, v):.6f}")
