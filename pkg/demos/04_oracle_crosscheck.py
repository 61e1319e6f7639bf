"""
Cross-checking against brute force
----------------------------------
On small random instances the covering search must return exactly what the
exhaustive recipe returns: every x(e), filtered to the box, then reduced by
pairwise comparison.
"""

import time

import numpy as np

from sugeno_fri import GeneratorConfig, brute_force_minimal, random_instance, solve

rng = np.random.default_rng(0)
agree = feasible = 0
t_search = t_brute = 0.0
for seed in range(200):
    cfg = GeneratorConfig(n=int(rng.integers(2, 7)), m1=int(rng.integers(0, 4)),
                          m2=int(rng.integers(1, 7)), seed=seed, density=0.9,
                          b_upper_range=(0.3, 1.0), b_lower_range=(0.0, 0.6))
    p = random_instance(cfg)
    t0 = time.perf_counter()
    fast = solve(p, all_minimal=True)
    t1 = time.perf_counter()
    slow = brute_force_minimal(p, cap=10**6)
    t2 = time.perf_counter()
    t_search += t1 - t0
    t_brute += t2 - t1
    feasible += fast.feasible
    got = [s.x for s in fast.minimal_solutions] if fast.feasible else []
    agree += len(got) == len(slow) and all(
        np.allclose(a, b.x, atol=1e-9) for a, b in zip(got, slow)
    )

print(f"{agree}/200 agree ({feasible} feasible)")
print(f"covering search {t_search:.2f} s, brute force {t_brute:.2f} s")
