"""
The bundled 10x10 instance
--------------------------
lambda = 2, ten rows in each system. There are 3,732,480,000 assignments,
but the covering search touches a few hundred nodes.
"""

import numpy as np

from sugeno_fri import build_candidates, check_feasibility, load_fixture, solve

problem = load_fixture("paper_10x10")
cand = build_candidates(problem)
print("assignments:", f"{cand.assignment_count:,}")
print("X_max:", np.round(check_feasibility(problem).x_max, 4))

result = solve(problem, all_minimal=True, record_witness=True)
print("minimal solutions:", len(result.minimal_solutions))
print("nodes expanded:", result.stats.nodes_expanded,
      f"({result.stats.elapsed * 1000:.1f} ms)")
for s in result.minimal_solutions[:5]:
    print(f"  z={s.objective:.4f}  e={[j + 1 for j in s.witness]}  x={np.round(s.x, 4)}")

print("z* =", round(result.z_star, 6), "with", len(result.optimal_solutions), "optimal solutions")

# x_4 = 0.1918 is forced in every minimal solution (row 4's cheapest
# admissible value), so no feasible point does better. The seven minimal
# solutions that also carry x_5 = 0.1991 are the *worst* ones.
objectives = np.array([s.objective for s in result.minimal_solutions])
print("objective values:", sorted({round(float(z), 4) for z in objectives}))
print("count at the largest objective:", int(np.sum(objectives > objectives.max() - 1e-9)))
