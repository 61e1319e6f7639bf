"""
Feasibility in two steps
------------------------
The <= system alone is a box [0, X_max]. The >= system is nonempty exactly
when every row has a column whose coefficient reaches its threshold. The two
together are feasible exactly when X_max satisfies the >= system.
"""

from sugeno_fri import Problem, check_feasibility, solve

ok = Problem.create(
    d_matrix=[[0.9, 0.5], [0.4, 0.8]], b_lower=[0.3, 0.3], lam=1.0,
    a_matrix=[[0.7, 0.2]], b_upper=[0.6],
)
rep = check_feasibility(ok)
print("J2 sets:", rep.j2_sets)
print("X_max:", rep.x_max)
print("lower system consistent:", rep.lower_system_consistent, "| joint:", rep.joint_feasible)

# A row nobody can satisfy
bad_row = Problem.create(d_matrix=[[0.1, 0.2]], b_lower=[0.5], lam=1.0)
print(check_feasibility(bad_row).reason)

# Each system is fine alone, but the upper one squeezes X_max too low
conflict = Problem.create(d_matrix=[[0.9]], b_lower=[0.3], lam=1.0, a_matrix=[[0.95]], b_upper=[0.0])
r = solve(conflict)
print(r.feasible, r.reason, r.x_max)
