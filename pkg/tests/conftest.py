import numpy as np
import pytest

from sugeno_fri import load_fixture

# (assignment e, 1-based columns; x(e)) for the 38 published minimal solutions
APPENDIX = {
    1: ([3, 1, 1, 4, 1, 4, 2, 7, 2, 7], [0.0924, 0.1770, 0.0592, 0.1918, 0, 0, 0.1441, 0, 0, 0]),
    2: ([8, 1, 1, 4, 1, 4, 2, 7, 2, 7], [0.0924, 0.1770, 0, 0.1918, 0, 0, 0.1441, 0.0562, 0, 0]),
    3: ([3, 1, 1, 4, 1, 4, 2, 7, 2, 5], [0.0924, 0.1770, 0.0592, 0.1918, 0.1642, 0, 0.1323, 0, 0, 0]),
    4: ([8, 1, 1, 4, 1, 4, 2, 7, 2, 5], [0.0924, 0.1770, 0, 0.1918, 0.1642, 0, 0.1323, 0.0562, 0, 0]),
    5: ([9, 6, 2, 4, 9, 4, 2, 7, 2, 7], [0, 0.1770, 0, 0.1918, 0, 0.1788, 0.1441, 0, 0.1197, 0]),
    6: ([3, 1, 1, 4, 1, 4, 2, 5, 2, 5], [0.0924, 0.1770, 0.0592, 0.1918, 0.1991, 0, 0, 0, 0, 0]),
    7: ([3, 6, 2, 4, 10, 4, 2, 7, 2, 7], [0, 0.1770, 0.0592, 0.1918, 0, 0.1788, 0.1441, 0, 0, 0.1228]),
    8: ([8, 1, 1, 4, 1, 4, 2, 5, 2, 5], [0.092, 0.1770, 0, 0.1918, 0.1991, 0, 0, 0.0562, 0, 0]),
    9: ([8, 6, 2, 4, 10, 4, 2, 7, 2, 7], [0, 0.1770, 0, 0.1918, 0, 0.1788, 0.1441, 0.0562, 0, 0.1228]),
    10: ([9, 6, 2, 4, 9, 4, 2, 7, 2, 9], [0, 0.1770, 0, 0.1918, 0, 0.1788, 0.1323, 0, 0.1437, 0]),
    11: ([9, 1, 1, 4, 1, 4, 2, 7, 2, 7], [0.0924, 0.1770, 0, 0.1918, 0, 0, 0.1441, 0, 0.0922, 0]),
    12: ([9, 5, 2, 4, 9, 4, 2, 7, 2, 7], [0, 0.1770, 0, 0.1918, 0.1620, 0, 0.1441, 0, 0.1197, 0]),
    13: ([9, 5, 2, 4, 9, 4, 2, 7, 2, 5], [0, 0.1770, 0, 0.1918, 0.1642, 0, 0.1323, 0, 0.1197, 0]),
    14: ([3, 5, 2, 4, 10, 4, 2, 7, 2, 7], [0, 0.1770, 0.0592, 0.1918, 0.1620, 0, 0.1441, 0, 0, 0.1228]),
    15: ([3, 5, 2, 4, 10, 4, 2, 7, 2, 5], [0, 0.1770, 0.0592, 0.1918, 0.1642, 0, 0.1323, 0, 0, 0.1228]),
    16: ([9, 5, 2, 4, 9, 4, 2, 5, 2, 5], [0, 0.1770, 0, 0.1918, 0.1991, 0, 0, 0, 0.1197, 0]),
    17: ([8, 5, 2, 4, 10, 4, 2, 7, 2, 7], [0, 0.1770, 0, 0.1918, 0.1620, 0, 0.1441, 0.0562, 0, 0.1228]),
    18: ([8, 5, 2, 4, 10, 4, 2, 7, 2, 5], [0, 0.1770, 0, 0.1918, 0.1642, 0, 0.1323, 0.0562, 0, 0.1228]),
    19: ([3, 5, 2, 4, 10, 4, 2, 5, 2, 5], [0, 0.1770, 0.0592, 0.1918, 0.1991, 0, 0, 0, 0, 0.1228]),
    20: ([9, 1, 1, 4, 9, 4, 2, 7, 2, 7], [0.0923, 0.1770, 0, 0.1918, 0, 0, 0.1441, 0, 0.1197, 0]),
    21: ([8, 5, 2, 4, 10, 4, 2, 5, 2, 5], [0, 0.1770, 0, 0.1918, 0.1991, 0, 0, 0.0562, 0, 0.1228]),
    22: ([3, 1, 1, 4, 10, 4, 2, 7, 2, 7], [0.0923, 0.1770, 0.0592, 0.1918, 0, 0, 0.1441, 0, 0, 0.1228]),
    23: ([9, 5, 2, 4, 9, 4, 2, 7, 2, 9], [0, 0.1770, 0, 0.1918, 0.1620, 0, 0.1323, 0, 0.1437, 0]),
    24: ([8, 1, 1, 4, 10, 4, 2, 7, 2, 7], [0.0923, 0.1770, 0, 0.1918, 0, 0, 0.1441, 0.0562, 0, 0.1228]),
    25: ([9, 1, 1, 4, 1, 4, 2, 7, 2, 5], [0.0924, 0.1770, 0, 0.1918, 0.1642, 0, 0.1323, 0, 0.0922, 0]),
    26: ([3, 5, 2, 4, 10, 4, 2, 10, 2, 5], [0, 0.1770, 0.0592, 0.1918, 0.1642, 0, 0, 0, 0, 0.1570]),
    27: ([9, 1, 1, 4, 9, 4, 2, 7, 2, 9], [0.0923, 0.1770, 0, 0.1918, 0, 0, 0.1323, 0, 0.1437, 0]),
    28: ([8, 5, 2, 4, 10, 4, 2, 10, 2, 5], [0, 0.1770, 0, 0.1918, 0.1642, 0, 0, 0.0562, 0, 0.1570]),
    29: ([9, 1, 1, 4, 1, 4, 2, 5, 2, 5], [0.0924, 0.1770, 0, 0.1918, 0.1991, 0, 0, 0, 0.0922, 0]),
    30: ([9, 6, 2, 4, 10, 4, 2, 7, 2, 7], [0, 0.1770, 0, 0.1918, 0, 0.1788, 0.1441, 0, 0.0922, 0.1228]),
    31: ([9, 5, 2, 4, 10, 4, 2, 7, 2, 7], [0, 0.1770, 0, 0.1918, 0.1620, 0, 0.1441, 0, 0.0922, 0.1228]),
    32: ([9, 5, 2, 4, 10, 4, 2, 7, 2, 5], [0, 0.1770, 0, 0.1918, 0.1642, 0, 0.1323, 0, 0.0922, 0.1228]),
    33: ([9, 5, 2, 4, 10, 4, 2, 5, 2, 5], [0, 0.1770, 0, 0.1918, 0.1991, 0, 0, 0, 0.0922, 0.1228]),
    34: ([9, 1, 1, 4, 10, 4, 2, 7, 2, 7], [0.0923, 0.1770, 0, 0.1918, 0, 0, 0.1441, 0, 0.0922, 0.1228]),
    35: ([9, 5, 2, 4, 10, 4, 2, 10, 2, 5], [0, 0.1770, 0, 0.1918, 0.1642, 0, 0, 0, 0.0922, 0.1570]),
    36: ([9, 6, 2, 4, 9, 4, 2, 10, 2, 9], [0, 0.1770, 0, 0.1918, 0, 0.1788, 0, 0, 0.1437, 0.1570]),
    37: ([9, 5, 2, 4, 9, 4, 2, 10, 2, 9], [0, 0.1770, 0, 0.1918, 0.1620, 0, 0, 0, 0.1437, 0.1570]),
    38: ([9, 1, 1, 4, 9, 4, 2, 10, 2, 9], [0.0923, 0.1770, 0, 0.1918, 0, 0, 0, 0, 0.1437, 0.1570]),
}

# indices the worked example reports as optimal (objective 0.1991)
PUBLISHED_OPTIMAL = {6, 8, 16, 19, 21, 29, 33}


def match_sets(found, expected, atol):
    """Bijection between two collections of vectors within ``atol`` per component."""
    found = [np.asarray(v, dtype=float) for v in found]
    expected = [np.asarray(v, dtype=float) for v in expected]
    if len(found) != len(expected):
        return False
    unused = list(range(len(found)))
    for e in expected:
        hit = [k for k in unused if np.max(np.abs(found[k] - e)) <= atol]
        if len(hit) != 1:
            return False
        unused.remove(hit[0])
    return True


@pytest.fixture(scope="session")
def paper_problem():
    return load_fixture("paper_10x10")


def random_case(seed, max_dim=6, cap=100_000):
    """A small random instance with at most ``cap`` assignments.

    Sizes, lambda, density and rounding are drawn from ``seed``; rounding to
    one or two decimals creates exact ties between candidate values.
    """
    from sugeno_fri import GeneratorConfig, compute_j2_sets, random_instance

    rng = np.random.default_rng([seed, 7])
    for attempt in range(100):
        cfg = GeneratorConfig(
            n=int(rng.integers(1, max_dim + 1)),
            m1=int(rng.integers(0, 5)),
            m2=int(rng.integers(1, max_dim + 1)),
            lambda_range=(-0.9, 50.0),
            density=float(rng.choice([1.0, 1.0, 0.9, 0.6])),
            seed=int(rng.integers(2**63)),
            b_upper_range=(float(rng.uniform(0.0, 0.6)), 1.0),
            b_lower_range=(0.0, float(rng.uniform(0.2, 1.0))),
            decimals=[None, None, 2, 1][int(rng.integers(4))],
        )
        problem = random_instance(cfg)
        if np.prod([len(s) for s in compute_j2_sets(problem)], dtype=float) <= cap:
            return problem
    raise RuntimeError("could not draw an instance under the cap")
