"""Problem files (JSON) and result documents."""

import json
from importlib import resources
from pathlib import Path

from .system import Problem, validate

FIXTURES = ("paper_10x10",)


def parse_problem(text: str) -> Problem:
    """Parse problem-file text. JSON errors surface as ``json.JSONDecodeError``."""
    raw = json.loads(text)
    if not isinstance(raw, dict):
        raise ValueError("problem file must hold a JSON object")
    return validate(raw)


def load_fixture(name="paper_10x10") -> Problem:
    """One of the bundled instances, by name."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURES}")
    text = resources.files("sugeno_fri").joinpath("data", f"{name}.json").read_text()
    return parse_problem(text)


def resolve_fixture_name(path):
    """Fixture name for ``path`` if it names a bundled instance (e.g.
    ``examples/paper_10x10``) rather than an existing file, else ``None``."""
    p = Path(path)
    if p.exists():
        return None
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    return stem if stem in FIXTURES else None


def load_problem(path) -> Problem:
    name = resolve_fixture_name(path)
    if name is not None:
        return load_fixture(name)
    return parse_problem(Path(path).read_text())


def dump_problem(problem: Problem) -> str:
    return json.dumps(problem.to_dict(), indent=2)


def _vec(v):
    return [float(c) for c in v]


def result_document(result, *, include_minimal=False):
    """The JSON-ready mapping for a :class:`~sugeno_fri.solver.SolveResult`.

    Floats are emitted at full ``repr`` precision; the assignment count is a
    decimal string.
    """
    doc = {"feasible": result.feasible}
    if not result.feasible:
        doc["reason"] = result.reason
    doc["x_max"] = _vec(result.x_max)
    if result.feasible:
        doc["z_star"] = result.z_star
        doc["complete"] = result.complete
        doc["optimal_solutions"] = [_vec(s.x) for s in result.optimal_solutions]
        if include_minimal and result.minimal_solutions is not None:
            doc["minimal_solutions"] = [_vec(s.x) for s in result.minimal_solutions]
    st = result.stats
    doc["stats"] = {
        "nodes_expanded": st.nodes_expanded,
        "solutions_recorded": st.solutions_recorded,
        "assignment_count": str(st.assignment_count),
        "elapsed_ms": round(st.elapsed * 1000.0, 3),
    }
    return doc
