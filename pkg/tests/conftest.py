import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acychrom import _backend
from acychrom.core import OrientedGraph, Tournament, UndirectedGraph


@pytest.fixture(params=["compiled", "python"])
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    if request.param == "compiled":
        if not _backend.compiled_available():
            pytest.skip("compiled kernels not built")
    else:
        monkeypatch.setattr(_backend, "_compiled", None)
    return request.param


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grotzsch_graph() -> UndirectedGraph:
    """Mycielskian of C_5: 11 vertices, triangle-free, chromatic number 4."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges += [(i + 5, (i + 1) % 5), (i + 5, (i - 1) % 5), (i + 5, 10)]
    return UndirectedGraph.from_edges(11, [(min(e), max(e)) for e in edges])


def wheel_graph(rim: int) -> UndirectedGraph:
    """Hub 0 joined to the cycle 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(min(i, i % rim + 1), max(i, i % rim + 1)) for i in range(1, rim + 1)]
    return UndirectedGraph.from_edges(rim + 1, edges)


def rotational5() -> Tournament:
    return Tournament.from_oriented(
        OrientedGraph.from_edges(5, [(i, (i + d) % 5) for i in range(5) for d in (1, 2)])
    )


def three_cycle() -> OrientedGraph:
    return OrientedGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])


def tournaments(t: int):
    from oracles import all_tournaments

    for out in all_tournaments(t):
        yield Tournament(t, tuple(out))


ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[k])
