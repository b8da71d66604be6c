import networkx as nx
import numpy as np
import pytest

from quipu.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return Graph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def numpy_radius(g: Graph) -> float:
    if g.n == 0:
        return 0.0
    return float(max(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))))


def random_graph(rng, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture(scope="session")
def atlas_connected():
    """Every connected graph on 1..7 vertices (networkx graph atlas)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1 and nx.is_connected(h)]


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        prev = _ACCEPTANCE.get(name)
        _ACCEPTANCE[name] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]}  {name[len('test_criterion_'):]}")
