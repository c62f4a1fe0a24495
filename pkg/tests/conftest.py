import numpy as np
import pytest

from compact_span.generators import erdos_renyi
from compact_span.graph import complete_graph, path_graph, star_graph, validate
from compact_span.rng import make_rng

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Collects one summary line per acceptance criterion."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def tpp():
    """Triangle 0-1-2 with pendant vertex 3 hanging off 0."""
    return validate(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


@pytest.fixture
def s4():
    return star_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


def random_connected_graphs(count, n_lo, n_hi, seed, rho_lo=0.2, rho_hi=0.9):
    """Seeded connected G(n, p) samples with n in [n_lo, n_hi]."""
    rng = make_rng(seed, 99)
    out = []
    for k in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        rho = float(rng.uniform(rho_lo, rho_hi))
        out.append(erdos_renyi(n, rho, seed * 100_000 + k))
    return out


def floyd_warshall(graph):
    """Independent APSP reference (dense relaxation, not BFS)."""
    n = graph.n
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    for u, v in graph.edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d
