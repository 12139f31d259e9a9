import random

import pytest
from hypothesis import strategies as st

from dominion.graph import Graph

# criterion id -> (passed, description); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def rng():
    return random.Random(20210128)


@pytest.fixture
def sun3_labels():
    """Vertex indices of the labelled 6-vertex sun (triangle u v w, leaves x y z)."""
    return dict(u=0, v=1, w=2, x=3, y=4, z=5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {key:>2}. {text}")
