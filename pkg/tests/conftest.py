from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from lexdim.graph import Graph

DATA = Path(__file__).parent / "data"

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@st.composite
def graphs(draw, min_order=0, max_order=7):
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_order=1, max_order=7):
    g = draw(graphs(min_order, max_order))
    # chain the components so the result stays connected
    comps = list(nx.connected_components(to_nx(g)))
    extra = [(min(a), min(b)) for a, b in zip(comps, comps[1:])]
    return Graph.from_edges(g.order, g.edges() + extra)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
