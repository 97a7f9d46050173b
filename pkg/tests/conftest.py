import itertools

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from domedge.graph import build_graph
from domedge.sweep import small_connected_graphs

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def atlas_connected():
    """All connected graphs on at most 6 vertices with at least one edge (142 graphs)."""
    return [G for G in small_connected_graphs(15) if G.n <= 6]


def matching_value(G) -> int:
    """Third route: m minus a maximum matching of the pair-compatibility graph.

    Uses only networkx and explicit neighborhoods, no bitsets.
    """
    H = nx.Graph()
    H.add_nodes_from(range(G.m))
    nbr = [set(f for f in range(G.m) if f != e and set(G.edges[e]) & set(G.edges[f])) for e in range(G.m)]
    for e, f in itertools.combinations(range(G.m), 2):
        if f not in nbr[e] and nbr[e] & nbr[f]:
            H.add_edge(e, f)
    return G.m - len(nx.max_weight_matching(H, maxcardinality=True))


@st.composite
def graphs(draw, max_n=8, min_edges=0, max_edges=16, connected=False):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)),
                           max_size=min(max_edges, len(pairs))))
    if connected:
        # a random spanning tree keeps the graph connected
        order = draw(st.permutations(range(n)))
        tree = {tuple(sorted((order[i], order[draw(st.integers(0, i - 1))]))) for i in range(1, n)}
        chosen = sorted(tree | set(chosen))
    return build_graph(n, chosen)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
