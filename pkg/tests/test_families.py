import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from domedge import families as fam
from domedge.families import FamilySpec, parse_family
from domedge.graph import GraphError, build_graph, cut_vertices, max_degree

from conftest import graphs
from test_graph import to_nx


def iso(G, H):
    return nx.is_isomorphic(to_nx(G), to_nx(H))


@pytest.mark.parametrize("G,n,m", [
    (fam.path(6), 6, 5),
    (fam.cycle(7), 7, 7),
    (fam.complete(5), 5, 10),
    (fam.complete_bipartite(2, 3), 5, 6),
    (fam.star(4), 5, 4),
    (fam.bistar(2, 3), 7, 6),
    (fam.wheel(5), 5, 8),
    (fam.friendship(3), 7, 9),
    (fam.empty(3), 3, 0),
    (fam.fan(4), 5, 7),
    (fam.bridged_bistar(2), 7, 7),
])
def test_counts(G, n, m):
    assert (G.n, G.m) == (n, m)


def test_family_spec_and_parse():
    assert str(parse_family("complete_bipartite:2,3")) == "complete_bipartite(2,3)"
    assert fam.generate(parse_family("wheel:6")).m == 10
    for bad in ("wheel:3", "cycle:2", "path:0", "star:1,2", "torus:3"):
        with pytest.raises(GraphError):
            parse_family(bad)


def test_wheel_convention():
    W = fam.wheel(5)
    assert max_degree(W) == 4
    assert iso(fam.remove_vertex(W, 0), fam.cycle(4))


def test_join_examples():
    assert iso(fam.join(fam.complete(1), fam.cycle(4)), fam.wheel(5))
    two_k2 = fam.disjoint_union(fam.path(2), fam.path(2))
    assert iso(fam.join(fam.complete(1), two_k2), fam.friendship(2))
    assert iso(fam.join(fam.empty(2), fam.empty(3)), fam.complete_bipartite(2, 3))


def test_corona_examples():
    C = fam.corona(fam.cycle(3), fam.complete(1))
    assert (C.n, C.m) == (6, 6)
    assert iso(fam.corona(fam.path(2), fam.complete(1)), fam.path(4))
    C = fam.corona(fam.path(3), fam.path(3))
    assert (C.n, C.m) == (12, 2 + 3 * 2 + 3 * 3)


def test_subdivide_examples():
    assert iso(fam.subdivide(fam.path(2), 4), fam.path(5))
    assert iso(fam.subdivide(fam.cycle(3), 4), fam.cycle(12))
    S = fam.subdivide(fam.star(3), 3)
    assert S.m == 9 and S.n == 10
    assert S.labels[4:6] == ("x_1^{0,1}", "x_2^{0,1}")
    assert fam.subdivide(fam.cycle(5), 1).key() == fam.cycle(5).key()
    with pytest.raises(GraphError):
        fam.subdivide(fam.cycle(5), 0)


@given(graphs(max_n=6), st.integers(1, 4))
def test_subdivide_counts(G, k):
    S = fam.subdivide(G, k)
    assert S.m == k * G.m and S.n == G.n + (k - 1) * G.m
    if G.m:
        assert max_degree(S) == (max_degree(G) if k == 1 else max(max_degree(G), 2))


def test_operators_examples():
    assert iso(fam.remove_vertex(fam.cycle(5), 2), fam.path(4))
    assert iso(fam.contract_edge(fam.cycle(5), 0), fam.cycle(4))
    assert iso(fam.remove_edge(fam.path(4), 1), fam.disjoint_union(fam.path(2), fam.path(2)))
    # simple contraction: the triangle collapses to a single edge
    assert iso(fam.contract_edge(fam.complete(3), 0), fam.path(2))


@given(graphs(max_n=7, min_edges=1))
def test_multigraph_contraction_drops_one_edge(G):
    for e in range(G.m):
        n, edges = fam.contract_edge_multigraph(G, e)
        assert n == G.n - 1 and len(edges) == G.m - 1
        assert sorted(set(edges)) == list(fam.contract_edge(G, e).edges)


@given(graphs(max_n=7, min_edges=1))
def test_contraction_counts(G):
    for e in range(G.m):
        Q = fam.contract_edge(G, e)
        u, v = G.edges[e]
        common = len(G.adjacency[u] & G.adjacency[v])
        assert Q.n == G.n - 1 and Q.m == G.m - 1 - common


def test_realizations():
    A = fam.realization_a(6, 2)
    assert (A.n, A.m, max_degree(A)) == (7, 8, 6)
    B = fam.realization_b(4, 2)
    assert (B.n, B.m, max_degree(B)) == (7, 6, 4)
    with pytest.raises(GraphError):
        fam.realization_a(3, 2)
    with pytest.raises(GraphError):
        fam.realization_b(2, 3)


def test_gap_families_structure():
    for d in range(2, 9):
        assert 0 not in cut_vertices(fam.fan(d))
        assert fam.bridged_bistar(d).edges[0] == (0, 1)


def test_bistar_and_friendship_layout():
    B = fam.bistar(1, 2)
    assert B.edges[0] == (0, 1) and sorted(B.adjacency[1]) == [0, 3, 4]
    F = fam.friendship(2)
    assert (1, 2) in F.edges and (3, 4) in F.edges and max_degree(F) == 4
