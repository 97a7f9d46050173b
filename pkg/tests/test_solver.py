import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from domedge import families as fam
from domedge import kernels
from domedge._backend import NUMBA_ENABLED, python_impl
from domedge.coloring import validate
from domedge.graph import GraphError, build_graph
from domedge.solver import (
    Budget,
    BudgetError,
    InfeasibleError,
    chi_dom_brute_oracle,
    chi_dom_exact,
    chi_dom_multigraph,
    edge_domination_number,
    gamma_numbers,
    greedy_upper,
    lower_bounds,
    total_edge_domination_number,
)
from domedge.sweep import small_connected_graphs

from conftest import graphs, matching_value


def test_lower_bound_examples():
    assert lower_bounds(fam.star(4)) == {"half_m": 2, "delta": 4, "induced_path": 0, "overall": 4}
    b = lower_bounds(fam.path(7))
    assert b["induced_path"] == 2 + 2 and b["overall"] == 3
    assert lower_bounds(fam.path(2))["overall"] == 1


@pytest.mark.parametrize("G,value", [
    (fam.path(2), 1), (fam.path(5), 2), (fam.path(6), 3), (fam.cycle(4), 2),
    (fam.cycle(5), 3), (fam.cycle(6), 4), (fam.complete(3), 3), (fam.complete(4), 3),
    (fam.empty(3), 0),
])
def test_small_values(G, value):
    assert chi_dom_brute_oracle(G) == value
    r = chi_dom_exact(G)
    assert r.exact and r.value == value
    assert validate(G, r.coloring).valid


def test_gamma_examples():
    assert total_edge_domination_number(fam.friendship(2))[0] == 2
    assert edge_domination_number(fam.path(4))[0] == 1
    assert total_edge_domination_number(fam.path(4))[0] == 2
    assert total_edge_domination_number(fam.cycle(5))[0] == 3
    assert gamma_numbers(fam.path(2)).gamma_t_prime is None
    with pytest.raises(InfeasibleError):
        total_edge_domination_number(fam.disjoint_union(fam.path(3), fam.path(2)))


def _naive_gamma(G, total):
    from itertools import combinations
    closed = [set(f for f in range(G.m) if set(G.edges[e]) & set(G.edges[f])) for e in range(G.m)]
    opened = [c - {e} for e, c in enumerate(closed)]
    for k in range(G.m + 1):
        for D in combinations(range(G.m), k):
            if total:
                ok = all(any(d in opened[e] for d in D) for e in range(G.m))
            else:
                ok = all(e in D or any(d in opened[e] for d in D) for e in range(G.m))
            if ok:
                return k
    return None


@given(graphs(max_n=7, max_edges=10))
def test_gamma_matches_naive(G):
    d = gamma_numbers(G)
    assert d.gamma_prime == _naive_gamma(G, False)
    assert d.gamma_t_prime == _naive_gamma(G, True)


def test_greedy_is_valid_upper_bound(atlas_connected):
    for G in atlas_connected:
        ub, col = greedy_upper(G)
        assert validate(G, col).valid
        assert ub >= chi_dom_brute_oracle(G, 15)


def test_oracle_equivalence_small_graphs(atlas_connected):
    assert len(atlas_connected) == 142
    for G in atlas_connected:
        r = chi_dom_exact(G)
        assert r.exact and r.value == chi_dom_brute_oracle(G, 15) == matching_value(G), G


def test_oracle_equivalence_by_edges():
    for G in small_connected_graphs(8):
        assert chi_dom_exact(G).value == chi_dom_brute_oracle(G), G


@given(graphs(max_n=9, max_edges=14))
def test_three_routes_agree(G):
    r = chi_dom_exact(G)
    assert r.exact
    assert r.value == chi_dom_brute_oracle(G, 14) == matching_value(G)
    assert r.value >= r.lower_bounds["overall"]
    assert max(len(c) for c in r.coloring.classes()) <= 2 if G.m else r.value == 0
    assert r.singleton_classes == 2 * r.value - G.m


@given(graphs(max_n=12, min_edges=10, max_edges=24))
def test_solver_matches_matching_large(G):
    assert chi_dom_exact(G).value == matching_value(G)


def test_oracle_cap():
    with pytest.raises(BudgetError):
        chi_dom_brute_oracle(fam.complete(6), cap=12)


def test_deterministic():
    G = fam.corona(fam.cycle(3), fam.path(3))
    a, b = chi_dom_exact(G), chi_dom_exact(G)
    assert a.coloring == b.coloring and a.stats == b.stats and a.certificate == b.certificate


def test_incomplete_budget():
    G = fam.wheel(8)
    r = chi_dom_exact(G, Budget(node_cap=1))
    assert r.status == "incomplete" and not r.exact
    assert validate(G, r.coloring).valid
    assert r.value >= chi_dom_exact(G).value
    assert r.lower == r.lower_bounds["overall"]


def test_budget_env(monkeypatch):
    monkeypatch.setenv("DOMEDGE_NODE_CAP", "123")
    monkeypatch.setenv("DOMEDGE_TIME_S", "4.5")
    assert Budget.from_env() == Budget(123, 4.5)
    assert Budget.from_env(7).node_cap == 7
    with pytest.raises(ValueError):
        Budget(0, 1)


def test_time_budget_respected():
    G = fam.join(fam.cycle(5), fam.cycle(5))
    t = time.perf_counter()
    chi_dom_exact(G, Budget(10**9, 0.001))
    assert time.perf_counter() - t < 30


# -- compiled vs fallback kernel parity --------------------------------------


@given(graphs(max_n=9, max_edges=16))
def test_kernel_parity(G):
    if G.m == 0:
        return
    ea = G.edge_array
    nbr = kernels.edge_neighbor_masks(ea, G.n)
    nbr_py = python_impl(kernels.edge_neighbor_masks)(ea, G.n)
    assert np.array_equal(nbr, nbr_py)
    assert np.array_equal(kernels.pair_feasibility_masks(nbr), python_impl(kernels.pair_feasibility_masks)(nbr))
    for total in (False, True):
        assert kernels.min_dominating_subset(nbr, total) == python_impl(kernels.min_dominating_subset)(nbr, total)
    for x in (0, 1, 0b1011, (1 << 61) + 5):
        assert kernels.popcount(np.int64(x)) == python_impl(kernels.popcount)(np.int64(x)) == bin(x).count("1")


def _run_py_search(G):
    from domedge import solver
    saved = kernels.bnb_search
    kernels.bnb_search = python_impl(saved)
    try:
        return solver.chi_dom_exact(G)
    finally:
        kernels.bnb_search = saved


@pytest.mark.parametrize("G", [fam.cycle(9), fam.corona(fam.path(3), fam.complete(2)),
                               fam.subdivide(fam.star(3), 3), build_graph(6, [(0, 1), (2, 3), (4, 5), (1, 2)])])
def test_search_parity(G):
    a, b = chi_dom_exact(G), _run_py_search(G)
    assert (a.value, a.coloring, a.stats.nodes) == (b.value, b.coloring, b.stats.nodes)


def test_backend_flag_reported():
    from domedge import backend_name
    assert backend_name() == ("numba" if NUMBA_ENABLED else "python")


def test_fallback_backend_subprocess():
    import os
    import subprocess
    import sys
    code = ("from domedge import backend_name, families as f; from domedge.solver import chi_dom_exact;"
            "print(backend_name(), chi_dom_exact(f.corona(f.cycle(3), f.path(3))).value)")
    env = dict(os.environ, DOMEDGE_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "9"]


# -- multigraph path ---------------------------------------------------------


def _multigraph_oracle(n, edges):
    """Definitional minimum over partitions into classes of size <= 2, no bitsets."""
    from functools import lru_cache
    m = len(edges)

    def adjacent(i, j):
        return i != j and bool(set(edges[i]) & set(edges[j]))

    ok = {(i, j) for i in range(m) for j in range(i + 1, m)
          if not adjacent(i, j) and any(adjacent(h, i) and adjacent(h, j) for h in range(m))}

    @lru_cache(maxsize=None)
    def best(rest):
        if not rest:
            return 0
        e = min(rest)
        tail = rest - {e}
        return 1 + min([best(tail)] + [best(tail - {f}) for f in tail if (e, f) in ok])
    return best(frozenset(range(m)))


@given(graphs(max_n=7, min_edges=1, max_edges=11), st.data())
def test_multigraph_matches_oracle(G, data):
    extra = data.draw(st.lists(st.integers(0, G.m - 1), max_size=4))
    edges = sorted(list(G.edges) + [G.edges[i] for i in extra])
    r = chi_dom_multigraph(G.n, edges)
    assert r.exact and r.value == _multigraph_oracle(G.n, edges)


@given(graphs(max_n=8, max_edges=14))
def test_multigraph_path_on_simple_graphs(G):
    assert chi_dom_multigraph(G.n, G.edges).value == chi_dom_exact(G).value


def test_multigraph_examples():
    assert chi_dom_multigraph(2, [(0, 1), (0, 1)]).value == 2
    n, edges = fam.contract_edge_multigraph(fam.complete(3), 0)
    assert (n, edges) == (2, [(0, 1), (0, 1)])
    with pytest.raises(GraphError):
        chi_dom_multigraph(2, [(0, 0)])
