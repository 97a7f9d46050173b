"""Exact dominated edge chromatic number and edge domination numbers."""

from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from .coloring import (
    DominationCertificate,
    EdgeColoring,
    class_dominator,
    normalize_colors,
    validate,
)
from .formulas import path_value
from .graph import MAX_MASK_EDGES, Graph, GraphError, max_degree, structure_report

DEFAULT_NODE_CAP = 10**7
DEFAULT_TIME_S = 60.0
DEFAULT_ORACLE_CAP = 12
DEFAULT_INDUCED_PATH_CAP = 10
_CHUNK = 200_000


class BudgetError(RuntimeError):
    pass


class InfeasibleError(ValueError):
    """A total edge dominating set does not exist (some edge has no neighbor)."""


@dataclass(frozen=True)
class Budget:
    node_cap: int = DEFAULT_NODE_CAP
    time_s: float = DEFAULT_TIME_S

    def __post_init__(self):
        if self.node_cap <= 0 or self.time_s <= 0:
            raise ValueError("budget caps must be positive")

    @classmethod
    def from_env(cls, node_cap: int | None = None, time_s: float | None = None) -> "Budget":
        if node_cap is None:
            node_cap = int(os.environ.get("DOMEDGE_NODE_CAP", DEFAULT_NODE_CAP))
        if time_s is None:
            time_s = float(os.environ.get("DOMEDGE_TIME_S", DEFAULT_TIME_S))
        return cls(node_cap, time_s)


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    status: str
    elapsed_s: float = field(compare=False, default=0.0)


@dataclass(frozen=True)
class SolveResult:
    """``value`` is exact iff ``status == "exact"``; otherwise it is the best upper bound found."""

    value: int
    status: str
    coloring: EdgeColoring
    certificate: DominationCertificate
    lower_bounds: dict[str, int]
    singleton_classes: int
    stats: SolveStats

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    @property
    def lower(self) -> int:
        return self.value if self.exact else self.lower_bounds["overall"]


def lower_bounds(G: Graph, induced_path_cap: int = DEFAULT_INDUCED_PATH_CAP) -> dict[str, int]:
    """Degree and half-size bounds, plus the claimed induced-path bound.

    ``overall`` only combines the two bounds that follow from the definition;
    the induced-path value is reported separately because it is not sound in
    general (see the T-indpath findings).
    """
    half_m = (G.m + 1) // 2
    delta = max_degree(G)
    p = structure_report(G, induced_path_cap).longest_induced_path_vertices if induced_path_cap else 0
    induced = delta + path_value(p - 4) if p >= 7 else 0
    return {"half_m": half_m, "delta": delta, "induced_path": induced, "overall": max(half_m, delta)}


def _greedy_colors(pair: np.ndarray) -> tuple[int, ...]:
    m = len(pair)
    partner = [-1] * m
    for e in range(m):
        if partner[e] >= 0:
            continue
        for f in range(e + 1, m):
            if partner[f] < 0 and (int(pair[e]) >> f) & 1:
                partner[e], partner[f] = f, e
                break
    return normalize_colors([min(e, partner[e]) if partner[e] >= 0 else e for e in range(m)])


def greedy_upper(G: Graph) -> tuple[int, EdgeColoring]:
    """Pair each edge with the first later unpaired edge sharing a common neighbor edge."""
    G._require_mask_size()
    col = EdgeColoring(_greedy_colors(G.pair_masks), G.key())
    return col.num_colors, col


def branching_order(G: Graph) -> np.ndarray:
    return _order_from_masks(G.neighbor_masks)


def _order_from_masks(nbr: np.ndarray) -> np.ndarray:
    sizes = [bin(int(x)).count("1") for x in nbr]
    return np.array(sorted(range(len(nbr)), key=lambda e: (-sizes[e], e)), dtype=np.int64)


def _finish(G: Graph, colors, status: str, bounds: dict[str, int], nodes: int, t0: float) -> SolveResult:
    col = EdgeColoring(normalize_colors(colors), G.key())
    report = validate(G, col)
    if not report.valid:
        raise AssertionError(f"solver produced an invalid coloring for {G}: {report.violations}")
    t = sum(1 for cls in col.classes() if len(cls) == 1)
    return SolveResult(
        value=col.num_colors,
        status=status,
        coloring=col,
        certificate=report.certificate,
        lower_bounds=bounds,
        singleton_classes=t,
        stats=SolveStats(nodes, status, time.perf_counter() - t0),
    )


def chi_dom_exact(G: Graph, budget: Budget | None = None) -> SolveResult:
    """Branch and bound for the dominated edge chromatic number.

    Budget exhaustion never raises: the result carries ``status="incomplete"``
    with the incumbent as ``value`` and the root bound in ``lower_bounds``.
    """
    budget = budget or Budget()
    t0 = time.perf_counter()
    bounds = lower_bounds(G)
    bounds = {k: bounds[k] for k in ("half_m", "delta", "overall")}
    if G.m == 0:
        return _finish(G, [], "exact", bounds, 0, t0)
    ub, greedy = greedy_upper(G)
    lower = bounds["overall"]
    if ub <= lower:
        return _finish(G, greedy.colors, "exact", bounds, 0, t0)

    colors, status, nodes = _search(G.pair_masks, branching_order(G), greedy.colors, lower, budget, t0)
    return _finish(G, colors, status, bounds, nodes, t0)


def _search(pair: np.ndarray, order: np.ndarray, start, lower: int, budget: Budget, t0: float):
    """Run the resumable kernel in chunks until it finishes or the budget runs out."""
    m = len(pair)
    one = np.int64(1)
    suffix = np.zeros(m + 1, np.int64)
    for p in range(m - 1, -1, -1):
        suffix[p] = suffix[p + 1] | (one << int(order[p]))
    assign = np.full(m, -1, np.int64)
    best_assign = np.array(start, dtype=np.int64)
    cls_edge = np.zeros(m, np.int64)
    cls_size = np.zeros(m, np.int64)
    opt = np.zeros(m + 1, np.int64)
    opened = np.zeros(m + 1, np.int64)
    state = np.zeros(kernels.N_STATE, np.int64)
    state[kernels.S_BEST] = int(best_assign.max()) + 1 if m else 0

    status = "incomplete"
    while True:
        chunk = min(_CHUNK, budget.node_cap - int(state[kernels.S_NODES]))
        if chunk <= 0:
            break
        done = kernels.bnb_search(order, pair, suffix, assign, best_assign, cls_edge,
                                  cls_size, opt, opened, state, chunk, lower)
        if done:
            status = "exact"
            break
        if time.perf_counter() - t0 > budget.time_s:
            break
    return best_assign.tolist(), status, int(state[kernels.S_NODES])


@dataclass(frozen=True)
class MultigraphResult:
    value: int
    status: str
    colors: tuple[int, ...]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.status == "exact"


def chi_dom_multigraph(n: int, edges, budget: Budget | None = None) -> MultigraphResult:
    """Same search on an edge list that may contain parallel edges.

    Parallel edges share both endpoints, so they are adjacent and never share
    a class; everything else carries over from the simple case.
    """
    budget = budget or Budget()
    t0 = time.perf_counter()
    edges = [tuple(sorted(map(int, e))) for e in edges]
    m = len(edges)
    if any(u == v or not (0 <= u < n and 0 <= v < n) for u, v in edges):
        raise GraphError("edge list has a loop or an endpoint out of range")
    if m > MAX_MASK_EDGES:
        raise GraphError(f"bitset kernels support at most {MAX_MASK_EDGES} edges, got {m}")
    if m == 0:
        return MultigraphResult(0, "exact", (), 0)
    nbr = kernels.edge_neighbor_masks(np.array(edges, dtype=np.int64), n)
    pair = kernels.pair_feasibility_masks(nbr)
    deg = Counter(v for e in edges for v in e)
    lower = max((m + 1) // 2, max(deg.values()))
    start = _greedy_colors(pair)
    if max(start) + 1 <= lower:
        colors, status, nodes = list(start), "exact", 0
    else:
        colors, status, nodes = _search(pair, _order_from_masks(nbr), start, lower, budget, t0)
    colors = normalize_colors(colors)
    _check_multigraph_classes(edges, colors)
    return MultigraphResult(max(colors) + 1, status, colors, nodes)


def _check_multigraph_classes(edges, colors) -> None:
    classes: dict[int, list[int]] = {}
    for e, c in enumerate(colors):
        classes.setdefault(c, []).append(e)
    for cls in classes.values():
        if len(cls) == 1:
            continue
        f, g = (edges[i] for i in cls)
        ok = len(cls) == 2 and not set(f) & set(g) and any(
            set(h) & set(f) and set(h) & set(g) for h in edges)
        if not ok:
            raise AssertionError(f"solver produced an invalid class {cls}")


def chi_dom_brute_oracle(G: Graph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Minimum over all partitions of the edges into dominated classes of size 1 or 2.

    Independent of the bitset kernels: pair validity is decided by the
    definitional dominator search, and the optimal partition is re-validated.
    """
    if G.m > cap:
        raise BudgetError(f"oracle cap is {cap} edges, graph has {G.m}")
    m = G.m
    ok_pair = {
        (e, f)
        for e in range(m)
        for f in range(e + 1, m)
        if not (G.edges[e][0] in G.edges[f] or G.edges[e][1] in G.edges[f])
        and class_dominator(G, [e, f]) is not None
    }

    @lru_cache(maxsize=None)
    def best(rest: frozenset) -> tuple[int, tuple]:
        if not rest:
            return 0, ()
        e = min(rest)
        tail = rest - {e}
        val, parts = best(tail)
        out = (val + 1, ((e,),) + parts)
        for f in sorted(tail):
            if (e, f) in ok_pair:
                v2, p2 = best(tail - {f})
                if v2 + 1 < out[0]:
                    out = (v2 + 1, ((e, f),) + p2)
        return out

    val, parts = best(frozenset(range(m)))
    colors = [0] * m
    for c, cls in enumerate(parts):
        for e in cls:
            colors[e] = c
    if m and not validate(G, EdgeColoring(normalize_colors(colors))).valid:
        raise AssertionError("oracle partition failed validation")
    return val


@dataclass(frozen=True)
class DominationResult:
    gamma_prime: int
    gamma_t_prime: int | None
    edge_dominating_set: tuple[int, ...]
    total_edge_dominating_set: tuple[int, ...] | None


def _mask_to_edges(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def edge_domination_number(G: Graph) -> tuple[int, tuple[int, ...]]:
    mask = int(kernels.min_dominating_subset(G.neighbor_masks, False))
    s = _mask_to_edges(mask)
    return len(s), s


def total_edge_domination_number(G: Graph) -> tuple[int, tuple[int, ...]]:
    mask = int(kernels.min_dominating_subset(G.neighbor_masks, True))
    if mask < 0:
        raise InfeasibleError(f"{G} has an edge with no adjacent edge; no total edge dominating set")
    s = _mask_to_edges(mask)
    return len(s), s


def gamma_numbers(G: Graph) -> DominationResult:
    g, gs = edge_domination_number(G)
    try:
        gt, gts = total_edge_domination_number(G)
    except InfeasibleError:
        return DominationResult(g, None, gs, None)
    return DominationResult(g, gt, gs, gts)

