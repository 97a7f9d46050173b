"""Canonical simple-graph representation and structural queries."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels

# Edge sets are packed into int64 bitmasks; bit 63 stays clear.
MAX_MASK_EDGES = 62


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with a canonical (sorted) edge list.

    Vertices are ``0..n-1``. ``labels`` and ``name`` are metadata and take no
    part in equality.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)
    name: str = field(default="", compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_adjacency(self) -> tuple[frozenset[int], ...]:
        out = []
        for i, (u, v) in enumerate(self.edges):
            out.append(frozenset(self.incident[u] + self.incident[v]) - {i})
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_array(self) -> np.ndarray:
        arr = np.array(self.edges, dtype=np.int64)
        return arr.reshape(len(self.edges), 2)

    @cached_property
    def neighbor_masks(self) -> np.ndarray:
        """Open edge neighborhoods as int64 bitmasks over edge indices."""
        self._require_mask_size()
        return kernels.edge_neighbor_masks(self.edge_array, self.n)

    @cached_property
    def pair_masks(self) -> np.ndarray:
        """Bit g of entry f is set iff {f, g} is a dominated two-edge class."""
        return kernels.pair_feasibility_masks(self.neighbor_masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        return (self.n, self.edges)

    def _require_mask_size(self) -> None:
        if self.m > MAX_MASK_EDGES:
            raise GraphError(f"bitset kernels support at most {MAX_MASK_EDGES} edges, got {self.m}")

    def __str__(self) -> str:
        return self.name or f"Graph(n={self.n}, m={self.m})"


def build_graph(
    n: int,
    edge_pairs: Iterable[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str = "",
) -> Graph:
    """Validate ``edge_pairs`` and return the canonical graph.

    Duplicate edges are rejected rather than merged: they signal malformed input.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    return Graph(n, tuple(sorted(seen)), labels, name)


def degree_profile(G: Graph) -> tuple[list[int], int]:
    degs = [len(a) for a in G.adjacency]
    return degs, max(degs, default=0)


def max_degree(G: Graph) -> int:
    return degree_profile(G)[1]


def edge_neighborhood(G: Graph, e: int, closed: bool = False) -> frozenset[int]:
    if not 0 <= e < G.m:
        raise GraphError(f"invalid edge index {e} for graph with {G.m} edges")
    nb = G.edge_adjacency[e]
    return nb | {e} if closed else nb


# -- connectivity ---------------------------------------------------------


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in G.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def _lowlink(G: Graph) -> tuple[set[int], set[int]]:
    disc = [-1] * G.n
    low = [0] * G.n
    cuts: set[int] = set()
    bridges: set[int] = set()
    timer = 0

    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # (vertex, edge index used to enter it, iterator over incident edges)
        stack = [(root, -1, iter(G.incident[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for ei in it:
                if ei == via:
                    continue
                a, b = G.edges[ei]
                w = b if a == v else a
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, ei, iter(G.incident[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.add(via)
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts, bridges


def cut_vertices(G: Graph) -> frozenset[int]:
    return frozenset(_lowlink(G)[0])


def bridges(G: Graph) -> frozenset[int]:
    return frozenset(_lowlink(G)[1])


# -- induced paths --------------------------------------------------------


def longest_induced_path(G: Graph, cap: int) -> list[int]:
    """Vertex sequence of a longest induced path with at most ``cap`` vertices.

    Exhaustive backtracking; each extension must be adjacent to the current
    endpoint and to no other path vertex.
    """
    if cap <= 0 or G.n == 0:
        return []
    adj = G.adjacency
    best: list[int] = [0]
    path: list[int] = []
    on_path = [False] * G.n
    # count of path vertices adjacent to each vertex
    touch = [0] * G.n

    def extend() -> bool:
        nonlocal best
        if len(path) > len(best):
            best = list(path)
            if len(best) >= cap:
                return True
        if len(path) >= cap:
            return False
        last = path[-1]
        for w in adj[last]:
            if on_path[w] or touch[w] != 1:
                continue
            path.append(w)
            on_path[w] = True
            for y in adj[w]:
                touch[y] += 1
            if extend():
                return True
            for y in adj[w]:
                touch[y] -= 1
            on_path[w] = False
            path.pop()
        return False

    for s in range(G.n):
        path.append(s)
        on_path[s] = True
        for y in adj[s]:
            touch[y] += 1
        done = extend()
        for y in adj[s]:
            touch[y] -= 1
        on_path[s] = False
        path.pop()
        if done:
            break
    return best


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    cut_vertices: frozenset[int]
    bridges: frozenset[int]
    max_degree: int
    longest_induced_path_vertices: int
    induced_path: tuple[int, ...] = ()


def structure_report(G: Graph, induced_path_cap: int = 10) -> StructureReport:
    if induced_path_cap < 0:
        raise GraphError("induced_path_cap must be nonnegative")
    cuts, brs = _lowlink(G)
    path = longest_induced_path(G, induced_path_cap)
    return StructureReport(
        connected=is_connected(G),
        cut_vertices=frozenset(cuts),
        bridges=frozenset(brs),
        max_degree=max_degree(G),
        longest_induced_path_vertices=len(path),
        induced_path=tuple(path),
    )
