"""Named graph families and graph operators."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, build_graph

# kind -> (parameter count, minimum per parameter)
FAMILY_RANGES: dict[str, tuple[int, ...]] = {
    "path": (1,),
    "cycle": (3,),
    "complete": (1,),
    "complete_bipartite": (1, 1),
    "star": (1,),
    "bistar": (1, 1),
    "wheel": (4,),
    "friendship": (1,),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_RANGES:
            raise GraphError(f"unknown family {self.kind!r}; choose from {sorted(FAMILY_RANGES)}")
        mins = FAMILY_RANGES[self.kind]
        if len(self.params) != len(mins):
            raise GraphError(f"{self.kind} takes {len(mins)} parameter(s), got {len(self.params)}")
        for p, lo in zip(self.params, mins):
            if p < lo:
                raise GraphError(f"{self.kind} parameter {p} below minimum {lo}")

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"


def parse_family(text: str) -> FamilySpec:
    """Parse ``kind:p1,p2`` (e.g. ``wheel:6``, ``complete_bipartite:2,3``)."""
    kind, _, rest = text.partition(":")
    params = tuple(int(x) for x in rest.split(",") if x.strip()) if rest else ()
    return FamilySpec(kind.strip(), params)


def path(n: int) -> Graph:
    return generate(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def complete_bipartite(r: int, s: int) -> Graph:
    return generate(FamilySpec("complete_bipartite", (r, s)))


def star(k: int) -> Graph:
    return generate(FamilySpec("star", (k,)))


def bistar(p: int, q: int) -> Graph:
    return generate(FamilySpec("bistar", (p, q)))


def wheel(n: int) -> Graph:
    """Hub 0 joined to the cycle on vertices 1..n-1 (n vertices in total)."""
    return generate(FamilySpec("wheel", (n,)))


def friendship(n: int) -> Graph:
    return generate(FamilySpec("friendship", (n,)))


def empty(n: int) -> Graph:
    return build_graph(n, [], name=f"empty({n})")


def generate(spec: FamilySpec) -> Graph:
    kind, ps = spec.kind, spec.params
    if kind == "path":
        (n,) = ps
        nv, edges = n, [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        (n,) = ps
        nv, edges = n, [(i, (i + 1) % n) for i in range(n)]
    elif kind == "complete":
        (n,) = ps
        nv, edges = n, list(combinations(range(n), 2))
    elif kind == "complete_bipartite":
        r, s = ps
        nv, edges = r + s, [(i, r + j) for i in range(r) for j in range(s)]
    elif kind == "star":
        (k,) = ps
        nv, edges = k + 1, [(0, i) for i in range(1, k + 1)]
    elif kind == "bistar":
        p, q = ps
        nv = p + q + 2
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(p)]
        edges += [(1, 2 + p + j) for j in range(q)]
    elif kind == "wheel":
        (n,) = ps
        rim = n - 1
        nv = n
        edges = [(0, i) for i in range(1, n)]
        edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    else:  # friendship
        (n,) = ps
        nv = 2 * n + 1
        edges = []
        for i in range(n):
            a, b = 2 * i + 1, 2 * i + 2
            edges += [(0, a), (0, b), (a, b)]
    return build_graph(nv, edges, name=str(spec))


# -- operators ------------------------------------------------------------


def disjoint_union(G: Graph, H: Graph) -> Graph:
    off = G.n
    edges = list(G.edges) + [(u + off, v + off) for u, v in H.edges]
    return build_graph(G.n + H.n, edges, name=f"({G} | {H})")


def join(G: Graph, H: Graph) -> Graph:
    off = G.n
    edges = list(G.edges) + [(u + off, v + off) for u, v in H.edges]
    edges += [(u, off + w) for u in range(G.n) for w in range(H.n)]
    return build_graph(G.n + H.n, edges, name=f"({G} + {H})")


def corona(G: Graph, H: Graph) -> Graph:
    """Copy i of H sits on vertices ``n + i*k .. n + i*k + k - 1``."""
    n, k = G.n, H.n
    if n < 1:
        raise GraphError("corona needs a nonempty first graph")
    edges = list(G.edges)
    for i in range(n):
        base = n + i * k
        edges += [(base + u, base + v) for u, v in H.edges]
        edges += [(i, base + w) for w in range(k)]
    return build_graph(n * (1 + k), edges, name=f"({G} o {H})")


def subdivide(G: Graph, k: int) -> Graph:
    """Replace every edge by a path with k edges.

    Internal vertex l (1..k-1) of the superedge on edge index i = (u, v), u < v,
    is ``n + i*(k-1) + l - 1`` with label ``x_l^{u,v}``; l counts from u.
    """
    if k < 1:
        raise GraphError(f"subdivision length must be >= 1, got {k}")
    if k == 1:
        return G
    base_labels = list(G.labels) if G.labels else [str(v) for v in range(G.n)]
    labels = list(base_labels)
    edges = []
    nv = G.n
    for u, v in G.edges:
        chain = [u] + list(range(nv, nv + k - 1)) + [v]
        labels += [f"x_{l}^{{{base_labels[u]},{base_labels[v]}}}" for l in range(1, k)]
        nv += k - 1
        edges += list(zip(chain, chain[1:]))
    return build_graph(nv, edges, labels=labels, name=f"subdivide({G},{k})")


def _relabel_without(G: Graph, v: int) -> list[int]:
    return [x if x < v else x - 1 for x in range(G.n)]


def remove_vertex(G: Graph, v: int) -> Graph:
    if not 0 <= v < G.n:
        raise GraphError(f"invalid vertex {v}")
    idx = _relabel_without(G, v)
    edges = [(idx[a], idx[b]) for a, b in G.edges if v not in (a, b)]
    labels = None if G.labels is None else [l for i, l in enumerate(G.labels) if i != v]
    return build_graph(G.n - 1, edges, labels=labels, name=f"({G} - v{v})")


def remove_edge(G: Graph, e: int) -> Graph:
    if not 0 <= e < G.m:
        raise GraphError(f"invalid edge index {e}")
    edges = [x for i, x in enumerate(G.edges) if i != e]
    return build_graph(G.n, edges, labels=G.labels, name=f"({G} - e{e})")


def contract_edge(G: Graph, e: int) -> Graph:
    """Merge the endpoints of edge e; parallel edges collapse to one."""
    if not 0 <= e < G.m:
        raise GraphError(f"invalid edge index {e}")
    u, v = G.edges[e]
    idx = _relabel_without(G, v)
    idx[v] = idx[u]
    edges = set()
    for i, (a, b) in enumerate(G.edges):
        if i == e:
            continue
        a2, b2 = idx[a], idx[b]
        if a2 != b2:
            edges.add((min(a2, b2), max(a2, b2)))
    labels = None if G.labels is None else [l for i, l in enumerate(G.labels) if i != v]
    return build_graph(G.n - 1, sorted(edges), labels=labels, name=f"({G} / e{e})")


def contract_edge_multigraph(G: Graph, e: int) -> tuple[int, list[tuple[int, int]]]:
    """Merge the endpoints of edge e keeping parallel edges, so exactly one edge disappears.

    Returns ``(n, edges)``; the edge list may repeat pairs and is not a ``Graph``.
    """
    if not 0 <= e < G.m:
        raise GraphError(f"invalid edge index {e}")
    u, v = G.edges[e]
    idx = _relabel_without(G, v)
    idx[v] = idx[u]
    edges = [tuple(sorted((idx[a], idx[b]))) for i, (a, b) in enumerate(G.edges) if i != e]
    return G.n - 1, sorted(edges)


# -- constructions for realizability and gap families ---------------------


def realization_a(a: int, b: int) -> Graph:
    """Friendship graph F_b with a - 2b pendant edges at the center."""
    if b < 2 or a < 2 * b:
        raise GraphError(f"realization_a needs b >= 2 and a >= 2b, got a={a}, b={b}")
    F = friendship(b)
    extra = a - 2 * b
    edges = list(F.edges) + [(0, F.n + i) for i in range(extra)]
    return build_graph(F.n + extra, edges, name=f"realization_a({a},{b})")


def realization_b(a: int, b: int) -> Graph:
    """Star K_{1,a} whose first b leaves each get one more pendant edge."""
    if b < 2 or a < b:
        raise GraphError(f"realization_b needs a >= b >= 2, got a={a}, b={b}")
    S = star(a)
    edges = list(S.edges) + [(1 + i, S.n + i) for i in range(b)]
    return build_graph(S.n + b, edges, name=f"realization_b({a},{b})")


def fan(d: int) -> Graph:
    """Hub 0 joined to every vertex of the path 1..d; the hub is not a cut vertex."""
    if d < 2:
        raise GraphError(f"fan needs d >= 2, got {d}")
    edges = [(0, i) for i in range(1, d + 1)] + [(i, i + 1) for i in range(1, d)]
    return build_graph(d + 1, edges, name=f"fan({d})")


def bridged_bistar(d: int) -> Graph:
    """Bi-star B_{d,d} (centers 0, 1) plus a vertex adjacent to both centers.

    The center edge (0, 1) is edge index 0 and is not a bridge.
    """
    if d < 1:
        raise GraphError(f"bridged_bistar needs d >= 1, got {d}")
    B = bistar(d, d)
    z = B.n
    return build_graph(B.n + 1, list(B.edges) + [(0, z), (1, z)], name=f"bridged_bistar({d})")
