"""Family/operator sweeps over the theorem checks, with a findings report."""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from . import families as fam
from .families import FamilySpec
from .graph import Graph, build_graph, is_connected
from .solver import Budget
from .theorems import EXACT, INCOMPLETE, NOT_MET, Checker, TheoremReport

log = logging.getLogger(__name__)

BOUND_SUITE = ("T-delta", "T-halfm", "T-gammat", "T-indpath")


def _default_families() -> list[dict]:
    return [
        {"kind": "path", "ranges": [[2, 15]]},
        {"kind": "cycle", "ranges": [[3, 14]]},
        {"kind": "complete", "ranges": [[2, 5]]},
        {"kind": "complete_bipartite", "ranges": [[2, 4], [2, 7]]},
        {"kind": "star", "ranges": [[1, 14]]},
        {"kind": "bistar", "ranges": [[1, 7], [1, 11]]},
        {"kind": "wheel", "ranges": [[4, 8]]},
        {"kind": "friendship", "ranges": [[1, 4]]},
    ]


@dataclass
class SweepSpec:
    """What to sweep. Ranges are inclusive; instances above ``edge_cap`` edges are skipped
    except for the explicitly listed join/corona/subdivision items, which may reach ``spot_cap``
    (joins of two 3-edge graphs are allowed beyond it, as the join suite requires).
    """

    families: list[dict] = field(default_factory=_default_families)
    operators: list[str] = field(default_factory=lambda: ["remove_vertex", "remove_edge", "contract_edge"])
    theorems: list[str] | None = None
    edge_cap: int = 14
    spot_cap: int = 18
    node_cap: int = 10**7
    time_s: float = 60.0
    join_max_edges: int = 3
    join_include_k1: bool = True
    corona_g: list[str] = field(default_factory=lambda: ["path:2", "path:3", "cycle:3"])
    corona_h: list[str] = field(default_factory=lambda: ["complete:1", "complete:2", "path:3"])
    subdivision_base_max_edges: int = 4
    subdivision_ks: list[int] = field(default_factory=lambda: [2, 3, 4])
    mod0_base_max_edges: int = 3
    star_cases: list[list[int]] = field(default_factory=lambda: [[3, 3]])
    realize_a: list[list[int]] = field(default_factory=lambda: [[4, 2], [5, 2], [6, 2], [6, 3]])
    realize_b: list[list[int]] = field(default_factory=lambda: [[2, 2], [3, 2], [4, 2], [4, 3]])
    path_vertex_keyed: list[int] = field(default_factory=lambda: [5, 13])
    closed_form_max_edges: int = 12
    spot_graphs: list[dict] = field(default_factory=lambda: [
        {"name": "spider(3,3,1)", "n": 8,
         "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [3, 7]]},
    ])

    @classmethod
    def from_dict(cls, data: dict) -> "SweepSpec":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown sweep spec keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | Path) -> "SweepSpec":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def budget(self) -> Budget:
        return Budget(self.node_cap, self.time_s)

    def wants(self, theorem_id: str) -> bool:
        return self.theorems is None or theorem_id in self.theorems


@dataclass
class SweepResult:
    reports: list[TheoremReport]
    summary: dict

    @property
    def findings(self) -> list[TheoremReport]:
        return [r for r in self.reports if r.holds is False]

    def write_findings(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps([r.to_dict() for r in self.findings], indent=2, sort_keys=True) + "\n")


def family_instances(spec: SweepSpec) -> list[Graph]:
    out = []
    for item in spec.families:
        ranges = [range(lo, hi + 1) for lo, hi in item["ranges"]]
        for params in product(*ranges):
            if item["kind"] in ("complete_bipartite", "bistar") and params[0] > params[1]:
                continue
            G = fam.generate(FamilySpec(item["kind"], tuple(params)))
            if G.m <= spec.edge_cap:
                out.append(G)
    return out


def operator_results(G: Graph, operators) -> list[Graph]:
    out = []
    if "remove_vertex" in operators:
        out += [fam.remove_vertex(G, v) for v in range(G.n)]
    if "remove_edge" in operators:
        out += [fam.remove_edge(G, e) for e in range(G.m)]
    if "contract_edge" in operators:
        out += [fam.contract_edge(G, e) for e in range(G.m)]
    return out


def _edge_name(G: nx.Graph) -> str:
    return "G[" + ",".join(f"{u}-{v}" for u, v in sorted(G.edges())) + "]"


def small_connected_graphs(max_edges: int, min_edges: int = 1) -> list[Graph]:
    """Connected graphs (up to isomorphism, no isolated vertices) with a bounded edge count."""
    out = []
    for A in graph_atlas_g()[1:]:
        if min_edges <= A.number_of_edges() <= max_edges and nx.is_connected(A):
            out.append(build_graph(A.number_of_nodes(), A.edges(), name=_edge_name(A)))
    return out


def _dedupe(graphs) -> list[Graph]:
    seen, out = set(), []
    for G in graphs:
        if G.key() not in seen:
            seen.add(G.key())
            out.append(G)
    return out


def run_sweep(spec: SweepSpec | None = None, checker: Checker | None = None) -> SweepResult:
    spec = spec or SweepSpec()
    ck = checker or Checker(spec.budget())
    reports: list[TheoremReport] = []

    def run(tid: str, *args):
        if spec.wants(tid):
            reports.append(ck.check(tid, *args))

    base = family_instances(spec)
    derived = [H for G in base for H in operator_results(G, spec.operators) if H.m <= spec.edge_cap]

    subdiv_bases = _dedupe(small_connected_graphs(spec.subdivision_base_max_edges)
                           + [G for G in base if G.m <= spec.subdivision_base_max_edges and is_connected(G)])
    subdivided = [fam.subdivide(G, k) for G in subdiv_bases for k in spec.subdivision_ks if k > 1]
    subdivided = [S for S in subdivided if S.m <= spec.spot_cap]

    join_parts = ([fam.complete(1)] if spec.join_include_k1 else []) + small_connected_graphs(spec.join_max_edges)
    joins = [(G, H) for G in join_parts for H in join_parts]
    coronas = [(fam.generate(fam.parse_family(g)), fam.generate(fam.parse_family(h)))
               for g in spec.corona_g for h in spec.corona_h]
    spots = [build_graph(s["n"], s["edges"], name=s.get("name", "")) for s in spec.spot_graphs]

    everything = _dedupe(
        base + derived + subdivided + [fam.join(G, H) for G, H in joins]
        + [fam.corona(G, H) for G, H in coronas] + spots
    )
    log.info("sweep: %d graphs for bound suite", len(everything))

    for G in everything:
        for tid in BOUND_SUITE:
            run(tid, G)

    for G in base:
        for v in range(G.n):
            run("T-delv", G, v)
        for e in range(G.m):
            run("T-dele", G, e)
            run("T-contract", G, e)
            run("T-contract-simple", G, e)

    for G, H in joins:
        run("T-join", G, H)
    for G, H in coronas:
        for tid in ("T-corona-lb", "T-corona-ub", "T-corona-eq", "T-corona-t"):
            run(tid, G, H)

    for G in subdiv_bases:
        for k in spec.subdivision_ks:
            if fam.subdivide(G, k).m > spec.spot_cap:
                continue
            run("T-sub-m", G, k)
            run("T-sub-sandwich", G, k)
            if k == 4 and G.m <= spec.mod0_base_max_edges:
                run("T-sub-mod0", G, k)
        if fam.subdivide(G, 4).m <= spec.spot_cap:
            run("T-sub-mono", G, 3)
        run("T-sub-23", G)
    for n, k in spec.star_cases:
        run("T-sub-star", n, k)

    for a, b in spec.realize_a:
        run("T-realize-a", a, b)
    for a, b in spec.realize_b:
        run("T-realize-b", a, b)

    lo, hi = spec.path_vertex_keyed
    for n in range(lo, hi + 1):
        run("F-path-vertex-keyed", n)
    for G in base:
        if G.m <= spec.closed_form_max_edges:
            run("F-closed-form", FamilySpec(*_spec_of(G)))

    reports = _merge(reports)
    return SweepResult(reports, summarize(reports, ck))


def _spec_of(G: Graph) -> tuple[str, tuple[int, ...]]:
    kind, _, rest = G.name.partition("(")
    return kind, tuple(int(x) for x in rest.rstrip(")").split(","))


def _merge(reports: list[TheoremReport]) -> list[TheoremReport]:
    """Drop duplicate (theorem, instance) pairs and order deterministically."""
    by_key = {}
    for r in reports:
        by_key.setdefault(r.key(), r)
    return [by_key[k] for k in sorted(by_key)]


def summarize(reports: list[TheoremReport], checker: Checker | None = None) -> dict:
    per: dict[str, Counter] = {}
    for r in reports:
        c = per.setdefault(r.theorem_id, Counter())
        if r.status == EXACT:
            c["holds" if r.holds else "fails"] += 1
        elif r.status == INCOMPLETE:
            c["incomplete"] += 1
        elif r.status == NOT_MET:
            c["hypotheses-not-met"] += 1
    out = {
        "per_theorem": {tid: {k: per[tid].get(k, 0) for k in ("holds", "fails", "incomplete", "hypotheses-not-met")}
                        for tid in sorted(per)},
        "reports": len(reports),
        "fails": sum(1 for r in reports if r.holds is False),
        "incomplete": sum(1 for r in reports if r.status == INCOMPLETE),
    }
    if checker is not None:
        sizes = [len(c) for r in checker.solved for c in r.coloring.classes()]
        out["solved_graphs"] = len(checker.solved)
        out["max_class_size"] = max(sizes, default=0)
    return out

