"""Executable forms of the bounds and equalities on the dominated edge chromatic number.

Each check evaluates one statement on one instance using exact solver values.
A report never claims ``holds=False`` from an unfinished search: incomplete
solves yield ``status="incomplete"`` and ``holds=None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import families as fam
from .formulas import FamilySpec, closed_form, vertex_keyed_path_value, star_subdivision_form
from .graph import Graph, bridges, cut_vertices, is_connected, max_degree, structure_report
from .solver import (
    Budget,
    InfeasibleError,
    SolveResult,
    chi_dom_exact,
    chi_dom_multigraph,
    total_edge_domination_number,
)

EXACT = "exact"
INCOMPLETE = "incomplete"
NOT_MET = "hypotheses-not-met"

THEOREM_IDS = (
    "T-delta", "T-halfm", "T-gammat", "T-indpath", "T-realize-a", "T-realize-b",
    "T-corona-lb", "T-corona-ub", "T-corona-eq", "T-corona-t", "T-join",
    "T-delv", "T-dele", "T-contract", "T-contract-simple",
    "T-sub-m", "T-sub-sandwich", "T-sub-star", "T-sub-mod0", "T-sub-mod123", "T-sub-mono", "T-sub-23",
)
# closed-form cross-checks, reported alongside theorem checks
FORMULA_IDS = ("F-closed-form", "F-path-vertex-keyed")

# argument kinds per id, used by the CLI: "G" graph, "i" integer, "F" family spec
SIGNATURES: dict[str, tuple[str, ...]] = {
    "T-delta": ("G",), "T-halfm": ("G",), "T-gammat": ("G",), "T-indpath": ("G",),
    "T-realize-a": ("i", "i"), "T-realize-b": ("i", "i"),
    "T-corona-lb": ("G", "G"), "T-corona-ub": ("G", "G"), "T-corona-eq": ("G", "G"),
    "T-corona-t": ("G", "G"), "T-join": ("G", "G"),
    "T-delv": ("G", "i"), "T-dele": ("G", "i"), "T-contract": ("G", "i"), "T-contract-simple": ("G", "i"),
    "T-sub-m": ("G", "i"), "T-sub-sandwich": ("G", "i"), "T-sub-star": ("i", "i"),
    "T-sub-mod0": ("G", "i"), "T-sub-mod123": ("G", "i"), "T-sub-mono": ("G", "i"), "T-sub-23": ("G",),
    "F-closed-form": ("F",), "F-path-vertex-keyed": ("i",),
}


@dataclass
class TheoremReport:
    theorem_id: str
    instance: str
    relation: str
    lhs: Any
    rhs: Any
    holds: bool | None
    status: str
    witness: dict = field(default_factory=dict)
    graphs: list = field(default_factory=list)

    def key(self) -> tuple[str, str]:
        return (self.theorem_id, self.instance)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "status": self.status,
            "witness": self.witness,
            "graphs": self.graphs,
        }


class _Incomplete(Exception):
    pass


def _graph_record(G: Graph) -> dict:
    return {"name": str(G), "n": G.n, "edges": [list(e) for e in G.edges]}


def _compare(relation: str, lhs, rhs) -> bool:
    if relation == ">=":
        return lhs >= rhs
    if relation == "<=":
        return lhs <= rhs
    if relation == "==":
        return lhs == rhs
    if relation == "between":
        return rhs[0] <= lhs <= rhs[1]
    raise ValueError(relation)


class Checker:
    """Evaluates theorem checks, caching exact values per canonical graph."""

    def __init__(self, budget: Budget | None = None, induced_path_cap: int = 10):
        self.budget = budget or Budget()
        self.induced_path_cap = induced_path_cap
        self._solves: dict = {}
        self._gamma_t: dict = {}
        self._multi: dict = {}

    # -- cached quantities ------------------------------------------------

    def solve(self, G: Graph) -> SolveResult:
        k = G.key()
        if k not in self._solves:
            self._solves[k] = chi_dom_exact(G, self.budget)
        return self._solves[k]

    def chi(self, G: Graph) -> int:
        r = self.solve(G)
        if not r.exact:
            raise _Incomplete(str(G))
        return r.value

    def chi_multigraph(self, n: int, edges) -> int:
        k = (n, tuple(edges))
        if k not in self._multi:
            self._multi[k] = chi_dom_multigraph(n, edges, self.budget)
        r = self._multi[k]
        if not r.exact:
            raise _Incomplete(f"multigraph n={n}, m={len(edges)}")
        return r.value

    def gamma_t(self, G: Graph) -> int | None:
        k = G.key()
        if k not in self._gamma_t:
            try:
                self._gamma_t[k] = total_edge_domination_number(G)[0]
            except InfeasibleError:
                self._gamma_t[k] = None
        return self._gamma_t[k]

    def chi_path(self, p: int) -> int:
        return self.chi(fam.path(p)) if p >= 1 else 0

    def singletons(self, G: Graph) -> int:
        # every optimal coloring has chi - (m - chi) singleton classes
        return 2 * self.chi(G) - G.m

    @property
    def solved(self) -> list[SolveResult]:
        return list(self._solves.values())

    # -- dispatch ---------------------------------------------------------

    def check(self, theorem_id: str, *args) -> TheoremReport:
        try:
            fn = _CHECKS[theorem_id]
        except KeyError:
            raise ValueError(f"unknown theorem id {theorem_id!r}") from None
        instance, graphs, body = fn(self, *args)
        records = [_graph_record(g) for g in graphs]
        try:
            outcome = body()
        except _Incomplete as exc:
            return TheoremReport(theorem_id, instance, "", None, None, None, INCOMPLETE,
                                 {"unsolved": str(exc)}, records)
        if outcome is None:
            return TheoremReport(theorem_id, instance, "", None, None, None, NOT_MET, {}, records)
        relation, lhs, rhs, witness, *extra = outcome
        holds = bool(_compare(relation, lhs, rhs) and all(extra))
        return TheoremReport(theorem_id, instance, relation, lhs, rhs, holds, EXACT, witness, records)


# -- individual checks ------------------------------------------------------
# Each returns (instance description, graphs involved, thunk). The thunk returns
# None when hypotheses fail, else (relation, lhs, rhs, witness[, extra flag that must hold]).


def _t_delta(ck: Checker, G: Graph):
    return str(G), [G], lambda: (">=", ck.chi(G), max_degree(G), {})


def _t_halfm(ck: Checker, G: Graph):
    def body():
        r = ck.solve(G)
        chi = ck.chi(G)
        largest = max((len(c) for c in r.coloring.classes()), default=0)
        return ">=", chi, (G.m + 1) // 2, {"max_class_size": largest}, largest <= 2
    return str(G), [G], body


def _t_gammat(ck: Checker, G: Graph):
    def body():
        gt = ck.gamma_t(G)
        if gt is None or G.m == 0:
            return None
        return ">=", ck.chi(G), gt, {"gamma_t_prime": gt}
    return str(G), [G], body


def _t_indpath(ck: Checker, G: Graph):
    def body():
        if not is_connected(G):
            return None
        rep = structure_report(G, ck.induced_path_cap)
        p = rep.longest_induced_path_vertices
        if p < 7:
            return None
        inner = ck.chi_path(p - 4)
        return ">=", ck.chi(G), rep.max_degree + inner, {
            "induced_path": list(rep.induced_path), "delta": rep.max_degree, "chi_path_minus_4": inner,
        }
    return str(G), [G], body


def _t_realize(kind: str):
    build = fam.realization_a if kind == "a" else fam.realization_b

    def check(ck: Checker, a: int, b: int):
        ok = (a >= 2 * b and b >= 2) if kind == "a" else (a >= b >= 2)
        G = build(a, b) if ok else None

        def body():
            if G is None:
                return None
            gt = ck.gamma_t(G)
            return "==", [ck.chi(G), gt], [a, b], {"delta": max_degree(G)}
        return f"realization_{kind}({a},{b})", [G] if G else [], body
    return check


def _corona_upper(ck: Checker, G: Graph, H: Graph) -> int:
    n, k = G.n, H.n
    base = ck.chi(G) + n * ck.chi(H)
    return base + (n * k // 2 if n % 2 == 0 else (n - 1) * k // 2 + k)


def _t_corona_lb(ck: Checker, G: Graph, H: Graph):
    C = fam.corona(G, H)

    def body():
        n, k = G.n, H.n
        # stated form counts |E(H)| once; the edge-count bound of the corona counts it n times
        stated = -(-(G.m + H.m + n * k) // 2)
        size_bound = -(-(G.m + n * H.m + n * k) // 2)
        chi = ck.chi(C)
        return ">=", chi, stated, {"size_bound": size_bound, "size_bound_holds": chi >= size_bound}
    return str(C), [G, H, C], body


def _t_corona_ub(ck: Checker, G: Graph, H: Graph):
    C = fam.corona(G, H)

    def body():
        return "<=", ck.chi(C), _corona_upper(ck, G, H), {
            "chi_G": ck.chi(G), "chi_H": ck.chi(H), "n": G.n, "k": H.n,
        }
    return str(C), [G, H, C], body


def _t_corona_eq(ck: Checker, G: Graph, H: Graph):
    C = fam.corona(G, H)

    def body():
        if ck.singletons(G) or ck.singletons(H):
            return None
        return "==", ck.chi(C), _corona_upper(ck, G, H), {"chi_G": ck.chi(G), "chi_H": ck.chi(H)}
    return str(C), [G, H, C], body


def _t_corona_t(ck: Checker, G: Graph, H: Graph):
    C = fam.corona(G, H)

    def body():
        n, k = G.n, H.n
        t = ck.singletons(G) + n * ck.singletons(H)
        rhs = ck.chi(G) + n * ck.chi(H) + (n // 2) * k - t
        return "<=", ck.chi(C), rhs, {"t": t, "t_G": ck.singletons(G), "t_H": ck.singletons(H)}
    return str(C), [G, H, C], body


def _t_join(ck: Checker, G: Graph, H: Graph):
    J = fam.join(G, H)

    def body():
        if G.n == 0 or H.n == 0 or not is_connected(G) or not is_connected(H):
            return None
        rhs = ck.chi(G) + ck.chi(H) + -(-(G.n * H.n) // 2)
        return "<=", ck.chi(J), rhs, {"chi_G": ck.chi(G), "chi_H": ck.chi(H)}
    return str(J), [G, H, J], body


def _t_delv(ck: Checker, G: Graph, v: int):
    def body():
        if not is_connected(G) or v in cut_vertices(G):
            return None
        chi, d = ck.chi(G), G.degree(v)
        return "between", ck.chi(fam.remove_vertex(G, v)), [chi - d, chi + d], {"chi_G": chi, "deg_v": d}
    return f"{G}, v={v}", [G], body


def _t_dele(ck: Checker, G: Graph, e: int):
    def body():
        if not is_connected(G) or e in bridges(G):
            return None
        u, w = G.edges[e]
        d = min(G.degree(u), G.degree(w))
        chi = ck.chi(G)
        return "between", ck.chi(fam.remove_edge(G, e)), [chi - 1, chi + d - 2], {"chi_G": chi, "min_deg": d}
    return f"{G}, e={e}", [G], body


def _t_contract(ck: Checker, G: Graph, e: int):
    """G/e keeps parallel edges, so it has exactly one edge fewer than G."""
    def body():
        if not is_connected(G):
            return None
        u, w = G.edges[e]
        d = min(G.degree(u), G.degree(w))
        chi = ck.chi(G)
        n, edges = fam.contract_edge_multigraph(G, e)
        parallel = len(edges) - len(set(edges))
        return "between", ck.chi_multigraph(n, edges), [chi - 1, chi + d - 1], {
            "chi_G": chi, "min_deg": d, "contracted_edges": len(edges), "parallel_edges": parallel,
        }
    return f"{G}, e={e}", [G], body


def _t_contract_simple(ck: Checker, G: Graph, e: int):
    """Same sandwich with parallel edges collapsed (a simple graph)."""
    def body():
        if not is_connected(G):
            return None
        u, w = G.edges[e]
        d = min(G.degree(u), G.degree(w))
        chi = ck.chi(G)
        Q = fam.contract_edge(G, e)
        return "between", ck.chi(Q), [chi - 1, chi + d - 1], {
            "chi_G": chi, "min_deg": d, "contracted_edges": Q.m,
        }
    return f"{G}, e={e}", [G], body


def _t_sub_m(ck: Checker, G: Graph, k: int):
    def body():
        if k < 3:
            return None
        return ">=", ck.chi(fam.subdivide(G, k)), G.m, {}
    return f"{G}, k={k}", [G], body


def _t_sub_sandwich(ck: Checker, G: Graph, k: int):
    def body():
        if k < 2 or G.m == 0 or not is_connected(G):
            return None
        cp = ck.chi_path(k + 1)
        return "between", ck.chi(fam.subdivide(G, k)), [cp, G.m * cp], {"chi_path": cp}
    return f"{G}, k={k}", [G], body


def _t_sub_star(ck: Checker, n: int, k: int):
    def body():
        if n < 3 or k < 3:
            return None
        G = fam.subdivide(fam.star(n), k)
        rhs = n * ck.chi_path(k + 1)
        return "==", ck.chi(G), rhs, {"closed_form": star_subdivision_form(n, k).value}
    return f"subdivide(star({n}),{k})", [], body


def _t_sub_mod0(ck: Checker, G: Graph, k: int):
    def body():
        if k < 4 or k % 4 or G.m == 0 or not is_connected(G):
            return None
        cp = ck.chi_path(k + 1)
        return "==", ck.chi(fam.subdivide(G, k)), G.m * cp, {"chi_path": cp}
    return f"{G}, k={k}", [G], body


def _t_sub_mod123(ck: Checker, G: Graph, k: int):
    def body():
        if k < 5 or k % 4 == 0 or G.m == 0:
            return None
        p = {1: k, 2: k - 1, 3: k}[k % 4]
        cp = ck.chi_path(p)
        return ">=", ck.chi(fam.subdivide(G, k)), G.m * cp, {"path_vertices": p, "chi_path": cp}
    return f"{G}, k={k}", [G], body


def _t_sub_mono(ck: Checker, G: Graph, k: int):
    def body():
        if k < 3:
            return None
        return "<=", ck.chi(fam.subdivide(G, k)), ck.chi(fam.subdivide(G, k + 1)), {}
    return f"{G}, k={k}", [G], body


def _t_sub_23(ck: Checker, G: Graph):
    return str(G), [G], lambda: ("<=", ck.chi(fam.subdivide(G, 2)), ck.chi(fam.subdivide(G, 3)), {})


def _f_closed_form(ck: Checker, spec: FamilySpec):
    G = fam.generate(spec)

    def body():
        res = closed_form(spec)
        if not res.applicable:
            return None
        return "==", ck.chi(G), res.value, {"source": res.source, "note": res.note}
    return str(spec), [G], body


def _f_path_vertex_keyed(ck: Checker, n: int):
    def body():
        if n < 5:
            return None
        keyed = vertex_keyed_path_value(n)
        rhs = int(keyed) if keyed.denominator == 1 else str(keyed)
        chi = ck.chi_path(n)
        return "==", chi, rhs, {
            "vertex_keyed": str(keyed),
            "cycle_length": n - 1,
            "chi_cycle": ck.chi(fam.cycle(n - 1)),
        }
    return f"path({n})", [], body


_CHECKS: dict[str, Callable] = {
    "T-delta": _t_delta,
    "T-halfm": _t_halfm,
    "T-gammat": _t_gammat,
    "T-indpath": _t_indpath,
    "T-realize-a": _t_realize("a"),
    "T-realize-b": _t_realize("b"),
    "T-corona-lb": _t_corona_lb,
    "T-corona-ub": _t_corona_ub,
    "T-corona-eq": _t_corona_eq,
    "T-corona-t": _t_corona_t,
    "T-join": _t_join,
    "T-delv": _t_delv,
    "T-dele": _t_dele,
    "T-contract": _t_contract,
    "T-contract-simple": _t_contract_simple,
    "T-sub-m": _t_sub_m,
    "T-sub-sandwich": _t_sub_sandwich,
    "T-sub-star": _t_sub_star,
    "T-sub-mod0": _t_sub_mod0,
    "T-sub-mod123": _t_sub_mod123,
    "T-sub-mono": _t_sub_mono,
    "T-sub-23": _t_sub_23,
    "F-closed-form": _f_closed_form,
    "F-path-vertex-keyed": _f_path_vertex_keyed,
}


def check(theorem_id: str, *args, budget: Budget | None = None) -> TheoremReport:
    return Checker(budget).check(theorem_id, *args)


# -- gap growth on parameterized families -----------------------------------


def vertex_gap_series(degrees, checker: Checker | None = None) -> list[dict]:
    """|chi(G) - chi(G - hub)| on fans: hub of degree d over a path, hub not a cut vertex."""
    ck = checker or Checker()
    out = []
    for d in degrees:
        G = fam.fan(d)
        assert 0 not in cut_vertices(G)
        a, b = ck.chi(G), ck.chi(fam.remove_vertex(G, 0))
        out.append({"d": d, "chi_G": a, "chi_G_minus_v": b, "gap": abs(a - b)})
    return out


def edge_gap_series(degrees, checker: Checker | None = None) -> list[dict]:
    """|chi(G) - chi(G - e)| on bridged bi-stars, e the (non-bridge) center edge."""
    ck = checker or Checker()
    out = []
    for d in degrees:
        G = fam.bridged_bistar(d)
        assert 0 not in bridges(G) and G.edges[0] == (0, 1)
        a, b = ck.chi(G), ck.chi(fam.remove_edge(G, 0))
        out.append({"d": d, "chi_G": a, "chi_G_minus_e": b, "gap": abs(a - b)})
    return out

