"""Closed-form values of the dominated edge chromatic number for named families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .families import FamilySpec


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    applicable: bool
    source: str
    note: str = ""

    def to_dict(self) -> dict:
        return {"value": self.value, "applicable": self.applicable, "source": self.source, "note": self.note}


def _na(source: str, note: str) -> FormulaResult:
    return FormulaResult(None, False, source, note)


def edge_path_value(m: int) -> int:
    """Value for a path (or a cycle of length >= 4) with m edges."""
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    if m == 0:
        return 0
    return m // 2 if m % 4 == 0 else m // 2 + 1


def path_value(p: int) -> int:
    """Value for the path on p vertices."""
    return edge_path_value(max(p - 1, 0))


def vertex_keyed_path_value(n: int) -> Fraction:
    """The vertex-count keyed variant: (n-1)/2 if 4 | n, else floor((n-1)/2) + 1.

    Kept only for discrepancy reporting; it is non-integral at n divisible by 4.
    """
    if n % 4 == 0:
        return Fraction(n - 1, 2)
    return Fraction((n - 1) // 2 + 1)


def _vertex_keyed_note(n_vertices: int, value: int, what: str) -> str:
    if n_vertices < 5:
        return ""
    keyed = vertex_keyed_path_value(n_vertices)
    if keyed == value:
        return ""
    return f"vertex-count keyed condition gives {keyed} for {what}; computed {value}"


def closed_form(spec: FamilySpec) -> FormulaResult:
    kind, ps = spec.kind, spec.params
    if kind == "path":
        (n,) = ps
        src = "path theorem (edge-count keyed)"
        if n < 2:
            return _na(src, "edgeless path")
        v = path_value(n)
        return FormulaResult(v, True, src, _vertex_keyed_note(n, v, f"P{n}"))
    if kind == "cycle":
        (n,) = ps
        src = "cycle theorem (edge-count keyed)"
        if n == 3:
            return FormulaResult(3, True, src, "C3 special case: three pairwise adjacent edges")
        v = edge_path_value(n)
        return FormulaResult(v, True, src, _vertex_keyed_note(n + 1, v, f"C{n}"))
    if kind == "complete":
        (n,) = ps
        src = "complete graph theorem"
        if n < 2:
            return _na(src, "edgeless graph")
        if n == 3:
            return FormulaResult(3, True, src, "K3 special case; ceil(n(n-1)/4) would give 2")
        return FormulaResult(-(-n * (n - 1) // 4), True, src)
    if kind == "complete_bipartite":
        r, s = ps
        if min(r, s) == 1:
            return FormulaResult(max(r, s), True, "star formula")
        return FormulaResult(-(-r * s // 2), True, "complete bipartite theorem")
    if kind == "star":
        (k,) = ps
        return FormulaResult(k, True, "star formula")
    if kind == "wheel":
        (n,) = ps
        return FormulaResult(n - 1, True, "wheel theorem (n vertices, hub + C_{n-1})")
    if kind == "friendship":
        (n,) = ps
        src = "friendship theorem"
        if n == 1:
            return FormulaResult(3, True, src, "F1 = K3 special case")
        return FormulaResult(2 * n, True, src)
    return _na("none", f"no closed form for {kind}")


def star_subdivision_form(n: int, k: int) -> FormulaResult:
    src = "subdivided star theorem"
    if n < 3 or k < 3:
        return _na(src, "requires n >= 3 and k >= 3")
    return FormulaResult(n * path_value(k + 1), True, src)
