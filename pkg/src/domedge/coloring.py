"""Edge colorings, domination witnesses and validation."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, edge_neighborhood


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Per-edge color ids, aligned with the canonical edge order of a graph."""

    colors: tuple[int, ...]
    graph_key: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        cols = self.colors
        if cols and min(cols) < 0:
            raise ColoringError("color ids must be nonnegative")
        used = set(cols)
        if used != set(range(len(used))):
            raise ColoringError("color ids must be contiguous from 0; use normalize_colors()")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for e, c in enumerate(self.colors):
            out[c].append(e)
        return out


def normalize_colors(colors: Sequence[int]) -> tuple[int, ...]:
    """Relabel colors by first appearance in edge order."""
    remap: dict[int, int] = {}
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
    return tuple(remap[c] for c in colors)


def make_coloring(G: Graph, colors: Sequence[int], warn: bool = True) -> EdgeColoring:
    """Build a coloring for ``G``; non-contiguous ids are normalized."""
    colors = tuple(int(c) for c in colors)
    if len(colors) != G.m:
        raise ColoringError(f"coloring has {len(colors)} entries, graph has {G.m} edges")
    used = set(colors)
    if used != set(range(len(used))):
        if warn:
            warnings.warn("non-contiguous color ids normalized", stacklevel=2)
        colors = normalize_colors(colors)
    return EdgeColoring(colors, G.key())


def _check_length(G: Graph, col: EdgeColoring) -> None:
    if len(col.colors) != G.m:
        raise ColoringError(f"coloring has {len(col.colors)} entries, graph has {G.m} edges")


def check_proper(G: Graph, col: EdgeColoring) -> tuple[bool, list[tuple[int, int]]]:
    _check_length(G, col)
    bad = []
    for e in range(G.m):
        for f in sorted(G.edge_adjacency[e]):
            if e < f and col.colors[e] == col.colors[f]:
                bad.append((e, f))
    return not bad, bad


def class_dominator(G: Graph, edge_class: Sequence[int]) -> int | None:
    """Least edge index e with ``edge_class`` inside the closed neighborhood N[e]."""
    members = set(edge_class)
    for e in range(G.m):
        if members <= edge_neighborhood(G, e, closed=True):
            return e
    return None


def find_dominator(G: Graph, col: EdgeColoring, c: int) -> int | None:
    if not 0 <= c < col.num_colors:
        raise ColoringError(f"invalid color id {c}")
    return class_dominator(G, [e for e, x in enumerate(col.colors) if x == c])


@dataclass(frozen=True)
class DominationCertificate:
    witness: dict[int, int]

    def verify(self, G: Graph, col: EdgeColoring) -> bool:
        for c, cls in enumerate(col.classes()):
            w = self.witness.get(c)
            if w is None or not set(cls) <= edge_neighborhood(G, w, closed=True):
                return False
        return True


@dataclass(frozen=True)
class ValidationReport:
    proper: bool
    dominated: bool
    certificate: DominationCertificate | None
    violations: list[tuple[str, tuple[int, ...]]]

    @property
    def valid(self) -> bool:
        return self.proper and self.dominated


def validate(G: Graph, col: EdgeColoring) -> ValidationReport:
    proper, bad_pairs = check_proper(G, col)
    violations: list[tuple[str, tuple[int, ...]]] = [("improper", p) for p in bad_pairs]
    witness = {}
    for c, cls in enumerate(col.classes()):
        w = class_dominator(G, cls)
        if w is None:
            violations.append(("undominated", (c,)))
        else:
            witness[c] = w
    dominated = len(witness) == col.num_colors
    cert = DominationCertificate(witness) if dominated else None
    return ValidationReport(proper, dominated, cert, violations)
