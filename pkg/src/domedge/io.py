"""Graph and coloring file formats.

Graph files come in two syntaxes, both normalized to the canonical graph:

* simple: a header line ``n m`` followed by m lines ``u v`` (0-based);
* DIMACS-like: ``p edge n m`` followed by ``e u v`` lines (1-based).

Lines starting with ``#`` or a lone ``c`` token are comments. Coloring files hold one line
``colors c_0 ... c_{m-1}`` aligned with the canonical (lexicographic) edge order.
"""

from __future__ import annotations

from pathlib import Path

from .coloring import EdgeColoring, make_coloring
from .graph import Graph, GraphError, build_graph


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line == "c" or line.startswith("c "):
            continue
        out.append((lineno, line.split()))
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph_text(text: str, name: str = "") -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise GraphError("empty graph file")
    lineno, head = lines[0]
    if head[0] == "p":
        if len(head) != 4 or head[1] not in ("edge", "edges", "col"):
            raise GraphError(f"line {lineno}: malformed DIMACS header {' '.join(head)!r}")
        n, m = _ints(head[2:], lineno)
        offset, body = 1, []
        for ln, toks in lines[1:]:
            if toks[0] != "e" or len(toks) != 3:
                raise GraphError(f"line {ln}: expected 'e u v'")
            body.append((ln, _ints(toks[1:], ln)))
    else:
        if len(head) != 2:
            raise GraphError(f"line {lineno}: header must be 'n m'")
        n, m = _ints(head, lineno)
        offset, body = 0, []
        for ln, toks in lines[1:]:
            if len(toks) != 2:
                raise GraphError(f"line {ln}: expected 'u v'")
            body.append((ln, _ints(toks, ln)))
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, file has {len(body)}")
    pairs = []
    for ln, (u, v) in body:
        u, v = u - offset, v - offset
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {ln}: endpoint out of range for n={n}")
        pairs.append((u, v))
    return build_graph(n, pairs, name=name)


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    return parse_graph_text(path.read_text(), name=path.stem)


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def write_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(G))


def parse_coloring_text(text: str, G: Graph) -> EdgeColoring:
    lines = _content_lines(text)
    if len(lines) != 1 or lines[0][1][0] != "colors":
        raise GraphError("coloring file must contain exactly one 'colors ...' line")
    ln, toks = lines[0]
    return make_coloring(G, _ints(toks[1:], ln))


def read_coloring(path: str | Path, G: Graph) -> EdgeColoring:
    return parse_coloring_text(Path(path).read_text(), G)


def format_coloring(col: EdgeColoring) -> str:
    return "colors " + " ".join(map(str, col.colors)) + "\n"
