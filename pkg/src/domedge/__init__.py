"""Exact dominated edge coloring toolkit."""

from ._backend import NUMBA_ENABLED, backend_name
from .coloring import EdgeColoring, make_coloring, validate
from .graph import Graph, GraphError, build_graph, structure_report
from .solver import Budget, SolveResult, chi_dom_brute_oracle, chi_dom_exact, chi_dom_multigraph, gamma_numbers

__all__ = [
    "NUMBA_ENABLED",
    "backend_name",
    "Budget",
    "EdgeColoring",
    "Graph",
    "GraphError",
    "SolveResult",
    "build_graph",
    "chi_dom_brute_oracle",
    "chi_dom_exact",
    "chi_dom_multigraph",
    "gamma_numbers",
    "make_coloring",
    "structure_report",
    "validate",
]
