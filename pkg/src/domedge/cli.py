"""Command-line interface: ``domedge {solve,verify,gen,formula,check,sweep}``.

Exit codes: 0 success (exact solve, valid coloring, theorem holds),
1 input error, 2 incomplete search, 3 invalid coloring or failed theorem,
4 theorem hypotheses not met.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import families as fam
from .coloring import validate
from .formulas import closed_form
from .graph import Graph, GraphError
from .io import format_graph, read_coloring, read_graph
from .solver import (
    DEFAULT_INDUCED_PATH_CAP,
    DEFAULT_ORACLE_CAP,
    Budget,
    BudgetError,
    chi_dom_brute_oracle,
    chi_dom_exact,
    gamma_numbers,
    lower_bounds,
)
from .sweep import SweepSpec, run_sweep
from .theorems import INCOMPLETE, NOT_MET, SIGNATURES, Checker

EXIT_OK, EXIT_INPUT, EXIT_INCOMPLETE, EXIT_INVALID, EXIT_NOT_MET = 0, 1, 2, 3, 4

log = logging.getLogger("domedge")


class InputError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    """A graph argument is a file path, or ``family:params`` such as ``wheel:6``."""
    p = Path(arg)
    if p.exists():
        return read_graph(p)
    kind = arg.partition(":")[0]
    if kind in fam.FAMILY_RANGES:
        return fam.generate(fam.parse_family(arg))
    raise InputError(f"no such graph file: {arg}")


def emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        return
    for k in sorted(obj):
        v = obj[k]
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True)
        sys.stdout.write(f"{k}: {v}\n")


def _budget(args) -> Budget:
    return Budget.from_env(args.node_cap, args.time_s)


# -- subcommands ------------------------------------------------------------


def cmd_solve(args) -> int:
    G = load_graph(args.graph)
    budget = _budget(args)
    r = chi_dom_exact(G, budget)
    dom = gamma_numbers(G)
    out = {
        "n": G.n,
        "m": G.m,
        "chi_dom_prime": r.value,
        "status": r.status,
        "coloring": list(r.coloring.colors),
        "certificate": {str(c): e for c, e in sorted(r.certificate.witness.items())},
        "bounds": lower_bounds(G, args.induced_path_cap),
        "gamma_prime": dom.gamma_prime,
        "gamma_t_prime": dom.gamma_t_prime,
        "singleton_classes": r.singleton_classes,
        "stats": {"nodes": r.stats.nodes, "node_cap": budget.node_cap, "time_cap_s": budget.time_s},
    }
    if args.timing:
        out["stats"]["elapsed_s"] = round(r.stats.elapsed_s, 6)
    if args.oracle:
        try:
            out["oracle_value"] = chi_dom_brute_oracle(G, args.oracle_cap)
        except BudgetError as exc:
            out["oracle_value"] = None
            log.warning("%s", exc)
    emit(out, args.format)
    return EXIT_OK if r.exact else EXIT_INCOMPLETE


def cmd_verify(args) -> int:
    G = load_graph(args.graph)
    col = read_coloring(args.coloring, G)
    rep = validate(G, col)
    out = {
        "proper": rep.proper,
        "dominated": rep.dominated,
        "valid": rep.valid,
        "num_colors": col.num_colors,
        "certificate": None if rep.certificate is None
        else {str(c): e for c, e in sorted(rep.certificate.witness.items())},
        "violations": [[kind, list(items)] for kind, items in rep.violations],
    }
    emit(out, args.format)
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_gen(args) -> int:
    G = fam.generate(fam.FamilySpec(args.family, tuple(args.params)))
    text = format_graph(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_formula(args) -> int:
    res = closed_form(fam.FamilySpec(args.family, tuple(args.params)))
    emit(res.to_dict(), args.format)
    return EXIT_OK


def _check_args(theorem_id: str, raw: list[str]) -> list:
    sig = SIGNATURES.get(theorem_id)
    if sig is None:
        raise InputError(f"unknown theorem id {theorem_id!r}; choose from {', '.join(SIGNATURES)}")
    if len(raw) != len(sig):
        raise InputError(f"{theorem_id} takes {len(sig)} argument(s) ({', '.join(sig)}), got {len(raw)}")
    out = []
    for kind, a in zip(sig, raw):
        if kind == "G":
            out.append(load_graph(a))
        elif kind == "F":
            out.append(fam.parse_family(a))
        else:
            try:
                out.append(int(a))
            except ValueError:
                raise InputError(f"expected an integer, got {a!r}") from None
    return out


def cmd_check(args) -> int:
    parsed = _check_args(args.theorem, args.args)
    rep = Checker(_budget(args), args.induced_path_cap).check(args.theorem, *parsed)
    emit(rep.to_dict(), args.format)
    if rep.status == INCOMPLETE:
        return EXIT_INCOMPLETE
    if rep.status == NOT_MET:
        return EXIT_NOT_MET
    return EXIT_OK if rep.holds else EXIT_INVALID


def cmd_sweep(args) -> int:
    spec = SweepSpec.from_file(args.spec) if args.spec else SweepSpec()
    if args.node_cap is not None:
        spec.node_cap = args.node_cap
    if args.time_s is not None:
        spec.time_s = args.time_s
    res = run_sweep(spec, Checker(spec.budget(), args.induced_path_cap))
    res.write_findings(args.findings)
    out = dict(res.summary, findings_file=str(args.findings))
    emit(out, args.format)
    if res.summary["fails"]:
        return EXIT_INVALID
    return EXIT_INCOMPLETE if res.summary["incomplete"] else EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--node-cap", type=int, default=None, help="search node budget (env DOMEDGE_NODE_CAP)")
    common.add_argument("--time-s", type=float, default=None, help="wall-clock budget (env DOMEDGE_TIME_S)")
    common.add_argument("--induced-path-cap", type=int, default=DEFAULT_INDUCED_PATH_CAP)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="domedge", description="Exact dominated edge coloring tools.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="compute the dominated edge chromatic number")
    s.add_argument("graph", help="graph file or family:params")
    s.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-stable output)")
    s.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="validate a coloring file against a graph")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="write a family graph in simple format")
    s.add_argument("family", choices=sorted(fam.FAMILY_RANGES))
    s.add_argument("params", type=int, nargs="*")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("formula", parents=[common], help="closed-form value for a family")
    s.add_argument("family", choices=sorted(fam.FAMILY_RANGES))
    s.add_argument("params", type=int, nargs="*")
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("check", parents=[common], help="check one theorem on one instance")
    s.add_argument("theorem")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", parents=[common], help="run a sweep and write findings.json")
    s.add_argument("spec", nargs="?", help="JSON sweep spec (default: built-in acceptance sweep)")
    s.add_argument("--findings", default="findings.json")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, GraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"domedge: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
