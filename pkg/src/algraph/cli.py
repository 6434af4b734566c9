"""Command-line interface: ``family``, ``analyze`` and ``verify-design``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 size-bound refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Callable, Optional, Sequence

from . import families, homcore, spectral
from .aut import transitivity
from .designs import DesignError, is_t_design
from .graph import BoundExceeded, Graph, GraphError, bipartition, diameter, girth, is_connected
from .io import ParseError, graph6_encode, parse_incidence, read_graph, sniff_format
from .perm import GroupTooLarge

SCHEMA = "algraph.report/1"
SKIPPED = "skipped: bound"

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BOUND = 0, 1, 2, 3

DEFAULT_MAX_AUT_N = 256
DEFAULT_MAX_DEEP_N = 64
DEFAULT_MAX_FAMILY_N = 4096


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- report sections ---------------------------------------------------------


def _guard(fn: Callable, *args):
    """Run a bounded library call; size refusals become the skipped marker."""
    try:
        return fn(*args)
    except (BoundExceeded, GroupTooLarge):
        return SKIPPED


def basic_section(g: Graph) -> dict:
    hist = Counter(g.degrees)
    return {
        "n": g.n,
        "m": g.num_edges,
        "degrees": {
            "min": g.min_degree() if g.n else None,
            "max": g.max_degree() if g.n else None,
            "regular": g.regularity() if g.n else None,
            "histogram": {str(d): hist[d] for d in sorted(hist)},
        },
        "connected": is_connected(g) if g.n else False,
        "girth": girth(g),
        "diameter": diameter(g),
        "bipartite": bipartition(g) is not None,
    }


def symmetry_section(g: Graph, max_aut_n: int) -> object:
    if g.n > max_aut_n:
        return SKIPPED
    cert = transitivity(g).to_dict()
    cert.pop("extra", None)
    return cert


def _spectrum_dict(p: spectral.SrgParams) -> Optional[dict]:
    if not p.mu < p.k:
        return None
    sp = spectral.srg_spectrum(p)
    frac = lambda m: None if m is None else str(m)  # noqa: E731
    return {
        "theta": sp.theta_str,
        "tau": sp.tau_str,
        "m_theta": frac(sp.m_theta),
        "m_tau": frac(sp.m_tau),
        "feasible": sp.feasible,
    }


def regularity_section(g: Graph) -> dict:
    srg = spectral.srg_check(g)
    connected = g.n > 0 and is_connected(g)
    ia = spectral.intersection_array(g) if connected else None
    gp = spectral.generalized_polygon(g) if connected and bipartition(g) is not None else None
    return {
        "srg": list(srg.astuple()) if srg else None,
        "srg_spectrum": _spectrum_dict(srg) if srg else None,
        "intersection_array": {"b": list(ia.b), "c": list(ia.c)} if ia else None,
        "moore": spectral.is_moore(g),
        "generalized_polygon": (
            {"d": gp.d, "s": gp.s, "t": gp.t, "thick": gp.thick,
             "feit_higman_admissible": spectral.feit_higman_admissible(gp.d, gp.s, gp.t)}
            if gp else None
        ),
        "distinct_eigenvalues": _guard(spectral.distinct_eigenvalue_count, g) if g.n else 0,
    }


def deep_section(g: Graph, max_deep_n: int) -> dict:
    keys = ["core", "is_core", "chromatic_number", "colouring", "independence_number",
            "clique_number", "hamiltonian_cycle", "hamiltonian_path", "max_matching",
            "edge_connectivity", "vertex_connectivity"]
    if g.n > max_deep_n:
        return {k: SKIPPED for k in keys}
    connected = g.n > 0 and is_connected(g)

    def core():
        vs = homcore.core_vertices(g)
        return {"order": len(vs), "vertices": vs}

    def colouring():
        return homcore.optimal_colouring(g)

    def cycle():
        c = homcore.hamiltonian_cycle(g)
        return {"exists": c is not None, "witness": c}

    def path():
        p = homcore.hamiltonian_path(g)
        return {"exists": p is not None, "witness": p}

    def matching():
        m = homcore.max_matching(g)
        return {"size": len(m), "perfect": 2 * len(m) == g.n, "edges": [list(e) for e in m]}

    col = _guard(colouring)
    return {
        "core": _guard(core),
        "is_core": _guard(homcore.is_core, g),
        "chromatic_number": col if col == SKIPPED else len(set(col)),
        "colouring": col,
        "independence_number": _guard(homcore.independence_number, g),
        "clique_number": _guard(homcore.clique_number, g),
        "hamiltonian_cycle": _guard(cycle),
        "hamiltonian_path": _guard(path),
        "max_matching": matching(),
        "edge_connectivity": homcore.edge_connectivity(g) if connected else None,
        "vertex_connectivity": homcore.vertex_connectivity(g) if connected else None,
    }


def build_report(
    g: Graph,
    source: str,
    fmt: str,
    deep: bool = False,
    max_aut_n: int = DEFAULT_MAX_AUT_N,
    max_deep_n: int = DEFAULT_MAX_DEEP_N,
) -> dict:
    report = {
        "schema": SCHEMA,
        "input": {"source": source, "format": fmt},
        "basic": basic_section(g),
        "symmetry": symmetry_section(g, max_aut_n),
        "regularity": regularity_section(g),
    }
    if deep:
        report["deep"] = deep_section(g, max_deep_n)
    return report


def _flatten(prefix: str, value, out: list[str]):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value)}")


def format_text(report: dict) -> str:
    out: list[str] = []
    _flatten("", report, out)
    return "\n".join(out) + "\n"


def format_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# -- commands ------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii", errors="strict") as fh:
            return fh.read()
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not ASCII text: {exc}") from None


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_family(args) -> int:
    try:
        order = families.family_order(args.name, *args.params)
    except (GraphError, IndexError):
        # unknown name or wrong arity: let build() produce the message
        order = 0
    if order > args.max_n:
        raise BoundExceeded(f"family would have {order} vertices, above --max-n {args.max_n}")
    try:
        g = families.build(args.name, *args.params)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, graph6_encode(g).decode("ascii") + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    text = _read(args.input)
    g = read_graph(text)
    report = build_report(
        g, args.input, sniff_format(text), deep=args.deep,
        max_aut_n=args.max_aut_n, max_deep_n=args.max_deep_n,
    )
    _write(None, format_json(report) if args.json else format_text(report))
    return EXIT_OK


def design_report(source: str, s, t: int) -> dict:
    params = is_t_design(s, t)
    out = {"schema": SCHEMA, "input": {"source": source, "format": "incidence"},
           "v": s.v, "b": s.b, "t": t}
    if params is None:
        out["verdict"] = "not a design"
        return out
    out.update({
        "verdict": str(params),
        "k": params.k,
        "lambda": params.lam,
        "lambda_chain": list(params.lambdas),
        "r": params.r,
        "fisher": params.fisher,
        "symmetric": params.symmetric,
    })
    return out


def cmd_verify_design(args) -> int:
    text = _read(args.input)
    try:
        s = parse_incidence(text)
    except DesignError as exc:
        raise ParseError(str(exc)) from None
    if args.t < 0:
        raise UsageError("t must be non-negative")
    report = design_report(args.input, s, args.t)
    _write(None, format_json(report) if args.json else format_text(report))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="algraph", description="Algebraic graph theory toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    f = sub.add_parser("family", help="build a named graph and print it as graph6")
    f.add_argument("name", help="family name: " + ", ".join(sorted(families.REGISTRY)))
    f.add_argument("params", nargs="*", type=int)
    f.add_argument("-o", "--output", help="output path (default stdout)")
    f.add_argument("--max-n", type=int, default=DEFAULT_MAX_FAMILY_N, help="refuse larger graphs")
    f.set_defaults(func=cmd_family)

    a = sub.add_parser("analyze", help="report invariants of a graph6 or edge-list file")
    a.add_argument("input", help="path, or - for stdin")
    a.add_argument("--deep", action="store_true", help="add core, colouring, Hamiltonicity, connectivity")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--max-aut-n", type=int, default=DEFAULT_MAX_AUT_N)
    a.add_argument("--max-deep-n", type=int, default=DEFAULT_MAX_DEEP_N)
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("verify-design", help="check whether an incidence file is a t-design")
    d.add_argument("input", help="path, or - for stdin")
    d.add_argument("-t", "--t", type=int, default=2)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_verify_design)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a command is required: family, analyze or verify-design")
        return args.func(args)
    except UsageError as exc:
        print(f"algraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"algraph: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BoundExceeded, GroupTooLarge) as exc:
        print(f"algraph: refused: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
