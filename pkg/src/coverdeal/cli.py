"""Command-line front end.

Exit codes: 0 ok, 1 invalid input, 2 resource cap hit, 3 unsupported
configuration, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import __version__
from .covers import minimal_covers
from .errors import CoverdealError, UnsupportedConfiguration, ValidationError
from .graph import HFamilySpec, as_graph, load_graph_json, to_dot
from .invariants import cover_ideal_invariants, edge_ideal_invariants, general_report
from .monomials import (
    closed_form_cover_ideal_h,
    cover_ideal_by_intersection,
    cover_ideal_from_covers,
    edge_ideal,
)
from .planner import plan_placement
from .quotients import h_family_order, resolution_shape, search_linear_quotients, verify_linear_quotients

EXIT_USAGE = 64

log = logging.getLogger("coverdeal")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="graph JSON file, '-' for stdin")
    common.add_argument("--format", choices=["json", "text"], default="json")

    parser = _Parser(prog="coverdeal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("validate", parents=[common], help="check graph JSON")
    sub.add_parser("covers", parents=[common], help="all minimal vertex covers")
    sub.add_parser("edge-ideal", parents=[common], help="edge ideal generators")
    p = sub.add_parser("cover-ideal", parents=[common], help="ideal of vertex covers")
    p.add_argument("--method", choices=["closed", "enum", "intersect"], default="enum")
    p = sub.add_parser("quotients", parents=[common], help="linear-quotient certificate of the cover ideal")
    p.add_argument("--order", choices=["paper", "family", "search"], default=None,
                   help="'paper' (alias 'family') is the explicit family order and needs clique/stars input; "
                        "default picks it when available")
    sub.add_parser("resolution", parents=[common], help="Betti numbers of R/I_c from linear quotients")
    p = sub.add_parser("invariants", parents=[common], help="dim, depth, pd, reg, CM")
    p.add_argument("--subject", choices=["edge", "cover"], default="cover")
    sub.add_parser("plan", parents=[common], help="leader placement")
    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT output")
    p.add_argument("--leaders", action="store_true", help="highlight the planned leaders")
    return parser


def _read_input(path: str):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"input is not valid JSON: {exc}") from None
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    return load_graph_json(data)


def _require_spec(obj, what: str) -> HFamilySpec:
    if not isinstance(obj, HFamilySpec):
        raise UnsupportedConfiguration(f"{what} needs clique/stars input, got a plain edge list")
    return obj


def _cover_ideal(obj, method: str):
    g = as_graph(obj)
    if method == "closed":
        return closed_form_cover_ideal_h(_require_spec(obj, "--method closed"))
    if method == "intersect":
        if not g.edge_count():
            log.warning("edgeless graph: the intersection is the unit ideal")
        return cover_ideal_by_intersection(g)
    return cover_ideal_from_covers(minimal_covers(g), g.n)


def _certificate(obj, order: Optional[str]):
    ideal = _cover_ideal(obj, "enum")
    if order is None:
        order = "paper" if isinstance(obj, HFamilySpec) and obj.regime() not in ("no-stars", "mixed") else "search"
    if order in ("paper", "family"):
        spec = _require_spec(obj, "--order paper")
        return ideal, verify_linear_quotients(ideal, h_family_order(spec, ideal))
    return ideal, search_linear_quotients(ideal)


def run(args) -> tuple[int, str]:
    obj = _read_input(args.input)
    g = as_graph(obj)
    text = args.format == "text"
    cmd = args.command

    if cmd == "validate":
        out = {"valid": True, "kind": "h-family" if isinstance(obj, HFamilySpec) else "graph",
               "n": g.n, "edges": g.edge_count(), "connected": g.is_connected()}
        if isinstance(obj, HFamilySpec):
            out["regime"] = obj.regime()
        return 0, json.dumps(out)

    if cmd == "covers":
        covers = minimal_covers(g)
        if text:
            return 0, "\n".join(" ".join(f"v{v}" for v in c) for c in covers.covers) + f"\nalpha0 = {covers.alpha0}"
        return 0, json.dumps(covers.to_json())

    if cmd in ("edge-ideal", "cover-ideal"):
        ideal = edge_ideal(g) if cmd == "edge-ideal" else _cover_ideal(obj, args.method)
        return 0, str(ideal) if text else json.dumps(ideal.to_json())

    if cmd == "quotients":
        ideal, cert = _certificate(obj, args.order)
        if cert is None:
            return 0, json.dumps({"exhausted": True})
        if text and cert:
            lines = [str(ideal.gens[k]) for k in cert.order]
            return 0, "\n".join(lines) + f"\nq = {cert.q}"
        return 0, json.dumps(cert.to_json())

    if cmd == "resolution":
        ideal, cert = _certificate(obj, None)
        if not cert:
            raise UnsupportedConfiguration("cover ideal has no linear-quotient order; no resolution shape")
        shape = resolution_shape(ideal, cert)
        return 0, shape.render() if text else json.dumps(shape.to_json())

    if cmd == "invariants":
        if isinstance(obj, HFamilySpec):
            report = edge_ideal_invariants(obj) if args.subject == "edge" else cover_ideal_invariants(obj)
            return 0, json.dumps(report.to_json())
        return 0, json.dumps(general_report(g))

    if cmd == "plan":
        plan = plan_placement(g)
        if text:
            lines = [f"leaders: {' '.join(f'v{v}' for v in plan.leaders)} ({plan.cardinality})"]
            lines += [f"  v{s} -> v{t}" for s, t in sorted(plan.assignment.items())]
            return 0, "\n".join(lines)
        return 0, json.dumps(plan.to_json())

    if cmd == "export-dot":
        leaders = plan_placement(g).leaders if args.leaders else ()
        return 0, to_dot(g, leaders).rstrip("\n")

    raise UsageError(f"unknown command {cmd}")  # pragma: no cover


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="coverdeal: %(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        code, output = run(args)
    except CoverdealError as exc:
        print(f"coverdeal: {type(exc).__name__}: {exc}", file=sys.stderr)
        if args.command == "validate" and isinstance(exc, ValidationError):
            print(json.dumps({"valid": False, "error": str(exc)}))
        return exc.exit_code
    print(output)
    return code
