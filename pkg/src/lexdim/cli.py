"""Command-line interface: ``lexdim {invariants,product,decompose,verify,sweep}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import CapExceededError, DomainError, GraphFormatError
from .families import classify, theorem11_predicate
from .formula import adim_l_formula, decompose, dim_l_formula, dim_l_via_k1, equality_condition
from .graph import (
    Graph,
    diameter,
    from_graph6,
    girth,
    is_connected,
    parse_graph_spec,
    radius,
    to_graph6,
    true_twin_classes,
)
from .lexicographic import read_family, product
from .solvers import DEFAULT_ORDER_CAP, GeneratorKind, dimension
from .verify import SweepConfig, load_graph6_lines, load_pool, sweep, verify_instance

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def resolve_graph_spec(spec: str) -> Graph:
    """Named token, ``g6:<graph6>``, or ``@file`` holding either (or bare graph6)."""
    if spec.startswith("@"):
        lines = [
            s for s in (ln.split("#", 1)[0].strip() for ln in Path(spec[1:]).read_text().splitlines())
            if s
        ]
        if not lines:
            raise GraphFormatError(f"{spec[1:]} holds no graph")
        try:
            return parse_graph_spec(lines[0])
        except GraphFormatError:
            return from_graph6(lines[0])
    return parse_graph_spec(spec)


def graph_invariants(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> dict:
    connected = is_connected(g)

    def solve(kind):
        if kind in (GeneratorKind.METRIC, GeneratorKind.LOCAL_METRIC) and not connected:
            return None
        return dimension(g, kind, cap).value

    fam = classify(g, cap) if g.order else None
    gir = girth(g)
    return {
        "order": g.order,
        "edges": g.num_edges,
        "graph6": to_graph6(g),
        "connected": connected,
        "dim": solve(GeneratorKind.METRIC),
        "adim": solve(GeneratorKind.ADJACENCY),
        "dim_l": solve(GeneratorKind.LOCAL_METRIC),
        "adim_l": solve(GeneratorKind.LOCAL_ADJACENCY),
        "radius": radius(g) if connected and g.order else None,
        "diameter": diameter(g) if connected else "inf",
        "girth": "inf" if gir == float("inf") else gir,
        "twin_classes": [list(c) for c in true_twin_classes(g).classes],
        "in_phi": g.num_edges == 0,
        "in_g": fam.in_g if fam else False,
        "in_g_prime": fam.in_g_prime if fam else False,
        "theorem11_predicate": theorem11_predicate(g),
    }


def cmd_invariants(args) -> int:
    g = resolve_graph_spec(args.graph)
    inv = graph_invariants(g, args.cap)
    if args.json:
        print(_dump(inv))
    else:
        for k, v in inv.items():
            print(f"{k}: {v}")
    return 0


def cmd_product(args) -> int:
    fam = read_family(args.family)
    p = product(fam)
    if args.emit_g6:
        print(to_graph6(p.graph))
        return 0
    print(f"order: {p.graph.order}")
    print(f"edges: {p.graph.num_edges}")
    for i, off in enumerate(p.offsets):
        print(f"block {i}: vertices {off}..{off + p.sizes[i] - 1} ({fam.labels[1][i]})")
    print(f"graph6: {to_graph6(p.graph)}")
    return 0


def cmd_decompose(args) -> int:
    fam = read_family(args.family)
    rep = decompose(fam, cap=args.cap)
    d = rep.to_dict()
    d["dim_l_formula"] = dim_l_formula(fam, rep).value
    d["adim_l_formula"] = adim_l_formula(fam, rep).value
    d["via_k1"] = dim_l_via_k1(fam, rep, args.cap).value
    d["equality_condition"] = equality_condition(fam, args.cap)
    if args.json:
        print(_dump(d))
    else:
        for k, v in d.items():
            print(f"{k}: {v}")
    return 0


def cmd_verify(args) -> int:
    fam = read_family(args.family)
    rep = verify_instance(fam, args.cap)
    if args.json:
        print(_dump(rep.to_dict()))
    else:
        print(f"status: {rep.status}")
        if rep.reason:
            print(f"reason: {rep.reason}")
        for k in ("dim_l", "adim_l", "via_k1"):
            if k in rep.formula:
                bf = rep.brute_force.get(k, rep.brute_force.get("dim_l"))
                print(f"{k}: formula {rep.formula[k]}, brute force {bf}")
        for name, ok in rep.checks.items():
            print(f"  {'PASS' if ok else 'FAIL'} {name}")
    return rep.exit_code


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        pool=load_pool(args.pool),
        max_base_order=args.max_base_order,
        exhaustive_max_order=args.exhaustive_max_order,
        samples=args.samples,
        seed=args.seed,
        cap=args.cap,
        base_graph6=load_graph6_lines(args.bases_g6) if args.bases_g6 else None,
    )
    summary = sweep(cfg, jobs=args.jobs)
    if args.json:
        print(_dump(summary))
    else:
        c = summary["counts"]
        print(f"instances: {summary['instances']}  pass: {c['pass']}  fail: {c['fail']}  skip: {c['skip']}")
        for f in summary["failures"]:
            print("FAIL instance:")
            print(f["family_file"], end="")
    return 1 if summary["counts"]["fail"] else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lexdim", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("invariants", help="dimensions and structure of one graph")
    s.add_argument("graph", help="named token (P4, C7, K2,3), g6:<graph6>, or @file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("product", help="build the lexicographic product of a family file")
    s.add_argument("family")
    s.add_argument("--emit-g6", action="store_true")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("decompose", help="print the structural decomposition")
    s.add_argument("family")
    s.add_argument("--json", action="store_true")
    s.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", help="check the closed forms against brute force")
    s.add_argument("family")
    s.add_argument("--json", action="store_true")
    s.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="verify many instances")
    s.add_argument("--max-base-order", type=int, default=4)
    s.add_argument("--pool", required=True, help="file with one member graph spec per line")
    s.add_argument("--exhaustive-max-order", type=int, default=2)
    s.add_argument("--samples", type=int, default=200, help="random instances per larger base order")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--bases-g6", help="file of graph6 base graphs instead of exhaustive bases")
    s.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, DomainError, CapExceededError, OSError, ValueError) as exc:
        print(f"lexdim: error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
