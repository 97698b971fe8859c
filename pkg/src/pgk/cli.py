"""Command-line front end.

Exit codes: 0 ok, 1 semantic negative (non-isomorphic / inconsistent),
2 parse error, 3 I/O error, 4 pipeline diagnostic, 5 size cap exceeded.
All output is deterministic; configuration is flags only.
"""

from __future__ import annotations

import argparse
import sys

from .ccg_detection import mark_ccg_enhanced, mark_ccg_power
from .errors import (
    CayleyTableError,
    GraphFormatError,
    GroupSpecError,
    PipelineError,
    SizeCapError,
)
from .graph_core import (
    ColoredDiGraph,
    ColoredGraph,
    brute_force_color_iso,
    format_graph,
    load_graph,
)
from .group_core import parse_group_spec
from .nilpotent_iso import graph_iso_nilpotent
from .powergraph_build import (
    directed_power_graph,
    enhanced_power_graph,
    power_graph,
)
from .reconstruction import (
    cdpow_from_r1,
    dpow_from_enhanced_graph,
    dpow_from_power_graph,
    epow_from_dpow,
    pow_from_dpow,
    r1_from_r2,
    r2_from_r3,
    r3_from_r4,
    r4_from_marked_graph,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_PIPELINE = 4
EXIT_CAP = 5


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgk",
        description="Power graphs of finite groups: generation, CCG "
        "detection, directed-power-graph reconstruction, and nilpotent "
        "isomorphism testing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a graph from a group spec")
    p.add_argument("spec", help="group spec, e.g. Z6, Q8xZ3, file:PATH")
    p.add_argument("--kind", required=True, choices=["pow", "epow", "dpow", "cdpow"])
    p.add_argument("--out", required=True)

    p = sub.add_parser("detect", help="mark a CCG-set in a graph file")
    p.add_argument("input")
    p.add_argument("--kind", required=True, choices=["pow", "epow"])

    p = sub.add_parser("reconstruct", help="rebuild the directed power graph")
    p.add_argument("input")
    p.add_argument("--kind", required=True, choices=["pow", "epow"])
    p.add_argument("--out", required=True)
    p.add_argument(
        "--emit-stage",
        choices=["r4", "r3", "r2", "r1", "cdpow", "dpow"],
        default="dpow",
    )

    p = sub.add_parser("iso", help="nilpotent isomorphism test on two files")
    p.add_argument("input1")
    p.add_argument("input2")
    p.add_argument("--kind", required=True, choices=["pow", "epow", "dpow"])

    p = sub.add_parser("verify", help="round-trip consistency check")
    p.add_argument("input")
    p.add_argument("--kind", required=True, choices=["pow", "epow"])
    p.add_argument("--cap", type=int, default=30)
    return parser


def _generate(args) -> int:
    G = parse_group_spec(args.spec)
    # deterministic labels: sort elements by (order, index)
    perm_src = sorted(range(G.order), key=lambda g: (G.element_orders[g], g))
    perm = [0] * G.order
    for new, old in enumerate(perm_src):
        perm[old] = new
    from .graph_core import relabel

    if args.kind in ("dpow", "cdpow"):
        graph = relabel(directed_power_graph(G), perm)
    elif args.kind == "pow":
        graph = relabel(power_graph(G), perm)
    else:
        graph = relabel(enhanced_power_graph(G), perm)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_graph(graph, with_colors=args.kind == "cdpow"))
    return EXIT_OK


def _detect(args) -> int:
    graph = load_graph(args.input)
    if not isinstance(graph, ColoredGraph):
        raise GraphFormatError("detect expects an undirected graph file")
    marker = mark_ccg_power if args.kind == "pow" else mark_ccg_enhanced
    marking = marker(graph)
    for v in marking.cc_vertices:
        print(f"{v} {graph.degree(v) + 1}")
    return EXIT_OK


def _reconstruct(args) -> int:
    graph = load_graph(args.input)
    if not isinstance(graph, ColoredGraph):
        raise GraphFormatError("reconstruct expects an undirected graph file")
    marker = mark_ccg_power if args.kind == "pow" else mark_ccg_enhanced
    r4 = r4_from_marked_graph(graph, marker(graph))
    stage = args.emit_stage
    with_colors = True
    if stage == "r4":
        out = r4.to_colored_graph()
    else:
        out = r3_from_r4(r4)
        if stage != "r3":
            out = r2_from_r3(out)
            if stage != "r2":
                out = r1_from_r2(out)
                if stage != "r1":
                    out = cdpow_from_r1(out)
                    if stage == "dpow":
                        with_colors = False
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_graph(out, with_colors=with_colors))
    return EXIT_OK


def _iso(args) -> int:
    g1 = load_graph(args.input1)
    g2 = load_graph(args.input2)
    want_directed = args.kind == "dpow"
    for g in (g1, g2):
        if isinstance(g, ColoredDiGraph) != want_directed:
            raise GraphFormatError(
                f"kind {args.kind} expects "
                f"{'directed' if want_directed else 'undirected'} graph files"
            )
    if graph_iso_nilpotent(g1, g2, args.kind):
        print("isomorphic")
        return EXIT_OK
    print("non-isomorphic")
    return EXIT_NEGATIVE


def _verify(args) -> int:
    graph = load_graph(args.input)
    if not isinstance(graph, ColoredGraph):
        raise GraphFormatError("verify expects an undirected graph file")
    if args.kind == "pow":
        dpow = dpow_from_power_graph(graph)
        back = pow_from_dpow(dpow)
    else:
        dpow = dpow_from_enhanced_graph(graph)
        back = epow_from_dpow(dpow)
    uncolored = ColoredGraph(graph.n, (1,) * graph.n, graph.edges)
    mapping = brute_force_color_iso(uncolored, back, cap=args.cap)
    if mapping is None:
        print("inconsistent: reconstruction does not match the input")
        return EXIT_NEGATIVE
    print(f"consistent: round-trip isomorphism found on {graph.n} vertices")
    return EXIT_OK


_HANDLERS = {
    "generate": _generate,
    "detect": _detect,
    "reconstruct": _reconstruct,
    "iso": _iso,
    "verify": _verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (GroupSpecError, CayleyTableError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PIPELINE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
