"""Recovering the directed power graph from a power graph or an enhanced
power graph, and converting between the directed and enhanced forms.

The pipeline is: mark a CCG-set, summarize into R4, rebuild R3 by gluing
divisor Hasse diagrams, orient back to R2, close up to R1, and expand
twin classes into the full colored directed power graph.  The output is
an isomorphic copy, not a relabeling of the input vertices: closed twins
are interchangeable and the reconstruction does not try to tell them
apart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ccg_detection import CcgMarking, mark_ccg_enhanced, mark_ccg_power
from .errors import PipelineError
from .graph_core import ColoredDiGraph, ColoredGraph
from .numtheory import divisors, euler_phi, is_prime
from .reductions import R4Graph, hasse_divisor_graph

__all__ = [
    "Algorithm3Step",
    "r4_from_marked_graph",
    "r3_from_r4",
    "r3_from_r4_steps",
    "r2_from_r3",
    "r1_from_r2",
    "cdpow_from_r1",
    "dpow_from_power_graph",
    "dpow_from_enhanced_graph",
    "epow_from_dpow",
    "pow_from_dpow",
]


def r4_from_marked_graph(Gamma: ColoredGraph, marking: CcgMarking) -> R4Graph:
    """Build R4 from a marked power/enhanced power graph.

    Each CC vertex g contributes an A-vertex of color deg(g)+1 (its
    closed neighborhood corresponds to the cyclic subgroup it generates);
    the B-vertex for a pair is colored by the size of the two closed
    neighborhoods' intersection.  CC vertices are ordered ascending by
    (color, index).
    """
    cc = sorted(marking.cc_vertices, key=lambda v: (Gamma.degree(v) + 1, v))
    if not cc:
        raise PipelineError("marking contains no CC vertex")
    closed = [Gamma.closed_neighborhood(g) for g in cc]
    inter: dict[tuple[int, int], int] = {}
    for i in range(len(cc)):
        for j in range(i + 1, len(cc)):
            size = len(closed[i] & closed[j])
            if size == 0:
                raise PipelineError(
                    "not a power graph: CC vertices "
                    f"{cc[i]} and {cc[j]} have disjoint closed neighborhoods"
                )
            inter[(i, j)] = size
    return R4Graph(
        ccg_colors=tuple(len(nb) for nb in closed),
        intersection_colors=inter,
        ccg_vertices=tuple(cc),
    )


@dataclass(frozen=True)
class Algorithm3Step:
    """Snapshot after one gluing iteration.

    `graph` is the accumulated graph relabeled to [0, n); `vertex_ids`
    maps its labels back to the internal ids, which are stable across
    steps; `identified` holds the ids of old vertices that absorbed a
    vertex of the newly introduced Hasse diagram in this iteration.
    """

    graph: ColoredGraph
    vertex_ids: tuple[int, ...]
    identified: frozenset[int]


def r3_from_r4_steps(X: R4Graph) -> list[Algorithm3Step]:
    """Run the R4 -> R3 gluing and return every intermediate state."""
    colors: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    tops: list[int] = []  # id of the vertex standing for g_s
    next_id = 0
    steps: list[Algorithm3Step] = []

    for j in range(X.m):
        cj = X.ccg_colors[j]
        divs = divisors(cj)
        y_id = {d: next_id + k for k, d in enumerate(divs)}
        next_id += len(divs)
        y_edges = [
            (y_id[a], y_id[b])
            for a in divs
            for b in divs
            if b > a and b % a == 0 and is_prime(b // a)
        ]

        # pair old vertices with equal-colored vertices of the new diagram
        assigned: dict[int, int] = {}  # y vertex id -> old id
        for s in range(j):
            c_int = X.intersection_color(s, j)
            for u in _descendant_ids(colors, edges, tops[s]):
                if c_int % colors[u] == 0:
                    y = y_id[colors[u]]
                    if assigned.get(y, u) != u:
                        raise PipelineError(
                            "conflicting identification: R4 violates the "
                            "pairwise-intersection divisibility structure"
                        )
                    assigned[y] = u
        replace = {y: u for y, u in assigned.items()}
        for d in divs:
            y = y_id[d]
            if y not in replace:
                colors[y] = d
                replace[y] = y
        for a, b in y_edges:
            u, v = replace[a], replace[b]
            edges.add((min(u, v), max(u, v)))
        tops.append(replace[y_id[cj]])

        ids = tuple(sorted(colors))
        index = {vid: k for k, vid in enumerate(ids)}
        snapshot = ColoredGraph(
            len(ids),
            tuple(colors[vid] for vid in ids),
            frozenset((index[u], index[v]) for u, v in edges),
        )
        steps.append(
            Algorithm3Step(snapshot, ids, frozenset(assigned.values()))
        )
    return steps


def r3_from_r4(X: R4Graph) -> ColoredGraph:
    """Rebuild an isomorphic copy of R3 from its R4 summary.

    Starts from the divisor Hasse diagram of the first CCG color and, for
    each further CCG vertex, glues in its own diagram along the shared
    divisors dictated by the pairwise intersection colors.
    """
    if X.m == 0:
        raise PipelineError("R4 graph with no CCG vertices")
    if X.m == 1:
        return hasse_divisor_graph(X.ccg_colors[0])
    return r3_from_r4_steps(X)[-1].graph


def _descendant_ids(colors, edges, start):
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj.get(u, ()):
            if w not in seen and colors[w] < colors[u]:
                seen.add(w)
                stack.append(w)
    return seen


def r2_from_r3(X: ColoredGraph) -> ColoredDiGraph:
    """Orient every R3 edge from the larger color to the smaller."""
    arcs = set()
    for u, v in X.edges:
        cu, cv = X.colors[u], X.colors[v]
        hi, lo = (u, v) if cu > cv else (v, u)
        ratio_ok = (
            max(cu, cv) % min(cu, cv) == 0 and is_prime(max(cu, cv) // min(cu, cv))
        )
        if not ratio_ok:
            raise PipelineError(
                f"edge ({u}, {v}) joins colors {cu} and {cv} without prime ratio"
            )
        arcs.add((hi, lo))
    return ColoredDiGraph(X.n, X.colors, frozenset(arcs))


def r1_from_r2(X: ColoredDiGraph) -> ColoredDiGraph:
    """Reflexive and transitive closure."""
    arcs = set()
    for v in range(X.n):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in X.out_neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        arcs.update((v, w) for w in seen)
    return ColoredDiGraph(X.n, X.colors, frozenset(arcs))


def cdpow_from_r1(X: ColoredDiGraph) -> ColoredDiGraph:
    """Blow each R1 vertex u up into a cluster of euler_phi(col(u))
    mutually adjacent closed twins, preserving inter-cluster arcs."""
    offsets = []
    total = 0
    for v in range(X.n):
        offsets.append(total)
        total += euler_phi(X.colors[v])
    clusters = [
        range(offsets[v], offsets[v] + euler_phi(X.colors[v])) for v in range(X.n)
    ]
    colors = [0] * total
    arcs = set()
    for v in range(X.n):
        for a in clusters[v]:
            colors[a] = X.colors[v]
            for b in clusters[v]:
                arcs.add((a, b))  # includes the self-loop
    for u, v in X.arcs:
        if u != v:
            for a in clusters[u]:
                for b in clusters[v]:
                    arcs.add((a, b))
    return ColoredDiGraph(total, tuple(colors), frozenset(arcs))


def _dpow_pipeline(Gamma: ColoredGraph, marking: CcgMarking) -> ColoredDiGraph:
    r4 = r4_from_marked_graph(Gamma, marking)
    r3 = r3_from_r4(r4)
    r2 = r2_from_r3(r3)
    r1 = r1_from_r2(r2)
    return cdpow_from_r1(r1)


def dpow_from_power_graph(Gamma: ColoredGraph) -> ColoredDiGraph:
    """Recover a colored directed power graph from an undirected power
    graph (isomorphic copy; twin classes are interchangeable)."""
    return _dpow_pipeline(Gamma, mark_ccg_power(Gamma))


def dpow_from_enhanced_graph(Gamma: ColoredGraph) -> ColoredDiGraph:
    """Recover a colored directed power graph from an enhanced power
    graph (isomorphic copy)."""
    return _dpow_pipeline(Gamma, mark_ccg_enhanced(Gamma))


def epow_from_dpow(D: ColoredDiGraph) -> ColoredGraph:
    """Edge {u, v} iff some vertex's closed out-neighborhood contains
    both; the result is the enhanced power graph, uncolored."""
    edges = set()
    for w in range(D.n):
        members = sorted(D.closed_out_neighborhood(w))
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                edges.add((u, v))
    return ColoredGraph(D.n, (1,) * D.n, frozenset(edges))


def pow_from_dpow(D: ColoredDiGraph) -> ColoredGraph:
    """Undirected shadow without self-loops, uncolored."""
    shadow = D.undirected_shadow()
    return ColoredGraph(shadow.n, (1,) * shadow.n, shadow.edges)
