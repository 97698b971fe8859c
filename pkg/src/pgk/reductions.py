"""Isomorphism-invariant reductions of a colored directed power graph.

R1 contracts closed-twin classes, R2 strips self-loops and transitive
arcs (leaving the covering relation of the divisibility order), R3
forgets directions, and R4 summarizes R3 by its CCG vertices and their
pairwise intersections.  Each stage is exposed on its own so the
reconstruction pipeline and the tests can triangulate intermediates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PipelineError
from .graph_core import (
    ColoredDiGraph,
    ColoredGraph,
    closed_twin_partition_directed,
)
from .numtheory import divisors, euler_phi, is_prime

__all__ = [
    "R1Reduction",
    "R4Graph",
    "R2Report",
    "reduce_r1",
    "reduce_r2",
    "reduce_r3",
    "reduce_r4",
    "descendants",
    "ccg_vertices_in_r3",
    "hasse_divisor_graph",
    "verify_r2_structure",
]


@dataclass(frozen=True)
class R1Reduction:
    """Twin-contracted graph plus the class map (vertex i of the reduced
    graph came from classes[i] of the input)."""

    graph: ColoredDiGraph
    classes: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(cls[0] for cls in self.classes)


@dataclass(frozen=True)
class R4Graph:
    """Bipartite summary: CCG vertices g_0..g_{m-1} with their colors,
    and one intersection vertex per pair (i, j) with i < j."""

    ccg_colors: tuple[int, ...]
    intersection_colors: dict[tuple[int, int], int]
    # R3 vertex behind each g_i, when the R4 was built from an R3 graph
    ccg_vertices: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.ccg_colors)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.intersection_colors)

    def intersection_color(self, i: int, j: int) -> int:
        return self.intersection_colors[(min(i, j), max(i, j))]

    def to_colored_graph(self) -> ColoredGraph:
        """Materialize as a colored bipartite graph: A-side vertices
        0..m-1, then one B-side vertex per pair in pair order."""
        m = self.m
        colors = list(self.ccg_colors)
        edges = set()
        for idx, (i, j) in enumerate(self.pairs):
            b = m + idx
            colors.append(self.intersection_colors[(i, j)])
            edges.add((i, b))
            edges.add((j, b))
        return ColoredGraph(m + len(self.pairs), tuple(colors), frozenset(edges))


@dataclass(frozen=True)
class R2Report:
    """Outcome of the structural audit of an R2 candidate."""

    acyclic: bool
    prime_color_ratios: bool
    sources_are_color_maximal: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def reduce_r1(X: ColoredDiGraph) -> R1Reduction:
    """Contract each closed-twin class of a CDPow to one vertex.

    Rejects inputs whose class sizes disagree with euler_phi of the class
    color, which genuine colored directed power graphs always satisfy.
    """
    partition = closed_twin_partition_directed(X)
    classes = partition.classes
    for cls in classes:
        color = X.colors[cls[0]]
        if len(cls) != euler_phi(color):
            raise PipelineError(
                f"not a colored directed power graph: twin class {cls} has size "
                f"{len(cls)}, expected euler_phi({color}) = {euler_phi(color)}"
            )
    index = {v: i for i, cls in enumerate(classes) for v in cls}
    colors = tuple(X.colors[cls[0]] for cls in classes)
    arcs = {(index[u], index[v]) for u, v in X.arcs}
    return R1Reduction(
        ColoredDiGraph(len(classes), colors, frozenset(arcs)), classes
    )


def reduce_r2(X: ColoredDiGraph) -> ColoredDiGraph:
    """Drop self-loops, then drop every arc (a, c) admitting a two-step
    path a -> b -> c with b distinct from both."""
    arcs = {(u, v) for u, v in X.arcs if u != v}
    out = {u: set() for u in range(X.n)}
    for u, v in arcs:
        out[u].add(v)
    kept = {
        (a, c)
        for a, c in arcs
        if not any(b not in (a, c) and c in out[b] for b in out[a])
    }
    return ColoredDiGraph(X.n, X.colors, frozenset(kept))


def reduce_r3(X: ColoredDiGraph) -> ColoredGraph:
    """Forget arc directions."""
    return X.undirected_shadow()


def descendants(X: ColoredGraph, v: int) -> set[int]:
    """Vertices reachable from v along strictly color-decreasing paths,
    including v itself."""
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in X.neighbors(u):
            if w not in seen and X.colors[w] < X.colors[u]:
                seen.add(w)
                stack.append(w)
    return seen


def ccg_vertices_in_r3(X: ColoredGraph) -> list[int]:
    """CCG vertices of an R3 graph: exactly those whose neighbors all
    carry smaller colors.  Sorted ascending by (color, index)."""
    ccg = [
        v
        for v in range(X.n)
        if all(X.colors[w] < X.colors[v] for w in X.neighbors(v))
    ]
    ccg.sort(key=lambda v: (X.colors[v], v))
    return ccg


def reduce_r4(X: ColoredGraph) -> R4Graph:
    """Summarize an R3 graph by its CCG vertices and, per pair, the
    maximum color among their common descendant-reachable vertices."""
    ccg = ccg_vertices_in_r3(X)
    des = {g: descendants(X, g) for g in ccg}
    inter: dict[tuple[int, int], int] = {}
    for i in range(len(ccg)):
        for j in range(i + 1, len(ccg)):
            common = des[ccg[i]] & des[ccg[j]]
            if not common:
                raise PipelineError(
                    f"CCG vertices {ccg[i]} and {ccg[j]} share no descendant"
                )
            best = max(X.colors[v] for v in common)
            if sum(1 for v in common if X.colors[v] == best) > 1:
                raise PipelineError(
                    "two common descendants of maximum color "
                    f"{best} for CCG pair ({ccg[i]}, {ccg[j]})"
                )
            inter[(i, j)] = best
    return R4Graph(
        ccg_colors=tuple(X.colors[g] for g in ccg),
        intersection_colors=inter,
        ccg_vertices=tuple(ccg),
    )


def hasse_divisor_graph(n: int) -> ColoredGraph:
    """Hasse diagram of the divisors of n: one vertex per divisor (its
    color), edges between divisors at prime ratio."""
    divs = divisors(n)
    index = {d: i for i, d in enumerate(divs)}
    edges = set()
    for d in divs:
        for e in divs:
            if e > d and e % d == 0 and is_prime(e // d):
                edges.add((index[d], index[e]))
    return ColoredGraph(len(divs), tuple(divs), frozenset(edges))


def verify_r2_structure(X: ColoredDiGraph) -> R2Report:
    """Audit the three structural properties every genuine R2 graph has:
    acyclicity, prime color ratio on every arc, and in-degree-0 vertices
    being exactly the color-maximal ones among their ancestors."""
    violations = []

    prime_ok = True
    for u, v in X.arcs:
        cu, cv = X.colors[u], X.colors[v]
        if cv == 0 or cu % cv != 0 or not is_prime(cu // cv):
            prime_ok = False
            violations.append(
                f"arc ({u}, {v}) has color ratio {cu}/{cv}, not a prime"
            )

    acyclic = _is_acyclic(X)
    if not acyclic:
        violations.append("graph contains a directed cycle")

    sources_ok = True
    if acyclic:
        reach = _reachability(X)
        indeg0 = {v for v in range(X.n) if X.in_degree(v) == 0}
        for v in range(X.n):
            dominated = any(v in reach[w] for w in range(X.n) if w != v)
            if (v in indeg0) == dominated:
                sources_ok = False
                violations.append(
                    f"vertex {v}: in-degree-0 status inconsistent with reachability"
                )
    return R2Report(acyclic, prime_ok, sources_ok, tuple(violations))


def _is_acyclic(X: ColoredDiGraph) -> bool:
    state = [0] * X.n  # 0 unseen, 1 on stack, 2 done
    for start in range(X.n):
        if state[start]:
            continue
        stack = [(start, iter(X.out_neighbors(start)))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w == v:
                    return False
                if state[w] == 1:
                    return False
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(X.out_neighbors(w))))
                    advanced = True
                    break
            if not advanced:
                state[v] = 2
                stack.pop()
    return True


def _reachability(X: ColoredDiGraph):
    reach = []
    for v in range(X.n):
        seen = set()
        stack = [v]
        while stack:
            u = stack.pop()
            for w in X.out_neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach.append(seen)
    return reach
