"""Construction of the power graph, directed power graph, and enhanced
power graph of a finite group.

The directed power graph keeps its self-loops and the arcs into the
identity, and is colored by out-degree (= element order).  The two
undirected graphs are emitted uncolored: order information must later be
recovered from the graph alone, never read off the group.
"""

from __future__ import annotations

from .graph_core import ColoredDiGraph, ColoredGraph
from .group_core import FiniteGroup, maximal_cyclic_subgroups

__all__ = [
    "directed_power_graph",
    "power_graph",
    "enhanced_power_graph",
]


def directed_power_graph(G: FiniteGroup) -> ColoredDiGraph:
    """CDPow(G): arc (x, y) iff y is a power of x; color = o(x)."""
    n = G.order
    arcs = set()
    for x in range(n):
        for y in G.cyclic_subgroup(x).members:
            arcs.add((x, y))
    return ColoredDiGraph(n, G.element_orders, frozenset(arcs))


def power_graph(G: FiniteGroup) -> ColoredGraph:
    """Pow(G), uncolored: edge {x, y} iff one generates the other."""
    n = G.order
    edges = set()
    for x in range(n):
        for y in G.cyclic_subgroup(x).members:
            if y != x:
                edges.add((min(x, y), max(x, y)))
    return ColoredGraph(n, (1,) * n, frozenset(edges))


def enhanced_power_graph(G: FiniteGroup) -> ColoredGraph:
    """EPow(G), uncolored: edge {x, y} iff x and y lie in a common cyclic
    subgroup.  It suffices to scan the maximal cyclic subgroups."""
    n = G.order
    edges = set()
    for sub in maximal_cyclic_subgroups(G):
        members = sorted(sub.members)
        for i, x in enumerate(members):
            for y in members[i + 1 :]:
                edges.add((x, y))
    return ColoredGraph(n, (1,) * n, frozenset(edges))
