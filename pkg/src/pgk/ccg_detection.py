"""Marking a CCG-set in a power graph or an enhanced power graph when
the underlying group is not given.

The power-graph detector works in phases over a degree-descending list,
deciding each candidate with one of four rules; the decision for a
candidate v looks only at the subgraph induced on its closed
neighborhood and at labels assigned in earlier phases.  The enhanced
detector is a greedy sweep in ascending degree order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PipelineError
from .graph_core import (
    ColoredGraph,
    closed_twin_partition_undirected,
    induced_subgraph,
)
from .group_core import cyclic_group
from .numtheory import is_prime_power
from .powergraph_build import power_graph

__all__ = [
    "CC",
    "NC",
    "IDENTITY",
    "UNLABELED",
    "CcgMarking",
    "TwinProfile",
    "NeighborhoodPartition",
    "twin_profile",
    "matches_cyclic_profile",
    "mark_ccg_power",
    "mark_ccg_enhanced",
]

CC = "CC"
NC = "NC"
IDENTITY = "IDENTITY"
UNLABELED = "UNLABELED"


@dataclass(frozen=True)
class CcgMarking:
    """Per-vertex labels plus the processing order that produced them."""

    labels: tuple[str, ...]
    processing_order: tuple[int, ...]

    @property
    def cc_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, lab in enumerate(self.labels) if lab == CC)

    @property
    def identity_vertex(self) -> int | None:
        for v, lab in enumerate(self.labels):
            if lab == IDENTITY:
                return v
        return None


@dataclass(frozen=True)
class TwinProfile:
    """Multiset of closed-twin-class sizes, plus the size of the class of
    universal vertices (0 if the graph has none)."""

    class_sizes: tuple[int, ...]  # sorted ascending
    dominating_class_size: int


@dataclass(frozen=True)
class NeighborhoodPartition:
    """Split of N[v] by element order relative to o(v).

    Proof machinery: only test code builds this, from a ground-truth
    group, to exercise the twin-structure lemmas.
    """

    higher: frozenset[int]  # o(x) > o(v)
    equal: frozenset[int]  # o(x) = o(v)
    lower: frozenset[int]  # o(x) < o(v)

    @classmethod
    def from_orders(cls, graph: ColoredGraph, orders, v: int):
        ov = orders[v]
        closed = graph.closed_neighborhood(v)
        return cls(
            higher=frozenset(x for x in closed if orders[x] > ov),
            equal=frozenset(x for x in closed if orders[x] == ov),
            lower=frozenset(x for x in closed if orders[x] < ov),
        )


def twin_profile(X: ColoredGraph) -> TwinProfile:
    partition = closed_twin_partition_undirected(X)
    universal = set(X.universal_vertices())
    dominating = 0
    for cls in partition.classes:
        if cls[0] in universal:
            dominating = len(cls)
            break
    return TwinProfile(tuple(partition.sizes()), dominating)


@lru_cache(maxsize=None)
def _cyclic_power_graph_profile(d: int) -> TwinProfile:
    return twin_profile(power_graph(cyclic_group(d)))


def matches_cyclic_profile(gamma_v: ColoredGraph, d: int) -> bool:
    """Does gamma_v closed-twin-partition-wise match Pow(Z_d)?

    Compares the universal-class size and the multiset of twin-class
    sizes; callers guarantee |V(gamma_v)| = d.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if gamma_v.n != d:
        raise ValueError(f"gamma_v has {gamma_v.n} vertices, expected {d}")
    return twin_profile(gamma_v) == _cyclic_power_graph_profile(d)


def mark_ccg_power(Gamma: ColoredGraph) -> CcgMarking:
    """Mark a CCG-set in a power graph.

    Complete graphs are the cyclic-prime-power case: a single CC at the
    lowest index.  Otherwise the lowest-index universal vertex becomes
    IDENTITY and the remaining vertices are processed in decreasing
    degree order (ties by ascending index), one rule firing per phase.
    """
    n = Gamma.n
    if n == 0:
        raise PipelineError("empty graph")
    if Gamma.is_complete():
        labels = [NC] * n
        labels[0] = CC
        return CcgMarking(tuple(labels), ())

    universal = Gamma.universal_vertices()
    if not universal:
        raise PipelineError("no universal vertex: input is not a power graph")
    identity = universal[0]

    labels = [UNLABELED] * n
    labels[identity] = IDENTITY
    order = sorted(
        (v for v in range(n) if v != identity),
        key=lambda v: (-Gamma.degree(v), v),
    )

    for v in order:
        if labels[v] != UNLABELED:
            continue
        d = Gamma.degree(v) + 1
        gamma_v, mapping = induced_subgraph(Gamma, Gamma.closed_neighborhood(v))
        pp = is_prime_power(d) is not None
        if pp and gamma_v.is_complete():
            _mark_cc(Gamma, labels, v, identity)  # Rule 1a
        elif pp:
            labels[v] = NC  # Rule 1b
        elif _has_nc_twin(gamma_v, mapping, labels, v, identity):
            labels[v] = NC  # Rule 2a
        elif matches_cyclic_profile(gamma_v, d):
            _mark_cc(Gamma, labels, v, identity)  # Rule 2b, matching case
        else:
            labels[v] = NC  # Rule 2b, non-matching case
    return CcgMarking(tuple(labels), tuple(order))


def _mark_cc(Gamma, labels, v, identity):
    labels[v] = CC
    for w in Gamma.neighbors(v):
        if w != identity:
            labels[w] = NC


def _has_nc_twin(gamma_v, mapping, labels, v, identity):
    partition = closed_twin_partition_undirected(gamma_v)
    local_v = mapping.index(v)
    for local_w in partition.class_of[local_v]:
        w = mapping[local_w]
        if w != v and w != identity and labels[w] == NC:
            return True
    return False


def mark_ccg_enhanced(Gamma: ColoredGraph) -> CcgMarking:
    """Mark a CCG-set in an enhanced power graph: sweep the vertices in
    ascending degree order, marking the first unmarked vertex CC and all
    of its neighbors NC."""
    n = Gamma.n
    if n == 0:
        raise PipelineError("empty graph")
    labels = [UNLABELED] * n
    order = sorted(range(n), key=lambda v: (Gamma.degree(v), v))
    for v in order:
        if labels[v] != UNLABELED:
            continue
        labels[v] = CC
        for w in Gamma.neighbors(v):
            labels[w] = NC
    return CcgMarking(tuple(labels), tuple(order))
