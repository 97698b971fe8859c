"""Shared test utilities: the group catalog, relabeling helpers, and the
twin-structure checks reused by both the unit tests and the acceptance
suite."""

from __future__ import annotations

import random

from pgk.ccg_detection import NeighborhoodPartition
from pgk.graph_core import (
    ColoredDiGraph,
    ColoredGraph,
    brute_force_color_iso,
    closed_twin_partition_undirected,
    relabel,
)
from pgk.group_core import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian_group,
    heisenberg_group,
    quaternion_group,
)
from pgk.numtheory import euler_phi, is_prime_power
from pgk.powergraph_build import power_graph


def build_catalog(s3: FiniteGroup) -> list[tuple[str, FiniteGroup]]:
    """The acceptance catalog: Z1..Z24 plus the named non-cyclic groups.
    S3 is passed in because it must come from a Cayley-table file."""
    cat = [(f"Z{n}", cyclic_group(n)) for n in range(1, 25)]
    cat += [
        ("Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))),
        ("Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))),
        ("Z2xZ6", direct_product(cyclic_group(2), cyclic_group(6))),
        ("Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3))),
        ("Z2^3", elementary_abelian_group(2, 3)),
        ("Q8", quaternion_group()),
        ("D4", dihedral_group(4)),
        ("S3", s3),
        ("Z4xZ3", direct_product(cyclic_group(4), cyclic_group(3))),
    ]
    return cat


def build_p_groups() -> list[tuple[str, FiniteGroup]]:
    return [
        ("Z8", cyclic_group(8)),
        ("Z16", cyclic_group(16)),
        ("Z2^3", elementary_abelian_group(2, 3)),
        ("Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2))),
        ("Q8", quaternion_group()),
        ("D4", dihedral_group(4)),
        ("Z9", cyclic_group(9)),
        ("Z27", cyclic_group(27)),
        ("Z3^2", elementary_abelian_group(3, 2)),
        ("ElemAb(3,3)", elementary_abelian_group(3, 3)),
        ("Heis3", heisenberg_group(3)),
    ]


def s3_cayley_text() -> str:
    """Cayley-table file contents for the symmetric group on 3 letters
    (realized as the order-6 dihedral group, which is isomorphic)."""
    table = dihedral_group(3).table
    rows = "\n".join(" ".join(str(x) for x in row) for row in table)
    return f"6\n{rows}\n"


def random_relabel(X, rng: random.Random):
    """A uniformly random relabeled copy of X."""
    perm = list(range(X.n))
    rng.shuffle(perm)
    return relabel(X, perm)


def color_iso(X, Y, cap: int = 30) -> bool:
    return brute_force_color_iso(X, Y, cap=cap) is not None


def subgroup_generators(G: FiniteGroup, g: int) -> set[int]:
    """All u with <u> = <g>."""
    target = G.cyclic_subgroup(g).members
    return {u for u in target if G.cyclic_subgroup(u).members == target}


def gamma_v(Gamma: ColoredGraph, v: int):
    """Induced subgraph on N[v], plus the mapping back to Gamma labels."""
    from pgk.graph_core import induced_subgraph

    return induced_subgraph(Gamma, Gamma.closed_neighborhood(v))


def check_twin_structure(G: FiniteGroup) -> list[str]:
    """The twin-structure invariants for every ground-truth CC-generator
    of non-prime-power order: dominating-class size, per-divisor class
    sizes, the at-most-two-large-classes bound, and the exact twin-class
    identification for non-generator members of <v>.  Returns a list of
    violation descriptions (empty = all good)."""
    from pgk.group_core import ccg_ground_truth
    from pgk.numtheory import divisors

    problems = []
    Gamma = power_graph(G)
    orders = G.element_orders
    for v in ccg_ground_truth(G):
        ov = orders[v]
        if ov < 2 or is_prime_power(ov) is not None:
            continue
        sub, mapping = gamma_v(Gamma, v)
        partition = closed_twin_partition_undirected(sub)
        local = {orig: loc for loc, orig in enumerate(mapping)}

        # dominating class = twin class of v, size phi(o(v)) + 1
        v_class = partition.class_of[local[v]]
        if len(v_class) != euler_phi(ov) + 1:
            problems.append(f"o(v)={ov}: twin class of v has size {len(v_class)}")

        # one class of size phi(k) per proper divisor k > 1, phi(k) | phi(o(v))
        sizes = partition.sizes()
        for k in divisors(ov):
            if 1 < k < ov:
                if euler_phi(k) not in sizes:
                    problems.append(f"o(v)={ov}: no class of size phi({k})")
                if euler_phi(ov) % euler_phi(k) != 0:
                    problems.append(f"o(v)={ov}: phi({k}) does not divide phi({ov})")

        # at most two classes of size >= phi(o(v))
        big = sum(1 for s in sizes if s >= euler_phi(ov))
        if big > 2:
            problems.append(f"o(v)={ov}: {big} classes of size >= phi({ov})")

        # twin class of a non-generator u in <v> is exactly gen(<u>)
        gens_v = subgroup_generators(G, v)
        for u in G.cyclic_subgroup(v).members:
            if u == 0 or u in gens_v:
                continue
            u_class = {mapping[w] for w in partition.class_of[local[u]]}
            if u_class != subgroup_generators(G, u):
                problems.append(f"o(v)={ov}: twin class of u={u} is not gen(<u>)")
    return problems


def check_prime_power_gamma_v(G: FiniteGroup) -> list[str]:
    """For every nontrivial p-power element v that is not a CC-generator
    and satisfies the degree hypothesis, with a maximum-order twin y of
    order p^j, j >= 2: p must divide |V(Gamma_v)|."""
    from pgk.group_core import maximal_cyclic_subgroups

    problems = []
    Gamma = power_graph(G)
    orders = G.element_orders
    cc_members = {
        frozenset(subgroup_generators(G, s.generator))
        for s in maximal_cyclic_subgroups(G)
    }
    cc_generators = set().union(*cc_members) if cc_members else set()
    for v in range(G.order):
        pp = is_prime_power(orders[v])
        if pp is None or v in cc_generators:
            continue
        p = pp[0]
        sub, mapping = gamma_v(Gamma, v)
        partition = closed_twin_partition_undirected(sub)
        local = {orig: loc for loc, orig in enumerate(mapping)}
        twins = [mapping[w] for w in partition.class_of[local[v]]]
        npart = NeighborhoodPartition.from_orders(Gamma, orders, v)
        upper_twins = [u for u in twins if u in npart.higher]
        if any(Gamma.degree(u) > Gamma.degree(v) for u in upper_twins):
            continue  # hypothesis not met
        y = max(twins, key=lambda u: orders[u])
        ppy = is_prime_power(orders[y])
        if ppy is not None and ppy[0] == p and ppy[1] >= 2:
            if sub.n % p != 0:
                problems.append(
                    f"v={v} (order {orders[v]}): p={p} does not divide {sub.n}"
                )
    return problems


def catalog_cdpow(G: FiniteGroup) -> ColoredDiGraph:
    from pgk.powergraph_build import directed_power_graph

    return directed_power_graph(G)


def make_rng(seed: int = 0) -> random.Random:
    return random.Random(seed)
