"""Finite groups as Cayley tables, plus the cyclic-structure queries the
graph algorithms are tested against.

The identity is always relabeled to index 0 on construction, so
downstream code can rely on table[0][j] == j.  Groups are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import CayleyTableError, GroupSpecError
from .numtheory import is_prime, prime_factorization

__all__ = [
    "FiniteGroup",
    "CyclicSubgroup",
    "MAX_GROUP_ORDER",
    "cyclic_group",
    "dihedral_group",
    "quaternion_group",
    "heisenberg_group",
    "elementary_abelian_group",
    "direct_product",
    "group_from_cayley_table",
    "load_cayley_file",
    "parse_group_spec",
    "maximal_cyclic_subgroups",
    "ccg_ground_truth",
    "is_nilpotent",
]

MAX_GROUP_ORDER = 10_000


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table.

    table[i][j] is the product of elements i and j; index 0 is the
    identity.  Constructors in this module guarantee validity; arbitrary
    tables should go through group_from_cayley_table.
    """

    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for g in range(self.order):
            m, x = 1, g
            while x != 0:
                x = self.table[x][g]
                m += 1
            orders.append(m)
        return tuple(orders)

    def cyclic_subgroup(self, g: int) -> "CyclicSubgroup":
        members = {0}
        x = g
        while x != 0:
            members.add(x)
            x = self.table[x][g]
        return CyclicSubgroup(generator=g, members=frozenset(members))

    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(n)
            for b in range(a + 1, n)
        )


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: int
    members: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.members)


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with table[i][j] = (i + j) mod n."""
    if n < 1:
        raise ValueError("group order must be positive")
    return FiniteGroup(
        tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    )


def dihedral_group(k: int) -> FiniteGroup:
    """Dihedral group of order 2k (k rotations, k reflections).

    Element f*k + i stands for r^i s^f, so index 0 is the identity.
    """
    if k < 1:
        raise ValueError("dihedral parameter must be positive")
    n = 2 * k

    def mul(a, b):
        i1, f1 = a % k, a // k
        i2, f2 = b % k, b // k
        i = (i1 + i2) % k if f1 == 0 else (i1 - i2) % k
        return (f1 ^ f2) * k + i

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(n)) for a in range(n)))


_Q8_UNIT_MUL = {
    # (u1, u2) -> (sign, unit) for units 0=1, 1=i, 2=j, 3=k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_group() -> FiniteGroup:
    """Q8 = {±1, ±i, ±j, ±k}; element 2u + s is (-1)^s times unit u."""

    def mul(a, b):
        u1, s1 = a // 2, a % 2
        u2, s2 = b // 2, b % 2
        sign, unit = _Q8_UNIT_MUL[(u1, u2)]
        s = (s1 + s2 + (sign < 0)) % 2
        return unit * 2 + s

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(8)) for a in range(8)))


def heisenberg_group(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p; order p^3, exponent p
    for odd p."""
    if not is_prime(p):
        raise GroupSpecError(f"Heisenberg parameter must be prime, got {p}")
    n = p * p * p

    def unpack(x):
        return x // (p * p), (x // p) % p, x % p

    def mul(x, y):
        a1, b1, c1 = unpack(x)
        a2, b2, c2 = unpack(y)
        return ((a1 + a2) % p) * p * p + ((b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(n)) for a in range(n)))


def elementary_abelian_group(p: int, k: int) -> FiniteGroup:
    """Z_p^k."""
    if not is_prime(p):
        raise GroupSpecError(f"ElemAb prime parameter must be prime, got {p}")
    if k < 1:
        raise GroupSpecError("ElemAb exponent must be at least 1")
    G = cyclic_group(p)
    for _ in range(k - 1):
        G = direct_product(G, cyclic_group(p))
    return G


def direct_product(
    G: FiniteGroup, H: FiniteGroup, max_order: int = MAX_GROUP_ORDER
) -> FiniteGroup:
    """Direct product with row-major element indexing (g, h) -> g*|H| + h."""
    n, m = G.order, H.order
    if n * m > max_order:
        raise GroupSpecError(
            f"product order {n * m} exceeds the configured maximum {max_order}"
        )
    table = tuple(
        tuple(
            G.table[a // m][b // m] * m + H.table[a % m][b % m]
            for b in range(n * m)
        )
        for a in range(n * m)
    )
    return FiniteGroup(table)


def _relabel_table(table, perm):
    n = len(table)
    new = [[0] * n for _ in range(n)]
    inv = [0] * n
    for old, newi in enumerate(perm):
        inv[newi] = old
    for i in range(n):
        for j in range(n):
            new[i][j] = perm[table[inv[i]][inv[j]]]
    return tuple(tuple(row) for row in new)


def group_from_cayley_table(table) -> FiniteGroup:
    """Validate an arbitrary table and return a FiniteGroup with the
    identity relabeled to index 0.

    Raises CayleyTableError naming the failed axiom and a witness.
    """
    table = tuple(tuple(row) for row in table)
    n = len(table)
    if n == 0:
        raise CayleyTableError("empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise CayleyTableError(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not (0 <= x < n):
                raise CayleyTableError(
                    f"closure fails: entry table[{i}][{j}] = {x} is outside [0, {n})"
                )
    for i in range(n):
        if len(set(table[i])) != n:
            raise CayleyTableError(f"row {i} is not a permutation")
        if len({table[j][i] for j in range(n)}) != n:
            raise CayleyTableError(f"column {i} is not a permutation")
    identity = None
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(
            table[i][e] == i for i in range(n)
        ):
            identity = e
            break
    if identity is None:
        raise CayleyTableError("identity fails: no two-sided identity element")
    for i in range(n):
        if not any(
            table[i][j] == identity and table[j][i] == identity for j in range(n)
        ):
            raise CayleyTableError(f"inverse fails: element {i} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise CayleyTableError(
                        f"associativity fails at triple ({a}, {b}, {c})"
                    )
    if identity != 0:
        perm = list(range(n))
        perm[identity], perm[0] = 0, identity
        table = _relabel_table(table, perm)
    return FiniteGroup(table)


def load_cayley_file(path) -> FiniteGroup:
    """Cayley-table file: line 1 is n, then n lines of n entries."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise CayleyTableError(f"{path}: empty file")
    try:
        n = int(lines[0])
    except ValueError:
        raise CayleyTableError(f"{path}: bad order line {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise CayleyTableError(f"{path}: expected {n} table rows, got {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        try:
            row = [int(t) for t in ln.split()]
        except ValueError:
            raise CayleyTableError(f"{path}: bad table row {ln!r}") from None
        if len(row) != n:
            raise CayleyTableError(f"{path}: row has {len(row)} entries, expected {n}")
        table.append(row)
    return group_from_cayley_table(table)


_TERM_RE = re.compile(
    r"Z(?P<zn>\d+)|D(?P<dk>\d+)|Q8|Heis(?P<hp>\d+)|ElemAb\((?P<ep>\d+),(?P<ek>\d+)\)"
)


def parse_group_spec(text: str, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Build the group described by a spec string.

    Grammar: SPEC := TERM ("x" TERM)* with TERM one of Zk, Dk (order 2k),
    Q8, Heisp, ElemAb(p,k), file:PATH.  A file: term swallows the rest of
    the string (paths may contain "x"), so it must come last.
    """
    text = text.strip()
    if not text:
        raise GroupSpecError("empty group spec", 0)
    factors = []
    pos = 0
    while True:
        if text.startswith("file:", pos):
            path = text[pos + 5 :]
            if not path:
                raise GroupSpecError("file: term with empty path", pos)
            factors.append(load_cayley_file(path))
            pos = len(text)
        else:
            m = _TERM_RE.match(text, pos)
            if m is None:
                raise GroupSpecError(f"cannot parse term in {text!r}", pos)
            factors.append(_build_term(m, pos))
            pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "x":
            raise GroupSpecError(f"expected 'x' separator in {text!r}", pos)
        pos += 1
        if pos == len(text):
            raise GroupSpecError("trailing 'x' in group spec", pos)
    G = factors[0]
    for H in factors[1:]:
        G = direct_product(G, H, max_order=max_order)
    if G.order > max_order:
        raise GroupSpecError(f"group order {G.order} exceeds maximum {max_order}")
    return G


def _build_term(m: re.Match, pos: int) -> FiniteGroup:
    if m.group("zn") is not None:
        n = int(m.group("zn"))
        if n < 1:
            raise GroupSpecError("Z parameter must be at least 1", pos)
        return cyclic_group(n)
    if m.group("dk") is not None:
        k = int(m.group("dk"))
        if k < 1:
            raise GroupSpecError("D parameter must be at least 1", pos)
        return dihedral_group(k)
    if m.group("hp") is not None:
        return heisenberg_group(int(m.group("hp")))
    if m.group("ep") is not None:
        return elementary_abelian_group(int(m.group("ep")), int(m.group("ek")))
    return quaternion_group()


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[CyclicSubgroup]:
    """All maximal cyclic subgroups, one per member set, smallest-index
    generator as representative.  For cyclic G this is G itself."""
    subs: dict[frozenset[int], int] = {}
    for g in range(G.order):
        members = G.cyclic_subgroup(g).members
        subs.setdefault(members, g)  # g ascends, so first hit is smallest
    full = frozenset(range(G.order))
    if full in subs:
        return [CyclicSubgroup(generator=subs[full], members=full)]
    member_sets = list(subs)
    maximal = [
        s for s in member_sets if not any(s < t for t in member_sets if t is not s)
    ]
    maximal.sort(key=lambda s: subs[s])
    return [CyclicSubgroup(generator=subs[s], members=s) for s in maximal]


def ccg_ground_truth(G: FiniteGroup) -> set[int]:
    """One generator per covering cycle (smallest index); the reference
    CCG-set the detection algorithms are checked against."""
    return {sub.generator for sub in maximal_cyclic_subgroups(G)}


def is_nilpotent(G: FiniteGroup) -> bool:
    """True iff for every prime p | |G| the p-power-order elements are
    closed under the product (all Sylow subgroups normal)."""
    orders = G.element_orders
    for p, _ in prime_factorization(G.order):
        sylow = [g for g in range(G.order) if _is_power_of(orders[g], p)]
        members = set(sylow)
        for a in sylow:
            row = G.table[a]
            if any(row[b] not in members for b in sylow):
                return False
    return True


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
