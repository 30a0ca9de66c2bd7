"""Transitive permutation groups of degree <= 7 as static reference data.

Each group is stored as a generator list; order, primitivity, parity and the
set of element cycle types are computed once by explicit closure (degree <= 7
keeps every group at or below |S_7| = 5040 elements).  A primitive entry other
than the full symmetric group never admits the transposition cycle type
(2, 1, ..., 1); that structural fact is what makes square-divisibility of
field discriminants detectable in a census, and the test suite asserts it
over the whole table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedDegreeError

Perm = tuple[int, ...]


def perm_from_cycles(n: int, cycles: list[tuple[int, ...]]) -> Perm:
    """Permutation of {0..n-1} from 1-based disjoint cycles."""
    img = list(range(n))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            img[v - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def perm_mul(a: Perm, b: Perm) -> Perm:
    """a after b: (a*b)(x) = a(b(x))."""
    return tuple(a[b[i]] for i in range(len(b)))


def cycle_type(perm: Perm) -> tuple[int, ...]:
    """Cycle lengths, descending, including fixed points."""
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def is_even(perm: Perm) -> bool:
    return (len(perm) - len(cycle_type(perm))) % 2 == 0


def closure(gens: list[Perm], cap: int = 6000) -> set[Perm]:
    degree = len(gens[0])
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                prod = perm_mul(h, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise RuntimeError("group closure exceeded cap")
        frontier = nxt
    return seen


def coset_action(group_gens: list[Perm], subgroup_gens: list[Perm]) -> list[Perm]:
    """Action of the group on right cosets of the subgroup, as permutations."""
    G = sorted(closure(group_gens))
    H = closure(subgroup_gens) if subgroup_gens else {tuple(range(len(G[0])))}
    cosets = []
    covered: set[Perm] = set()
    rep_of: dict[Perm, int] = {}
    for g in G:
        if g in covered:
            continue
        idx = len(cosets)
        cosets.append(g)
        for h in H:
            el = perm_mul(h, g)
            covered.add(el)
            rep_of[el] = idx
    out = []
    for gen in group_gens:
        img = tuple(rep_of[perm_mul(cosets[i], gen)] for i in range(len(cosets)))
        out.append(img)
    return out


def is_transitive(gens: list[Perm]) -> bool:
    n = len(gens[0])
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            if g[x] not in seen:
                seen.add(g[x])
                frontier.append(g[x])
    return len(seen) == n


def is_primitive(gens: list[Perm]) -> bool:
    """Block test: the minimal congruence joining (0, b) must be trivial for all b."""
    n = len(gens[0])
    if n == 1:
        return True
    if not is_transitive(gens):
        return False
    for b in range(1, n):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx
                return True
            return False

        union(0, b)
        queue = [(0, b)]
        while queue:
            x, y = queue.pop()
            for g in gens:
                if find(g[x]) != find(g[y]):
                    queue.append((find(g[x]), find(g[y])))
                    union(g[x], g[y])
        size = sum(1 for i in range(n) if find(i) == find(0))
        if size != n:
            return False
    return True


def _gl32_gens() -> list[Perm]:
    """GL(3,2) acting on the 7 nonzero vectors of F_2^3 (vectors as bitmasks 1..7)."""
    def apply(mat, v):
        out = 0
        for row in range(3):
            bit = 0
            for col in range(3):
                bit ^= ((v >> col) & 1) & mat[row][col]
            out |= bit << row
        return out

    cyc = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    trans = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    gens = []
    for mat in (cyc, trans):
        gens.append(tuple(apply(mat, v + 1) - 1 for v in range(7)))
    return gens


def _s3_pair_gens() -> list[Perm]:
    """S3 x S3 on {1..3} + {4..6} (intransitive; used via a coset action)."""
    return [
        perm_from_cycles(6, [(1, 2, 3)]),
        perm_from_cycles(6, [(1, 2)]),
        perm_from_cycles(6, [(4, 5, 6)]),
        perm_from_cycles(6, [(4, 5)]),
    ]


def _constructions() -> list[tuple[int, str, int, list[Perm]]]:
    pc = perm_from_cycles
    rows: list[tuple[int, str, int, list[Perm]]] = [
        (1, "S1", 1, [pc(1, [])]),
        (2, "S2", 2, [pc(2, [(1, 2)])]),
        (3, "C3", 3, [pc(3, [(1, 2, 3)])]),
        (3, "S3", 6, [pc(3, [(1, 2, 3)]), pc(3, [(1, 2)])]),
        (4, "C4", 4, [pc(4, [(1, 2, 3, 4)])]),
        (4, "V4", 4, [pc(4, [(1, 2), (3, 4)]), pc(4, [(1, 3), (2, 4)])]),
        (4, "D4", 8, [pc(4, [(1, 2, 3, 4)]), pc(4, [(1, 3)])]),
        (4, "A4", 12, [pc(4, [(1, 2, 3)]), pc(4, [(2, 3, 4)])]),
        (4, "S4", 24, [pc(4, [(1, 2, 3, 4)]), pc(4, [(1, 2)])]),
        (5, "C5", 5, [pc(5, [(1, 2, 3, 4, 5)])]),
        (5, "D5", 10, [pc(5, [(1, 2, 3, 4, 5)]), pc(5, [(2, 5), (3, 4)])]),
        (5, "F20", 20, [pc(5, [(1, 2, 3, 4, 5)]), pc(5, [(1, 2, 4, 3)])]),
        (5, "A5", 60, [pc(5, [(1, 2, 3)]), pc(5, [(1, 2, 3, 4, 5)])]),
        (5, "S5", 120, [pc(5, [(1, 2)]), pc(5, [(1, 2, 3, 4, 5)])]),
        (6, "C6", 6, [pc(6, [(1, 2, 3, 4, 5, 6)])]),
        (6, "S3(6)", 6, coset_action([pc(3, [(1, 2, 3)]), pc(3, [(1, 2)])], [])),
        (6, "D6", 12, [pc(6, [(1, 2, 3, 4, 5, 6)]), pc(6, [(1, 6), (2, 5), (3, 4)])]),
        (6, "A4(6)", 12, coset_action(
            [pc(4, [(1, 2, 3)]), pc(4, [(1, 2), (3, 4)])],
            [pc(4, [(1, 2), (3, 4)])])),
        (6, "F18", 18, [pc(6, [(1, 2, 3)]), pc(6, [(4, 5, 6)]),
                        pc(6, [(1, 4), (2, 5), (3, 6)])]),
        (6, "C2wrC3", 24, [pc(6, [(1, 4)]), pc(6, [(1, 2, 3), (4, 5, 6)])]),
        (6, "S4(6d)", 24, coset_action(
            [pc(4, [(1, 2, 3, 4)]), pc(4, [(1, 2)])],
            [pc(4, [(1, 2, 3, 4)])])),
        (6, "S4(6c)", 24, coset_action(
            [pc(4, [(1, 2, 3, 4)]), pc(4, [(1, 2)])],
            [pc(4, [(1, 2)]), pc(4, [(3, 4)])])),
        (6, "S3xS3", 36, coset_action(
            _s3_pair_gens(),
            [perm_from_cycles(6, [(1, 2, 3), (4, 5, 6)]),
             perm_from_cycles(6, [(1, 2), (4, 5)])])),
        (6, "F36", 36, [pc(6, [(1, 2, 3)]), pc(6, [(4, 5, 6)]),
                        pc(6, [(1, 4), (2, 5, 3, 6)])]),
        (6, "C2wrS3", 48, [pc(6, [(1, 4)]), pc(6, [(1, 2, 3), (4, 5, 6)]),
                           pc(6, [(1, 2), (4, 5)])]),
        (6, "PSL(2,5)", 60, [pc(6, [(1, 2, 3, 4, 5)]), pc(6, [(1, 6), (2, 5)])]),
        (6, "S3wr2", 72, _s3_pair_gens() + [pc(6, [(1, 4), (2, 5), (3, 6)])]),
        (6, "PGL(2,5)", 120, [pc(6, [(1, 2, 3, 4, 5)]), pc(6, [(2, 3, 5, 4)]),
                              pc(6, [(1, 6), (2, 5)])]),
        (6, "A6", 360, [pc(6, [(1, 2, 3)]), pc(6, [(2, 3, 4, 5, 6)])]),
        (6, "S6", 720, [pc(6, [(1, 2)]), pc(6, [(1, 2, 3, 4, 5, 6)])]),
        (7, "C7", 7, [pc(7, [(1, 2, 3, 4, 5, 6, 7)])]),
        (7, "D7", 14, [pc(7, [(1, 2, 3, 4, 5, 6, 7)]), pc(7, [(2, 7), (3, 6), (4, 5)])]),
        (7, "F21", 21, [pc(7, [(1, 2, 3, 4, 5, 6, 7)]), pc(7, [(1, 2, 4), (3, 6, 5)])]),
        (7, "F42", 42, [pc(7, [(1, 2, 3, 4, 5, 6, 7)]), pc(7, [(1, 3, 2, 6, 4, 5)])]),
        (7, "PSL(3,2)", 168, _gl32_gens()),
        (7, "A7", 2520, [pc(7, [(1, 2, 3)]), pc(7, [(3, 4, 5, 6, 7)])]),
        (7, "S7", 5040, [pc(7, [(1, 2)]), pc(7, [(1, 2, 3, 4, 5, 6, 7)])]),
    ]
    return rows


@dataclass(frozen=True)
class GroupTableEntry:
    """One transitive group of degree n with its census-relevant invariants."""

    degree: int
    name: str
    order: int
    is_transitive: bool
    is_primitive: bool
    contained_in_A_n: bool
    allowed_cycle_types: frozenset[tuple[int, ...]]

    def csv_row(self) -> str:
        types = "|".join("+".join(map(str, t)) for t in sorted(self.allowed_cycle_types))
        return ",".join([
            str(self.degree), self.name, str(self.order),
            "1" if self.is_transitive else "0",
            "1" if self.is_primitive else "0",
            "1" if self.contained_in_A_n else "0",
            types,
        ])


GROUP_CSV_HEADER = "degree,name,order,transitive,primitive,in_An,cycle_types"


@lru_cache(maxsize=None)
def group_table(n: int) -> tuple[GroupTableEntry, ...]:
    """All transitive groups of degree n (1 <= n <= 7), smallest order first."""
    if not 1 <= n <= 7:
        raise UnsupportedDegreeError(f"no group table for degree {n}")
    entries = []
    for degree, name, expected_order, gens in _constructions():
        if degree != n:
            continue
        elements = closure(gens)
        if len(elements) != expected_order:
            raise AssertionError(
                f"{name}: constructed order {len(elements)} != {expected_order}")
        entry = GroupTableEntry(
            degree=n,
            name=name,
            order=len(elements),
            is_transitive=is_transitive(gens),
            is_primitive=is_primitive(gens),
            contained_in_A_n=all(is_even(g) for g in gens),
            allowed_cycle_types=frozenset(cycle_type(g) for g in elements),
        )
        if not entry.is_transitive:
            raise AssertionError(f"{name}: constructed group is not transitive")
        entries.append(entry)
    entries.sort(key=lambda e: (e.order, e.name))
    return tuple(entries)


@lru_cache(maxsize=None)
def table_entry(n: int, name: str) -> GroupTableEntry:
    for entry in group_table(n):
        if entry.name == name:
            return entry
    raise KeyError(f"no degree-{n} group named {name}")


def transposition_type(n: int) -> tuple[int, ...]:
    return (2,) + (1,) * (n - 2)


def n_minus_one_cycle_type(n: int) -> tuple[int, ...]:
    return (n - 1, 1)
