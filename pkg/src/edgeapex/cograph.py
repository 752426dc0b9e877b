"""Cograph recognition and induced-P4 census.

Two recognizers are provided and kept independent: an induced-P4 scan
(:func:`find_p4`) and the recursive split into components or
co-components (:func:`is_cograph_decomposition`).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .graph import SmallGraph, VertexSet, bits, components_within
from .witness import MEMBER, NOT_IN_APEX, ApexResult, apex_edge


class P4Witness(NamedTuple):
    """Induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd."""

    a: int
    b: int
    c: int
    d: int

    @property
    def mask(self) -> VertexSet:
        return (1 << self.a) | (1 << self.b) | (1 << self.c) | (1 << self.d)

    @property
    def path_edges(self) -> tuple[tuple[int, int], ...]:
        pairs = ((self.a, self.b), (self.b, self.c), (self.c, self.d))
        return tuple(sorted((min(p), max(p)) for p in pairs))

    def normalized(self) -> P4Witness:
        return self if self.a < self.d else P4Witness(self.d, self.c, self.b, self.a)


def _find_p4(adj: Sequence[int], within: int) -> tuple[int, int, int, int] | None:
    # middle edge bc, then a in N(b) - N[c], d in N(c) - N[b] - N(a)
    bs = within
    while bs:
        lb = bs & -bs
        bs ^= lb
        b = lb.bit_length() - 1
        adj_b = adj[b]
        nb = adj_b & within
        cs = nb
        while cs:
            lc = cs & -cs
            cs ^= lc
            c = lc.bit_length() - 1
            adj_c = adj[c]
            side_a = nb & ~adj_c & ~lc
            if not side_a:
                continue
            side_d = adj_c & within & ~adj_b & ~lb
            if not side_d:
                continue
            while side_a:
                la = side_a & -side_a
                side_a ^= la
                a = la.bit_length() - 1
                dd = side_d & ~adj[a]
                if dd:
                    return a, b, c, (dd & -dd).bit_length() - 1
    return None


def find_p4(g: SmallGraph) -> P4Witness | None:
    """First induced P4 in scan order (middle vertex b, then c, a, d ascending)."""
    hit = _find_p4(g.adj, g.vertex_mask)
    return None if hit is None else P4Witness(*hit)


def is_cograph(g: SmallGraph) -> bool:
    return _find_p4(g.adj, g.vertex_mask) is None


def _co_components(adj: Sequence[int], within: int) -> list[VertexSet]:
    comps = []
    left = within
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= within & ~adj[x] & ~(1 << x)
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def _decomposes(adj: Sequence[int], within: int) -> bool:
    if within & (within - 1) == 0:
        return True
    parts = components_within(adj, within)
    if len(parts) == 1:
        parts = _co_components(adj, within)
        if len(parts) == 1:
            return False
    return all(_decomposes(adj, p) for p in parts)


def is_cograph_decomposition(g: SmallGraph) -> bool:
    """Cograph test by recursive splitting into components or co-components."""
    return _decomposes(g.adj, g.vertex_mask)


def p4_witnesses(g: SmallGraph) -> list[P4Witness]:
    """Every induced P4 once, oriented with ``a < d``, sorted by vertex set."""
    adj = g.adj
    found: dict[int, P4Witness] = {}
    for b in range(g.n):
        nb = adj[b]
        for c in bits(nb):
            side_d = adj[c] & ~nb & ~(1 << b)
            for a in bits(nb & ~adj[c] & ~(1 << c)):
                for d in bits(side_d & ~adj[a]):
                    w = P4Witness(a, b, c, d).normalized()
                    found.setdefault(w.mask, w)
    return [found[m] for m in sorted(found, key=lambda m: tuple(bits(m)))]


def all_p4_sets(g: SmallGraph) -> list[VertexSet]:
    return [w.mask for w in p4_witnesses(g)]


def _apex_within(adj: list[int], within: int) -> ApexResult:
    # any edge whose deletion leaves a cograph must lie on every induced P4,
    # so only the three path edges of the first P4 are candidates
    hit = _find_p4(adj, within)
    if hit is None:
        return MEMBER
    for u, v in P4Witness(*hit).path_edges:
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        still = _find_p4(adj, within)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        if still is None:
            return apex_edge(u, v)
    return NOT_IN_APEX


def is_edge_apex_cograph(g: SmallGraph) -> ApexResult:
    """Member, the lexicographically first apex edge, or not in the class."""
    return _apex_within(list(g.adj), g.vertex_mask)


def is_minimal_apex_cograph_obstruction(g: SmallGraph) -> bool:
    adj = list(g.adj)
    full = g.vertex_mask
    if _apex_within(adj, full):
        return False
    if g.n == 1:
        return True
    for v in range(g.n):
        if not _apex_within(adj, full & ~(1 << v)):
            return False
    return True
