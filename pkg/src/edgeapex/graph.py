"""Small simple graphs stored as per-vertex neighborhood bitmasks.

A :class:`SmallGraph` is an immutable value on ``1..31`` vertices.  Vertex
sets are plain ``int`` bitmasks over vertex indices (bit ``v`` set means
vertex ``v`` is in the set); helpers :func:`bits` and :func:`mask_of`
convert between masks and vertex lists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels

MAX_ORDER = 31

VertexSet = int


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class InvalidOrderError(GraphError):
    pass


class PreconditionError(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class SmallGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise InvalidOrderError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} neighborhoods, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if a >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(a):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}->{u} is not symmetric")

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> SmallGraph:
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __repr__(self) -> str:
        return f"SmallGraph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return _make_graph, (self.n, self.adj)

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise PreconditionError(f"loop requested at vertex {u}")
        for x in (u, v):
            if not 0 <= x < self.n:
                raise PreconditionError(f"vertex {x} out of range for order {self.n}")

    def add_edge(self, u: int, v: int) -> SmallGraph:
        self._check_pair(u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return SmallGraph._unchecked(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> SmallGraph:
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise PreconditionError(f"{u}{v} is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SmallGraph._unchecked(self.n, tuple(adj))

    def delete_vertex(self, v: int) -> SmallGraph:
        """Remove ``v``; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex {v} out of range for order {self.n}")
        if self.n == 1:
            raise PreconditionError("cannot delete the only vertex")
        low = (1 << v) - 1
        adj = []
        for u, a in enumerate(self.adj):
            if u != v:
                adj.append((a & low) | ((a >> (v + 1)) << v))
        return SmallGraph._unchecked(self.n - 1, tuple(adj))

    def complement(self) -> SmallGraph:
        full = self.vertex_mask
        return SmallGraph._unchecked(
            self.n, tuple(~a & full & ~(1 << v) for v, a in enumerate(self.adj))
        )

    def induced(self, vertices: VertexSet) -> SmallGraph:
        """Subgraph induced on ``vertices``, renumbered in ascending order."""
        if vertices <= 0:
            raise PreconditionError("induced subgraph needs a non-empty vertex set")
        if vertices & ~self.vertex_mask:
            raise PreconditionError("vertex set is not contained in the graph")
        keep = list(bits(vertices))
        if len(keep) == self.n:
            return self
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v] & vertices):
                row |= 1 << pos[u]
            adj.append(row)
        return SmallGraph._unchecked(len(keep), tuple(adj))

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by their smallest vertex."""
        return components_within(self.adj, self.vertex_mask)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def edge_in_cycle(self, u: int, v: int) -> bool:
        """True iff the edge ``uv`` lies on some cycle."""
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise PreconditionError(f"{u}{v} is not an edge")
        reach = _reach(self.remove_edge(u, v).adj, u, self.vertex_mask)
        return bool(reach >> v & 1)

    def relabel(self, perm: Sequence[int]) -> SmallGraph:
        """Graph in which vertex ``perm[v]`` plays the role of ``v``."""
        if sorted(perm) != list(range(self.n)):
            raise PreconditionError("relabeling must be a permutation of the vertices")
        adj = [0] * self.n
        for v, a in enumerate(self.adj):
            adj[perm[v]] = mask_of(perm[u] for u in bits(a))
        return SmallGraph._unchecked(self.n, tuple(adj))


def _make_graph(n: int, adj: tuple[int, ...]) -> SmallGraph:
    return SmallGraph._unchecked(n, adj)


def _reach(adj: Sequence[int], start: int, within: int) -> VertexSet:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components_within(adj: Sequence[int], within: VertexSet) -> list[VertexSet]:
    """Components of the subgraph induced on the mask ``within``."""
    comps = []
    left = within
    while left:
        c = _reach(adj, (left & -left).bit_length() - 1, within)
        comps.append(c)
        left &= ~c
    return comps


# -- constructors -----------------------------------------------------------

def empty_graph(n: int) -> SmallGraph:
    if not 1 <= n <= MAX_ORDER:
        raise InvalidOrderError(f"order must be in 1..{MAX_ORDER}, got {n}")
    return SmallGraph._unchecked(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
    g = empty_graph(n)
    adj = list(g.adj)
    for u, v in edges:
        g._check_pair(u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SmallGraph._unchecked(n, tuple(adj))


def complete_graph(n: int) -> SmallGraph:
    return empty_graph(n).complement()


def path_graph(n: int) -> SmallGraph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SmallGraph:
    if n < 3:
        raise InvalidOrderError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    shift = g.n
    return SmallGraph(g.n + h.n, g.adj + tuple(a << shift for a in h.adj))


def join(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """Disjoint union plus every edge between the two parts."""
    return disjoint_union(g.complement(), h.complement()).complement()


# -- canonical labeling -----------------------------------------------------

@dataclass(frozen=True, order=True, slots=True)
class CanonicalForm:
    """Least upper-triangle bitstring over all relabelings.

    ``bits`` holds the ``n(n-1)/2`` triangle bits in graph6 column order
    x(0,1), x(0,2), x(1,2), x(0,3), ... with the first bit most significant,
    so integer order on equal ``n`` is lexicographic order on bitstrings.
    """

    n: int
    bits: int

    @property
    def bitstring(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.bits, f"0{width}b") if width else ""


def upper_triangle_bits(g: SmallGraph) -> int:
    """The graph6-ordered triangle of ``g`` as it is labeled now."""
    out = 0
    adj = g.adj
    for j in range(1, g.n):
        r = adj[j]
        for i in range(j):
            out = (out << 1) | (r >> i & 1)
    return out


def canonical_order(g: SmallGraph) -> list[int]:
    """``order[i]`` is the vertex of ``g`` that goes to position ``i``."""
    return [int(v) for v in _kernels.canon_order(np.array(g.adj, dtype=np.int64), g.n)]


def canonical_relabel(g: SmallGraph) -> SmallGraph:
    rows = _kernels.canon_rows(np.array(g.adj, dtype=np.int64), g.n)
    return SmallGraph._unchecked(g.n, tuple(int(r) for r in rows))


def canonical_form(g: SmallGraph) -> CanonicalForm:
    return CanonicalForm(g.n, upper_triangle_bits(canonical_relabel(g)))


def sort_key(g: SmallGraph) -> tuple[int, int]:
    """(edge count, canonical bits) - the order used for every listing."""
    return g.num_edges(), canonical_form(g).bits


def _quick_invariant(g: SmallGraph) -> tuple[int, int, tuple[int, ...]]:
    return g.n, g.num_edges(), tuple(sorted(g.degrees()))


def is_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    if _quick_invariant(g) != _quick_invariant(h):
        return False
    return canonical_form(g) == canonical_form(h)


# -- induced subgraph containment ------------------------------------------

SUBSET_SEARCH_MAX = 5


def _subset_hits(g: SmallGraph, h: SmallGraph) -> Iterator[VertexSet]:
    k = h.n
    target_degs = sorted(h.degrees())
    target = None
    adj = g.adj
    for combo in itertools.combinations(range(g.n), k):
        s = mask_of(combo)
        # degree multiset inside s, before paying for an induced copy
        if sorted([(adj[v] & s).bit_count() for v in combo]) != target_degs:
            continue
        sub = g.induced(s)
        if target is None:
            target = canonical_form(h)
        if canonical_form(sub) == target:
            yield s


def _backtrack_hits(g: SmallGraph, h: SmallGraph) -> Iterator[VertexSet]:
    """Injective maps of ``h`` into ``g`` preserving adjacency and non-adjacency.

    Yields the image set of each embedding; the same set may repeat once per
    automorphism of ``h``.
    """
    k = h.n
    if k > g.n:
        return
    # visit h in BFS order so each new vertex tends to have mapped neighbors
    order: list[int] = []
    placed = 0
    for start in range(k):
        if placed >> start & 1:
            continue
        queue = [start]
        placed |= 1 << start
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in bits(h.adj[x] & ~placed):
                placed |= 1 << y
                queue.append(y)
    hdeg = [h.degree(x) for x in order]
    gdeg = g.degrees()
    full = g.vertex_mask
    # earlier[i][j] tells whether order[j] is adjacent to order[i], j < i
    earlier = [[bool(h.adj[order[i]] >> order[j] & 1) for j in range(i)] for i in range(k)]
    image = [0] * k

    def extend(i: int, used: int) -> Iterator[VertexSet]:
        if i == k:
            yield used
            return
        cand = full & ~used
        for j in range(i):
            gj = image[j]
            if earlier[i][j]:
                cand &= g.adj[gj]
            else:
                cand &= ~g.adj[gj]
        for x in bits(cand):
            if gdeg[x] < hdeg[i]:
                continue
            image[i] = x
            yield from extend(i + 1, used | (1 << x))

    yield from extend(0, 0)


def find_induced(g: SmallGraph, h: SmallGraph) -> VertexSet | None:
    """A vertex set of ``g`` inducing a copy of ``h``, or ``None``."""
    if h.n > g.n:
        return None
    hits = _subset_hits(g, h) if h.n <= SUBSET_SEARCH_MAX else _backtrack_hits(g, h)
    return next(hits, None)


def contains_induced(g: SmallGraph, h: SmallGraph) -> bool:
    return find_induced(g, h) is not None


def count_induced(g: SmallGraph, h: SmallGraph) -> int:
    """Number of vertex subsets of ``g`` inducing a copy of ``h``."""
    if h.n > g.n:
        raise PreconditionError("pattern has more vertices than the host")
    if h.n <= SUBSET_SEARCH_MAX:
        return sum(1 for _ in _subset_hits(g, h))
    return len(set(_backtrack_hits(g, h)))
