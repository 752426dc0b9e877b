"""Hereditary classes given by finite forbidden sets, and their edge-apex classes.

A graph lies in the edge-apex class of a hereditary class ``C`` when it is in
``C`` or deleting a single edge puts it in ``C``.  The apex class is again
hereditary, so a graph is a minimal obstruction for it exactly when it is
outside the apex class and every single-vertex deletion is inside.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator

from . import cograph
from .graph import (
    SmallGraph,
    VertexSet,
    canonical_form,
    canonical_relabel,
    contains_induced,
    find_induced,
    path_graph,
    sort_key,
)
from .graph6 import encode_graph6, read_g6_file
from .witness import MEMBER, NOT_IN_APEX, ApexResult, apex_edge


class ForbiddenSetError(ValueError):
    pass


class ForbiddenSet:
    """Pairwise non-isomorphic, mutually non-containing obstructions.

    Members are stored canonically labeled and sorted by
    (edge count, canonical bitstring).
    """

    def __init__(self, members: Iterable[SmallGraph]):
        graphs = [canonical_relabel(g) for g in members]
        if not graphs:
            raise ForbiddenSetError("a forbidden set needs at least one member")
        seen: dict[object, SmallGraph] = {}
        for g in graphs:
            form = canonical_form(g)
            if form in seen:
                raise ForbiddenSetError(f"duplicate member {encode_graph6(g)}")
            seen[form] = g
        graphs.sort(key=sort_key)
        for small in graphs:
            for big in graphs:
                if small.n < big.n and contains_induced(big, small):
                    raise ForbiddenSetError(
                        f"{encode_graph6(big)} contains member {encode_graph6(small)}; "
                        "the set is not minimal"
                    )
        self.members: tuple[SmallGraph, ...] = tuple(graphs)

    def __iter__(self) -> Iterator[SmallGraph]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"ForbiddenSet([{', '.join(encode_graph6(g) for g in self.members)}])"

    @property
    def c(self) -> int:
        """Largest member order."""
        return max(g.n for g in self.members)

    @property
    def k_max(self) -> int:
        """Largest member edge count."""
        return max(g.num_edges() for g in self.members)

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> ForbiddenSet:
        return cls(read_g6_file(path).graphs)

    def to_file(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="ascii") as fh:
            for g in self.members:
                fh.write(encode_graph6(g) + "\n")


class ClassSpec:
    """A hereditary class; subclasses say how to find an obstruction."""

    label = "class"

    def find_obstruction(self, g: SmallGraph) -> VertexSet | None:
        raise NotImplementedError

    def contains(self, g: SmallGraph) -> bool:
        return self.find_obstruction(g) is None

    def __contains__(self, g: SmallGraph) -> bool:
        return self.contains(g)

    def apex(self, g: SmallGraph) -> ApexResult:
        hit = self.find_obstruction(g)
        if hit is None:
            return MEMBER
        # a qualifying edge has to break this occurrence, so it lies inside it
        for u, v in g.edges():
            if hit >> u & 1 and hit >> v & 1 and self.contains(g.remove_edge(u, v)):
                return apex_edge(u, v)
        return NOT_IN_APEX

    def is_minimal_apex_obstruction(self, g: SmallGraph) -> bool:
        if self.apex(g):
            return False
        if g.n == 1:
            return True
        return all(self.apex(g.delete_vertex(v)) for v in range(g.n))


class Cograph(ClassSpec):
    """Graphs with no induced P4."""

    label = "cograph"

    def find_obstruction(self, g: SmallGraph) -> VertexSet | None:
        hit = cograph.find_p4(g)
        return None if hit is None else hit.mask

    def contains(self, g: SmallGraph) -> bool:
        return cograph.is_cograph(g)

    def apex(self, g: SmallGraph) -> ApexResult:
        return cograph.is_edge_apex_cograph(g)

    def is_minimal_apex_obstruction(self, g: SmallGraph) -> bool:
        return cograph.is_minimal_apex_cograph_obstruction(g)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cograph)

    def __hash__(self) -> int:
        return hash("cograph")

    def __repr__(self) -> str:
        return "Cograph()"


class Excluding(ClassSpec):
    """Graphs containing no member of a forbidden set as an induced subgraph."""

    def __init__(self, forbidden: ForbiddenSet | Iterable[SmallGraph]):
        if not isinstance(forbidden, ForbiddenSet):
            forbidden = ForbiddenSet(forbidden)
        self.forbidden = forbidden

    @property
    def label(self) -> str:
        return "excluding " + ",".join(encode_graph6(g) for g in self.forbidden)

    def find_obstruction(self, g: SmallGraph) -> VertexSet | None:
        for h in self.forbidden:
            hit = find_induced(g, h)
            if hit is not None:
                return hit
        return None

    def __repr__(self) -> str:
        return f"Excluding({self.forbidden!r})"


COGRAPH = Cograph()


def p4_free() -> Excluding:
    """The cograph class spelled out as Excluding({P4})."""
    return Excluding([path_graph(4)])


def in_class(g: SmallGraph, cls: ClassSpec) -> bool:
    return cls.contains(g)


def in_edge_apex(g: SmallGraph, cls: ClassSpec) -> ApexResult:
    return cls.apex(g)


def is_minimal_apex_obstruction(g: SmallGraph, cls: ClassSpec) -> bool:
    return cls.is_minimal_apex_obstruction(g)


def bound_no_overlap(c: int, k: int) -> int:
    """Order bound max(2c, c + k(c - 2)) for apex-class obstructions.

    ``c`` and ``k`` are the largest vertex and edge counts over the base
    class's forbidden set.
    """
    if c < 1 or k < 0:
        raise ValueError("need c >= 1 and k >= 0")
    return max(2 * c, c + k * (c - 2))


def bound_with_overlap(c: int, q: int, k: int) -> int:
    """Order bound c + (c - q) + k(c - 2) for an apex-class obstruction
    holding two base obstructions that share ``q`` vertices and ``k`` edges."""
    if c < 1 or not 0 <= q <= c or k < 0:
        raise ValueError("need c >= 1, 0 <= q <= c and k >= 0")
    return c + (c - q) + k * (c - 2)


__all__ = [
    "COGRAPH",
    "ClassSpec",
    "Cograph",
    "Excluding",
    "ForbiddenSet",
    "ForbiddenSetError",
    "bound_no_overlap",
    "bound_with_overlap",
    "in_class",
    "in_edge_apex",
    "is_minimal_apex_obstruction",
    "p4_free",
]
