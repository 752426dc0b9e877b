"""Exhaustive search for minimal obstructions of an edge-apex class.

For each order, every graph of the level is tested with
:meth:`ClassSpec.is_minimal_apex_obstruction`: outside the apex class, and
every single-vertex deletion inside it.  Results are sorted by
(edge count, canonical bitstring), so reports are byte-identical however the
work was split among processes.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import IO, Iterable, Mapping, Sequence

from . import cograph
from .enumeration import EnumerationLevel, enumerate_order
from .graph import SmallGraph, canonical_form, canonical_relabel, sort_key
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .hereditary import COGRAPH, ClassSpec

log = logging.getLogger(__name__)

CATALOG_RESOURCE = "edge_apex_cograph_obstructions.txt"


class ReportFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ObstructionFlags:
    g_disconnected: bool
    complement_disconnected: bool
    has_two_vertex_disjoint_p4s: bool
    has_two_edge_disjoint_p4s: bool
    p4_count: int


def classify_obstruction(g: SmallGraph) -> ObstructionFlags:
    """Structural flags of a graph; descriptive only, nothing is enforced."""
    p4s = cograph.p4_witnesses(g)
    vertex_disjoint = edge_disjoint = False
    for p, q in itertools.combinations(p4s, 2):
        if not p.mask & q.mask:
            vertex_disjoint = edge_disjoint = True
            break
        if not set(p.path_edges) & set(q.path_edges):
            edge_disjoint = True
    return ObstructionFlags(
        g_disconnected=not g.is_connected(),
        complement_disconnected=not g.complement().is_connected(),
        has_two_vertex_disjoint_p4s=vertex_disjoint,
        has_two_edge_disjoint_p4s=edge_disjoint,
        p4_count=len(p4s),
    )


def proper_part_has_two_edge_disjoint_p4s(g: SmallGraph) -> bool:
    """Whether some proper induced subgraph holds two edge-disjoint induced P4s.

    An induced P4 of ``g[S]`` is an induced P4 of ``g`` inside ``S``, so this
    asks for two edge-disjoint P4s of ``g`` that miss some vertex together.
    """
    p4s = cograph.p4_witnesses(g)
    full = g.vertex_mask
    for p, q in itertools.combinations(p4s, 2):
        if (p.mask | q.mask) != full and not set(p.path_edges) & set(q.path_edges):
            return True
    return False


def minimal_by_counters(g: SmallGraph, cls: ClassSpec) -> bool:
    """The obstruction test written with explicit edge and vertex counters.

    Counts edges whose deletion stays outside the class and vertices whose
    deletion lands in the apex class; both counts must be full.
    """
    if cls.contains(g):
        return False
    edges = g.edges()
    i = sum(1 for u, v in edges if not cls.contains(g.remove_edge(u, v)))
    if g.n == 1:
        j = 1
    else:
        j = 0
        for v in range(g.n):
            k = g.delete_vertex(v)
            if cls.contains(k) or any(cls.contains(k.remove_edge(a, b)) for a, b in k.edges()):
                j += 1
    return i == len(edges) and j == g.n


@dataclass(frozen=True)
class OrderProvenance:
    source: str
    candidates: int
    seconds: float


@dataclass(frozen=True)
class ObstructionReport:
    """Minimal obstructions per order, each list canonically labeled and sorted."""

    class_label: str
    per_order: Mapping[int, tuple[SmallGraph, ...]]
    provenance: Mapping[int, OrderProvenance] = field(default_factory=dict)

    @property
    def orders(self) -> list[int]:
        return sorted(self.per_order)

    @property
    def totals(self) -> dict[int, int]:
        return {n: len(self.per_order[n]) for n in self.orders}

    @property
    def total(self) -> int:
        return sum(self.totals.values())

    def graph6(self, n: int) -> list[str]:
        return [encode_graph6(g) for g in self.per_order[n]]

    def all_graphs(self) -> list[SmallGraph]:
        return [g for n in self.orders for g in self.per_order[n]]

    def to_text(self) -> str:
        lines = []
        for n in self.orders:
            lines.append(f"order {n}: {len(self.per_order[n])}")
            lines.extend(self.graph6(n))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "class": self.class_label,
            "orders": {
                str(n): {
                    "count": len(self.per_order[n]),
                    "graphs": [
                        {
                            "graph6": encode_graph6(g),
                            "edges": g.num_edges(),
                            "flags": asdict(classify_obstruction(g)),
                        }
                        for g in self.per_order[n]
                    ],
                }
                for n in self.orders
            },
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_dot(self) -> str:
        from .dot import to_dot

        return "".join(to_dot(g) for g in self.all_graphs())

    def summary(self) -> str:
        lines = [f"class: {self.class_label}"]
        for n in self.orders:
            lines.append(f"order {n}: {len(self.per_order[n])}")
        lines.append(f"total: {self.total}")
        return "\n".join(lines) + "\n"


def parse_report(text: str | Iterable[str], class_label: str = "unknown") -> ObstructionReport:
    """Read the plain-text report format: ``order <n>: <count>`` then graph6 lines."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    per_order: dict[int, list[SmallGraph]] = {}
    declared: dict[int, int] = {}
    current = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip(" \t\r\n")
        if not line or line.startswith("#"):
            continue
        if line.startswith("order"):
            try:
                head, count = line[len("order"):].split(":")
                current = int(head)
                declared[current] = int(count)
            except ValueError:
                raise ReportFormatError(f"line {lineno}: bad order header {line!r}") from None
            if current in per_order:
                raise ReportFormatError(f"line {lineno}: order {current} listed twice")
            per_order[current] = []
            continue
        if current is None:
            raise ReportFormatError(f"line {lineno}: graph before any order header")
        try:
            g = decode_graph6(line)
        except Graph6Error as exc:
            raise exc.at_line(lineno) from None
        if g.n != current:
            raise ReportFormatError(f"line {lineno}: graph of order {g.n} under order {current}")
        per_order[current].append(g)
    for n, count in declared.items():
        if len(per_order[n]) != count:
            raise ReportFormatError(
                f"order {n} declares {count} graphs but lists {len(per_order[n])}"
            )
    return ObstructionReport(class_label, {n: tuple(gs) for n, gs in per_order.items()})


def read_report(path: str | os.PathLike) -> ObstructionReport:
    with open(path, encoding="latin-1") as fh:
        return parse_report(fh.read())


def load_catalog() -> ObstructionReport:
    """The shipped catalog of edge-apex cograph obstructions, orders 5 to 8."""
    text = resources.files("edgeapex").joinpath("data", CATALOG_RESOURCE).read_text("ascii")
    return parse_report(text, class_label=COGRAPH.label)


def _filter_chunk(cls: ClassSpec, graphs: Sequence[SmallGraph]) -> list[int]:
    return [i for i, g in enumerate(graphs) if cls.is_minimal_apex_obstruction(g)]


def _filter_level(cls: ClassSpec, reps: Sequence[SmallGraph], workers: int) -> list[SmallGraph]:
    if workers <= 1 or len(reps) < 1000:
        return [reps[i] for i in _filter_chunk(cls, reps)]
    size = -(-len(reps) // (workers * 4))
    starts = list(range(0, len(reps), size))
    chunks = [reps[s:s + size] for s in starts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        hits = list(pool.map(_filter_chunk, [cls] * len(chunks), chunks))
    return [reps[s + i] for s, idx in zip(starts, hits) for i in idx]


def find_obstructions(
    cls: ClassSpec,
    orders: Iterable[int],
    *,
    workers: int = 1,
    levels: Mapping[int, EnumerationLevel] | None = None,
    cache_dir: str | os.PathLike | None = None,
) -> ObstructionReport:
    """Minimal obstructions for the edge-apex class of ``cls`` at each order.

    ``levels`` may supply externally generated graph lists by order; other
    orders are enumerated internally.
    """
    per_order: dict[int, tuple[SmallGraph, ...]] = {}
    provenance: dict[int, OrderProvenance] = {}
    for n in sorted(set(orders)):
        start = time.perf_counter()
        if levels is not None and n in levels:
            level = levels[n]
        else:
            level = enumerate_order(n, cache_dir=cache_dir, workers=workers)
        found = _filter_level(cls, level.reps, workers)
        if level.source != "internal":
            found = [canonical_relabel(g) for g in found]
        per_order[n] = tuple(sorted(found, key=sort_key))
        elapsed = time.perf_counter() - start
        provenance[n] = OrderProvenance(level.source, len(level), elapsed)
        log.info("order %d: %d obstructions among %d graphs (%.2fs)",
                 n, len(per_order[n]), len(level), elapsed)
    return ObstructionReport(cls.label, per_order, provenance)


@dataclass(frozen=True)
class Verification:
    """Per-order differences between a report and an expected listing.

    ``missing`` holds graphs the report found that the expected listing
    lacks; ``extra_expected`` holds expected graphs the report did not find.
    Both are given as canonical graph6 strings.
    """

    missing: dict[int, list[str]]
    extra_expected: dict[int, list[str]]

    @property
    def ok(self) -> bool:
        return not any(self.missing.values()) and not any(self.extra_expected.values())

    def describe(self) -> str:
        lines = []
        for label, table in (("missing", self.missing), ("extra-expected", self.extra_expected)):
            for n in sorted(table):
                for s in table[n]:
                    lines.append(f"{label} order {n}: {s}")
        return "\n".join(lines)


def _canonical_g6(graphs: Iterable[SmallGraph]) -> dict[object, str]:
    return {canonical_form(g): encode_graph6(canonical_relabel(g)) for g in graphs}


def verify_report(
    report: ObstructionReport, expected: Mapping[int, Sequence[SmallGraph]] | ObstructionReport
) -> Verification:
    """Compare per-order graph sets up to isomorphism."""
    if isinstance(expected, ObstructionReport):
        expected = expected.per_order
    missing: dict[int, list[str]] = {}
    extra: dict[int, list[str]] = {}
    for n in sorted(set(report.per_order) | set(expected)):
        got = _canonical_g6(report.per_order.get(n, ()))
        want = _canonical_g6(expected.get(n, ()))
        missing[n] = sorted(got[f] for f in got.keys() - want.keys())
        extra[n] = sorted(want[f] for f in want.keys() - got.keys())
    return Verification(missing, extra)


def write_report(report: ObstructionReport, sink: IO[str], fmt: str = "report") -> None:
    if fmt == "report":
        sink.write(report.to_text())
    elif fmt == "json":
        sink.write(report.to_json())
    elif fmt == "dot":
        sink.write(report.to_dot())
    elif fmt == "graph6":
        for g in report.all_graphs():
            sink.write(encode_graph6(g) + "\n")
    elif fmt == "summary":
        sink.write(report.summary())
    else:
        raise ValueError(f"unknown report format {fmt!r}")


__all__ = [
    "ObstructionFlags",
    "ObstructionReport",
    "OrderProvenance",
    "ReportFormatError",
    "Verification",
    "classify_obstruction",
    "find_obstructions",
    "load_catalog",
    "minimal_by_counters",
    "parse_report",
    "proper_part_has_two_edge_disjoint_p4s",
    "read_report",
    "verify_report",
    "write_report",
]
