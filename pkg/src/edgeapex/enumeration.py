"""Isomorphism-free generation of all graphs of a given order.

Levels are built by vertex augmentation from the previous level: every
representative of order ``n - 1`` receives one new vertex with each
admissible neighborhood, each candidate is canonically relabeled, and
duplicates are dropped by comparing canonical adjacency.  Burnside counting
over the symmetric group gives an independent check on the level sizes.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .graph import MAX_ORDER, SmallGraph, canonical_relabel, upper_triangle_bits
from .graph6 import encode_graph6, read_g6_file

log = logging.getLogger(__name__)

BURNSIDE_MAX = 12
SOFT_MAX_ORDER = 9


class EnumerationError(ValueError):
    pass


class MixedOrderError(EnumerationError):
    pass


@dataclass(frozen=True)
class EnumerationLevel:
    """All graphs of order ``n`` up to isomorphism, canonically labeled.

    ``reps`` is sorted by (edge count, canonical bitstring).
    """

    n: int
    reps: tuple[SmallGraph, ...]
    source: str = "internal"
    had_duplicates: bool = False

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[SmallGraph]:
        return iter(self.reps)


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def count_graphs_burnside(n: int) -> int:
    """Number of isomorphism classes of graphs on ``n`` vertices.

    Averages ``2 ** (number of cycles on vertex pairs)`` over the symmetric
    group, one conjugacy class (cycle type) at a time.
    """
    if not 1 <= n <= BURNSIDE_MAX:
        raise ValueError(f"Burnside count supports 1..{BURNSIDE_MAX}, got {n}")
    fact = math.factorial(n)
    total = 0
    for parts in _partitions(n):
        denom = 1
        for length in set(parts):
            mult = parts.count(length)
            denom *= length**mult * math.factorial(mult)
        pair_cycles = sum(p // 2 for p in parts)
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                pair_cycles += math.gcd(parts[i], parts[j])
        total += (fact // denom) * 2**pair_cycles
    if total % fact:
        raise ArithmeticError("Burnside sum is not divisible by n!")
    return total // fact


def _augment_rows(parents: np.ndarray, n: int) -> np.ndarray:
    chunks = [_kernels.augment(parents[i], n) for i in range(parents.shape[0])]
    if not chunks:
        return np.zeros((0, n), np.int64)
    return np.concatenate(chunks)


def _dedupe_sorted(rows: np.ndarray, n: int) -> list[tuple[int, ...]]:
    rows = np.unique(rows, axis=0)
    edges = np.zeros(rows.shape[0], np.int64)
    for k in range(n):
        r = rows[:, k].copy()
        while r.any():
            edges += r & 1
            r >>= 1
    edges //= 2
    graphs = [tuple(int(x) for x in row) for row in rows]
    if n * (n - 1) // 2 <= 62:
        bitkeys = np.array([_kernels.upper_bits(row, n) for row in rows], np.int64)
        idx = np.lexsort((bitkeys, edges))
        return [graphs[i] for i in idx]
    keyed = [(int(e), upper_triangle_bits(SmallGraph._unchecked(n, g)), g) for e, g in zip(edges, graphs)]
    keyed.sort()
    return [g for _, _, g in keyed]


def _build_level(prev: EnumerationLevel, workers: int = 1) -> EnumerationLevel:
    n = prev.n + 1
    parents = np.array([g.adj for g in prev.reps], dtype=np.int64).reshape(len(prev.reps), n - 1)
    if workers > 1 and len(parents) >= 2 * workers:
        parts = np.array_split(parents, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_augment_rows, parts, [n] * len(parts)))
        rows = np.concatenate(chunks)
    else:
        rows = _augment_rows(parents, n)
    reps = tuple(SmallGraph._unchecked(n, g) for g in _dedupe_sorted(rows, n))
    return EnumerationLevel(n, reps)


_LEVELS: dict[int, EnumerationLevel] = {}


def _cache_path(cache_dir: str | os.PathLike, n: int) -> Path:
    return Path(cache_dir) / f"n{n}.g6"


def _load_cached(path: Path, n: int) -> EnumerationLevel | None:
    try:
        graphs = read_g6_file(path).graphs
    except (OSError, ValueError) as exc:
        log.warning("ignoring level cache %s: %s", path, exc)
        return None
    expected = count_graphs_burnside(n) if n <= BURNSIDE_MAX else None
    if any(g.n != n for g in graphs) or (expected is not None and len(graphs) != expected):
        log.warning("ignoring level cache %s: wrong orders or count", path)
        return None
    keys = [(g.num_edges(), upper_triangle_bits(g)) for g in graphs]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        log.warning("ignoring level cache %s: not in canonical sorted order", path)
        return None
    return EnumerationLevel(n, tuple(graphs), source=f"cache:{path}")


def save_level(level: EnumerationLevel, cache_dir: str | os.PathLike) -> Path:
    path = _cache_path(cache_dir, level.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("".join(encode_graph6(g) + "\n" for g in level.reps), encoding="ascii")
    tmp.replace(path)
    return path


def enumerate_order(
    n: int, cache_dir: str | os.PathLike | None = None, workers: int = 1
) -> EnumerationLevel:
    """All graphs of order ``n``, one canonically labeled representative each.

    Levels are memoized in-process.  With ``cache_dir``, levels are also read
    from and written to ``<cache_dir>/n<order>.g6``; a cached file is used
    only if its size matches the Burnside count and it is canonically sorted.
    """
    if n < 1:
        raise EnumerationError(f"order must be at least 1, got {n}")
    if n > MAX_ORDER:
        raise EnumerationError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if n in _LEVELS:
        return _LEVELS[n]
    level = None
    if cache_dir is not None and _cache_path(cache_dir, n).exists():
        level = _load_cached(_cache_path(cache_dir, n), n)
    if level is None:
        if n == 1:
            level = EnumerationLevel(1, (SmallGraph._unchecked(1, (0,)),))
        else:
            prev = enumerate_order(n - 1, cache_dir=cache_dir, workers=workers)
            if n > SOFT_MAX_ORDER:
                log.warning("enumerating order %d; this may take a very long time", n)
            level = _build_level(prev, workers=workers)
        if cache_dir is not None:
            save_level(level, cache_dir)
    _LEVELS[n] = level
    return level


def clear_memo() -> None:
    _LEVELS.clear()


def level_from_graphs(graphs: Sequence[SmallGraph], source: str = "external") -> EnumerationLevel:
    """Canonicalize, deduplicate and sort an externally supplied graph list."""
    if not graphs:
        raise EnumerationError("no graphs supplied")
    orders = sorted({g.n for g in graphs})
    if len(orders) > 1:
        raise MixedOrderError(f"graphs of several orders supplied: {orders}")
    canon = {canonical_relabel(g) for g in graphs}
    reps = tuple(sorted(canon, key=lambda g: (g.num_edges(), upper_triangle_bits(g))))
    return EnumerationLevel(orders[0], reps, source=source, had_duplicates=len(reps) < len(graphs))


def load_level_from_g6(path: str | os.PathLike) -> EnumerationLevel:
    return level_from_graphs(read_g6_file(path).graphs, source=f"file:{path}")


__all__ = [
    "EnumerationError",
    "EnumerationLevel",
    "MixedOrderError",
    "clear_memo",
    "count_graphs_burnside",
    "enumerate_order",
    "level_from_graphs",
    "load_level_from_g6",
    "save_level",
]
