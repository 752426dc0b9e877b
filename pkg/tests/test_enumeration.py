from __future__ import annotations

import logging

import networkx as nx
import pytest

import oracle
from edgeapex import enumeration
from edgeapex.enumeration import (
    EnumerationError,
    MixedOrderError,
    clear_memo,
    count_graphs_burnside,
    enumerate_order,
    level_from_graphs,
    load_level_from_g6,
    save_level,
)
from edgeapex.graph import canonical_form, canonical_relabel, from_edges, path_graph, sort_key
from edgeapex.graph6 import encode_graph6


def test_burnside_examples():
    assert count_graphs_burnside(1) == 1
    assert count_graphs_burnside(3) == 4
    assert count_graphs_burnside(5) == 34
    with pytest.raises(ValueError):
        count_graphs_burnside(0)
    with pytest.raises(ValueError):
        count_graphs_burnside(13)


def test_burnside_matches_labeled_brute_force():
    for n in range(1, 6):
        assert count_graphs_burnside(n) == oracle.labeled_iso_classes(n)


def test_burnside_matches_networkx_atlas():
    for n in range(1, 8):
        assert count_graphs_burnside(n) == len(oracle.atlas(n))


def test_enumerate_examples():
    assert len(enumerate_order(1)) == 1
    assert len(enumerate_order(4)) == 11
    assert len(enumerate_order(8)) == 12346
    with pytest.raises(EnumerationError):
        enumerate_order(0)


def test_levels_are_canonical_sorted_and_distinct():
    for n in range(1, 9):
        reps = enumerate_order(n).reps
        assert len(reps) == count_graphs_burnside(n)
        keys = [sort_key(g) for g in reps]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert all(canonical_relabel(g) == g for g in reps)


def test_levels_match_networkx_atlas_up_to_isomorphism():
    for n in range(1, 8):
        ours = {canonical_form(g) for g in enumerate_order(n)}
        ref = set()
        for h in oracle.atlas(n):
            ref.add(canonical_form(from_edges(n, oracle.edge_set(h))))
        assert ours == ref


def test_downward_closure():
    for n in range(2, 8):
        below = {canonical_form(g) for g in enumerate_order(n - 1)}
        for g in enumerate_order(n):
            for v in range(n):
                assert canonical_form(g.delete_vertex(v)) in below


def test_deterministic_across_rebuilds():
    first = [encode_graph6(g) for g in enumerate_order(7)]
    clear_memo()
    assert [encode_graph6(g) for g in enumerate_order(7)] == first


def test_cache_round_trip(tmp_path):
    clear_memo()
    level = enumerate_order(6, cache_dir=tmp_path)
    assert (tmp_path / "n6.g6").exists() and (tmp_path / "n1.g6").exists()
    clear_memo()
    again = enumerate_order(6, cache_dir=tmp_path)
    assert again.source.startswith("cache:")
    assert again.reps == level.reps


def test_corrupt_cache_is_ignored(tmp_path, caplog):
    clear_memo()
    (tmp_path / "n5.g6").write_text("Ch\n")
    with caplog.at_level(logging.WARNING):
        level = enumerate_order(5, cache_dir=tmp_path)
    assert len(level) == 34 and level.source == "internal"
    assert "ignoring level cache" in caplog.text
    clear_memo()
    reps = list(enumerate_order(5).reps)
    (tmp_path / "n5.g6").write_text("".join(encode_graph6(g) + "\n" for g in reversed(reps)))
    clear_memo()
    assert enumerate_order(5, cache_dir=tmp_path).source == "internal"


def test_save_level_writes_graph6(tmp_path):
    path = save_level(enumerate_order(3), tmp_path)
    assert path.read_text().split() == [encode_graph6(g) for g in enumerate_order(3)]


def test_load_external_level(tmp_path):
    atlas6 = tmp_path / "six.g6"
    with open(atlas6, "wb") as fh:
        for h in oracle.atlas(6):
            fh.write(nx.to_graph6_bytes(h, header=False))
    level = load_level_from_g6(atlas6)
    assert len(level) == 156
    assert not level.had_duplicates
    assert level.source == f"file:{atlas6}"
    assert level.reps == enumerate_order(6).reps


def test_load_duplicates_and_mixed_orders(tmp_path):
    dup = tmp_path / "dup.g6"
    dup.write_text("Ch\n" + encode_graph6(path_graph(4).relabel([2, 0, 3, 1])) + "\n")
    level = load_level_from_g6(dup)
    assert len(level) == 1 and level.had_duplicates
    assert level.reps[0] == canonical_relabel(path_graph(4))
    mixed = tmp_path / "mixed.g6"
    mixed.write_text("Ch\nDLo\n")
    with pytest.raises(MixedOrderError):
        load_level_from_g6(mixed)
    with pytest.raises(EnumerationError):
        level_from_graphs([])


def test_parallel_build_matches_serial():
    clear_memo()
    serial = enumerate_order(7).reps
    clear_memo()
    parallel = enumerate_order(7, workers=2).reps
    assert parallel == serial


def test_soft_cap_warning(monkeypatch, caplog):
    monkeypatch.setattr(enumeration, "SOFT_MAX_ORDER", 5)
    clear_memo()
    with caplog.at_level(logging.WARNING):
        assert len(enumerate_order(6)) == 156
    assert "very long time" in caplog.text
    clear_memo()
