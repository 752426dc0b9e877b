from __future__ import annotations

import io
import json

import pytest

import oracle
from edgeapex.dot import parse_dot
from edgeapex.enumeration import enumerate_order, level_from_graphs
from edgeapex.graph import (
    canonical_relabel,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edges,
    is_isomorphic,
    path_graph,
)
from edgeapex.graph6 import decode_graph6, encode_graph6
from edgeapex.hereditary import COGRAPH, Excluding
from edgeapex.search import (
    ObstructionReport,
    ReportFormatError,
    classify_obstruction,
    find_obstructions,
    load_catalog,
    parse_report,
    read_report,
    verify_report,
    write_report,
)


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


@pytest.fixture(scope="module")
def fresh():
    return find_obstructions(COGRAPH, range(5, 9))


def net():
    return from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def test_catalog_shape(catalog):
    assert catalog.totals == {5: 2, 6: 18, 7: 9, 8: 3}
    assert catalog.total == 32
    for g in catalog.all_graphs():
        assert g == canonical_relabel(g)
        assert COGRAPH.is_minimal_apex_obstruction(g)


def test_order_5_is_c5_and_chorded_c5(catalog):
    c5 = cycle_graph(5)
    want = [c5, c5.add_edge(0, 2)]
    assert oracle.same_up_to_iso(
        [oracle.to_nx(5, g.edges()) for g in catalog.per_order[5]],
        [oracle.to_nx(5, g.edges()) for g in want],
    )


def test_net_is_listed(catalog):
    assert any(is_isomorphic(net(), g) for g in catalog.per_order[6])


def test_fresh_search_matches_catalog(fresh, catalog):
    assert fresh.to_text() == catalog.to_text()
    assert verify_report(fresh, catalog).ok


def test_catalog_against_independent_oracle(catalog):
    # atlas graphs classified by a subset-scan checker that shares no code
    for n in (5, 6, 7):
        found = [h for h in oracle.atlas(n) if oracle.apex_obstruction(n, oracle.edge_set(h))]
        ours = [oracle.to_nx(n, g.edges()) for g in catalog.per_order[n]]
        assert oracle.same_up_to_iso(found, ours), n


def test_small_orders_are_empty():
    report = find_obstructions(COGRAPH, range(1, 5))
    assert report.totals == {1: 0, 2: 0, 3: 0, 4: 0}


def test_classify_examples():
    flags = classify_obstruction(disjoint_union(path_graph(4), path_graph(4)))
    assert flags.g_disconnected and flags.has_two_vertex_disjoint_p4s
    c5 = classify_obstruction(cycle_graph(5))
    assert not c5.g_disconnected and not c5.complement_disconnected and c5.p4_count == 5
    chord = classify_obstruction(cycle_graph(5).add_edge(0, 2))
    assert not chord.g_disconnected and chord.p4_count == 2
    k4 = classify_obstruction(complete_graph(4))
    assert k4.p4_count == 0 and not k4.has_two_edge_disjoint_p4s


def test_verify_differences(catalog):
    trimmed = {n: list(gs) for n, gs in catalog.per_order.items()}
    dropped = trimmed[6].pop(3)
    result = verify_report(catalog, trimmed)
    assert not result.ok
    assert result.missing[6] == [encode_graph6(dropped)]
    assert not any(result.extra_expected.values())
    padded = dict(catalog.per_order)
    padded[4] = (complete_graph(4),)
    result = verify_report(catalog, padded)
    assert result.extra_expected[4] == [encode_graph6(complete_graph(4))]
    assert not any(result.missing.values())
    assert result.describe() == "extra-expected order 4: C~"


def test_verify_is_up_to_isomorphism(catalog):
    shuffled = {n: [g.relabel(list(reversed(range(n)))) for g in gs]
                for n, gs in catalog.per_order.items()}
    assert verify_report(catalog, shuffled).ok


def test_report_text_round_trip(catalog, tmp_path):
    text = catalog.to_text()
    assert text.startswith("order 5: 2\n")
    again = parse_report("# comment\n" + text)
    assert again.to_text() == text
    path = tmp_path / "r.txt"
    path.write_text(text)
    assert read_report(path).to_text() == text


def test_report_parse_errors():
    with pytest.raises(ReportFormatError):
        parse_report("DLo\n")
    with pytest.raises(ReportFormatError):
        parse_report("order 5: 2\nDLo\n")
    with pytest.raises(ReportFormatError):
        parse_report("order 5: 1\nCh\n")
    with pytest.raises(ReportFormatError):
        parse_report("order five: 1\n")
    with pytest.raises(ReportFormatError):
        parse_report("order 5: 0\norder 5: 0\n")
    with pytest.raises(Exception) as err:
        parse_report("order 5: 1\nD!!\n")
    assert "line 2" in str(err.value)


def test_other_serializations(catalog):
    doc = json.loads(catalog.to_json())
    assert doc["class"] == "cograph"
    assert [doc["orders"][k]["count"] for k in ("5", "6", "7", "8")] == [2, 18, 9, 3]
    first = doc["orders"]["5"]["graphs"][0]
    assert first["graph6"] == "DLo" and first["flags"]["p4_count"] == 5
    dots = parse_dot(catalog.to_dot())
    assert dots == catalog.all_graphs()
    assert catalog.summary().splitlines()[-1] == "total: 32"
    for fmt in ("report", "json", "dot", "graph6", "summary"):
        buf = io.StringIO()
        write_report(catalog, buf, fmt)
        assert buf.getvalue()
    buf = io.StringIO()
    write_report(catalog, buf, "graph6")
    assert [decode_graph6(s) for s in buf.getvalue().split()] == catalog.all_graphs()
    with pytest.raises(ValueError):
        write_report(catalog, buf, "xml")


def test_external_levels_are_used_and_canonicalized():
    reps = [g.relabel(list(reversed(range(6)))) for g in enumerate_order(6)]
    level = level_from_graphs(reps, source="test")
    report = find_obstructions(COGRAPH, [6], levels={6: level})
    assert report.provenance[6].source == "test"
    assert report.provenance[6].candidates == 156
    assert report.to_text() == load_catalog().to_text().split("order 7")[0].replace(
        "order 5: 2\nDLo\nDLs\n", ""
    )


def test_parallel_filter_is_deterministic():
    one = find_obstructions(COGRAPH, [7, 8], workers=1)
    two = find_obstructions(COGRAPH, [7, 8], workers=2)
    assert one.to_text() == two.to_text()


def test_cluster_class_obstructions():
    # apex obstructions for P3-free graphs, orders 1..7
    cls = Excluding([path_graph(3)])
    report = find_obstructions(cls, range(1, 8))
    nonempty = [n for n, c in report.totals.items() if c]
    assert max(nonempty) <= 6
    for g in report.all_graphs():
        assert oracle.to_nx(g.n, g.edges()) is not None
        assert not cls.apex(g)
        assert all(cls.apex(g.delete_vertex(v)) for v in range(g.n))
    assert isinstance(report, ObstructionReport)
