from __future__ import annotations

import io
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from edgeapex.enumeration import enumerate_order
from edgeapex.graph import cycle_graph, empty_graph, from_edges, is_isomorphic, path_graph
from edgeapex.graph6 import (
    Graph6Error,
    MalformedCharacterError,
    PaddingError,
    TruncationError,
    UnsupportedFormatError,
    UnsupportedOrderError,
    decode_graph6,
    dumps,
    encode_graph6,
    encoded_length,
    read_g6_file,
    read_g6_stream,
    write_g6_stream,
)


def test_encode_examples():
    assert encode_graph6(empty_graph(1)) == "@"
    assert encode_graph6(path_graph(4)) == "Ch"
    assert encode_graph6(cycle_graph(5)) == "D" + chr(63 + 41) + chr(63 + 36)


def test_against_networkx_codec():
    for n in range(1, 8):
        for g in enumerate_order(n):
            s = encode_graph6(g)
            ref = nx.to_graph6_bytes(oracle.to_nx(n, g.edges()), header=False).decode().strip()
            assert s == ref
            back = nx.from_graph6_bytes(s.encode())
            assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_decode_examples():
    assert is_isomorphic(decode_graph6("Ch"), path_graph(4))
    assert decode_graph6("Ch") == path_graph(4)
    assert decode_graph6("@") == empty_graph(1)
    assert decode_graph6(">>graph6<<Ch\n") == path_graph(4)
    with pytest.raises(MalformedCharacterError):
        decode_graph6("C" + chr(30))


def test_decode_errors():
    with pytest.raises(TruncationError):
        decode_graph6("D")
    with pytest.raises(TruncationError):
        decode_graph6("")
    with pytest.raises(PaddingError):
        decode_graph6("B@")
    with pytest.raises(UnsupportedOrderError):
        decode_graph6("?")
    with pytest.raises(UnsupportedOrderError):
        decode_graph6(chr(63 + 32) + "?" * encoded_length(32))
    with pytest.raises(UnsupportedOrderError):
        decode_graph6("~?@?")
    with pytest.raises(UnsupportedFormatError):
        decode_graph6(":Fa@x^")
    with pytest.raises(UnsupportedFormatError):
        decode_graph6("&C?")
    with pytest.raises(Graph6Error):
        decode_graph6("Ch?")


def test_encoded_length_formula():
    for n in range(1, 32):
        g = empty_graph(n)
        assert len(encode_graph6(g)) == encoded_length(n) == 1 + -(-n * (n - 1) // 12)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 31), st.data())
def test_round_trip_random(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    chosen = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = from_edges(n, [p for p, c in zip(pairs, chosen) if c])
    s = encode_graph6(g)
    assert all(63 <= ord(ch) <= 126 for ch in s)
    assert not s.startswith(">>")
    assert decode_graph6(s) == g
    assert encode_graph6(decode_graph6(s)) == s


def test_stream_examples(tmp_path):
    assert read_g6_stream(["@\n", "\n", "Ch\n"]).graphs == [empty_graph(1), path_graph(4)]
    assert read_g6_stream(io.StringIO("")).graphs == []
    with pytest.raises(Graph6Error) as err:
        read_g6_stream(["Ch\n", "C" + chr(30) + "\n"])
    assert err.value.line == 2
    assert "line 2" in str(err.value)
    lenient = read_g6_stream(["Ch", "C!", "@", "D"], lenient=True)
    assert lenient.graphs == [path_graph(4), empty_graph(1)]
    assert [e.line for e in lenient.errors] == [2, 4]
    path = tmp_path / "g.g6"
    path.write_text(">>graph6<<@\nCh\n")
    assert read_g6_file(path).graphs == [empty_graph(1), path_graph(4)]


def test_writer():
    buf = io.StringIO()
    assert write_g6_stream([empty_graph(1), path_graph(4)], buf) == 2
    assert buf.getvalue() == "@\nCh\n"
    assert dumps([]) == ""
