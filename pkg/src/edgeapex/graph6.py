"""graph6 reading and writing (short order form only, n <= 31).

Format reference: the nauty ``formats.txt`` document.  A string is one
character ``chr(63 + n)`` followed by the upper triangle x(0,1), x(0,2),
x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each group offset
by 63.  The optional ``>>graph6<<`` header is accepted on input and never
written.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .graph import MAX_ORDER, SmallGraph

HEADER = ">>graph6<<"
# str.strip() would also eat ASCII control codes such as chr(30)
_BLANK = " \t\r\n"


class Graph6Error(ValueError):
    """A graph6 string could not be decoded.

    ``line`` is the 1-based line number when the error came from a stream.
    """

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")

    def at_line(self, line: int) -> Graph6Error:
        return type(self)(self.message, line)


class MalformedCharacterError(Graph6Error):
    pass


class TruncationError(Graph6Error):
    pass


class PaddingError(Graph6Error):
    pass


class UnsupportedOrderError(Graph6Error):
    pass


class UnsupportedFormatError(Graph6Error):
    pass


def encoded_length(n: int) -> int:
    return 1 + (n * (n - 1) // 2 + 5) // 6


def encode_graph6(g: SmallGraph) -> str:
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        r = adj[j]
        for i in range(j):
            acc = (acc << 1) | (r >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(s: str) -> SmallGraph:
    s = s.strip(_BLANK)
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise TruncationError("empty graph6 string")
    if s[0] == ":" or s[0] == ";":
        raise UnsupportedFormatError("sparse6 input is not supported")
    if s[0] == "&":
        raise UnsupportedFormatError("digraph6 input is not supported")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedCharacterError(
                f"character {ch!r} (code {ord(ch)}) at offset {pos} is outside '?'..'~'"
            )
    if s[0] == "~":
        raise UnsupportedOrderError(f"multi-byte orders are not supported (max {MAX_ORDER})")
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_ORDER:
        raise UnsupportedOrderError(f"order {n} is outside 1..{MAX_ORDER}")
    need = encoded_length(n)
    if len(s) < need:
        raise TruncationError(f"order {n} needs {need} characters, got {len(s)}")
    if len(s) > need:
        raise Graph6Error(f"{len(s) - need} trailing characters after the graph")
    total = n * (n - 1) // 2
    value = 0
    for ch in s[1:]:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * (need - 1) - total
    if value & ((1 << pad) - 1):
        raise PaddingError("padding bits after the triangle are not zero")
    value >>= pad
    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return SmallGraph._unchecked(n, tuple(adj))


@dataclass
class StreamResult:
    graphs: list[SmallGraph] = field(default_factory=list)
    errors: list[Graph6Error] = field(default_factory=list)


def iter_g6(lines: Iterable[str]) -> Iterator[SmallGraph]:
    """Decode one graph per non-blank line, raising on the first bad line."""
    for lineno, line in enumerate(lines, start=1):
        text = line.strip(_BLANK)
        if not text or text == HEADER:
            continue
        try:
            yield decode_graph6(text)
        except Graph6Error as exc:
            raise exc.at_line(lineno) from None


def read_g6_stream(source: IO[str] | Iterable[str], lenient: bool = False) -> StreamResult:
    """Read a graph6 stream.

    With ``lenient`` set, bad lines are collected in ``errors`` instead of
    aborting the read.
    """
    if not lenient:
        return StreamResult(graphs=list(iter_g6(source)))
    result = StreamResult()
    for lineno, line in enumerate(source, start=1):
        text = line.strip(_BLANK)
        if not text or text == HEADER:
            continue
        try:
            result.graphs.append(decode_graph6(text))
        except Graph6Error as exc:
            result.errors.append(exc.at_line(lineno))
    return result


def read_g6_file(path, lenient: bool = False) -> StreamResult:
    with open(path, encoding="latin-1") as fh:
        return read_g6_stream(fh, lenient=lenient)


def write_g6_stream(graphs: Iterable[SmallGraph], sink: IO[str]) -> int:
    count = 0
    for g in graphs:
        sink.write(encode_graph6(g))
        sink.write("\n")
        count += 1
    return count


def dumps(graphs: Iterable[SmallGraph]) -> str:
    buf = io.StringIO()
    write_g6_stream(graphs, buf)
    return buf.getvalue()
