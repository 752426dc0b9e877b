"""Graphviz DOT export, and a reader for the subset that export produces."""

from __future__ import annotations

import re

from .graph import SmallGraph, from_edges
from .graph6 import encode_graph6


class DotFormatError(ValueError):
    pass


def to_dot(g: SmallGraph, name: str | None = None) -> str:
    """Undirected DOT graph labeled with the graph6 string of ``g``."""
    label = encode_graph6(g)
    title = name if name is not None else label
    esc = title.replace("\\", "\\\\").replace('"', '\\"')
    lines = [f'graph "{esc}" {{', f'  label="{esc}";']
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


_HEAD = re.compile(r'(?:strict\s+)?graph\b\s*(?:"(?:[^"\\]|\\.)*"|[A-Za-z_]\w*)?\s*\{', re.S)
_QUOTED = re.compile(r'"(?:[^"\\]|\\.)*"', re.S)
_EDGE = re.compile(r"^(\d+)\s*--\s*(\d+)$")
_NODE = re.compile(r"^(\d+)(?:\s*\[.*\])?$")


def _bodies(text: str) -> list[str]:
    """Statement blocks of each top-level graph, quoted strings blanked out."""
    out = []
    pos = 0
    while True:
        m = _HEAD.search(text, pos)
        if m is None:
            return out
        body = []
        i = m.end()
        while i < len(text) and text[i] != "}":
            q = _QUOTED.match(text, i)
            if q:
                body.append('""')
                i = q.end()
            else:
                body.append(text[i])
                i += 1
        if i == len(text):
            raise DotFormatError("unterminated DOT graph")
        out.append("".join(body))
        pos = i + 1


def parse_dot(text: str) -> list[SmallGraph]:
    """Read undirected DOT graphs whose nodes are the integers 0..n-1."""
    graphs = []
    for body in _bodies(text):
        nodes: set[int] = set()
        edges: list[tuple[int, int]] = []
        for stmt in re.split(r"[;\n]", body):
            stmt = stmt.strip()
            if not stmt or "=" in stmt and not stmt[0].isdigit():
                continue
            m = _EDGE.match(stmt)
            if m:
                u, v = int(m.group(1)), int(m.group(2))
                edges.append((u, v))
                nodes.update((u, v))
                continue
            m = _NODE.match(stmt)
            if m:
                nodes.add(int(m.group(1)))
                continue
            raise DotFormatError(f"unsupported DOT statement {stmt!r}")
        if not nodes:
            raise DotFormatError("DOT graph without nodes")
        n = max(nodes) + 1
        if len(nodes) != n:
            raise DotFormatError("DOT nodes must be numbered 0..n-1")
        graphs.append(from_edges(n, edges))
    if not graphs:
        raise DotFormatError("no undirected DOT graph found")
    return graphs
