"""graph6 encoding and decoding (one graph per line, no header)."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph, GraphError, build_graph

SHORT_MAX = 62
LONG_MAX = 258047
HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n < 0 or n > LONG_MAX:
        raise Graph6Error(f"graph6 cannot encode n={n}")
    if n <= SHORT_MAX:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def _pairs(n: int):
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            yield u, v


def emit_graph6(g: Graph) -> str:
    n = g.vertex_count
    bits = [1 if g.has_edge(u, v) else 0 for u, v in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    if not text:
        raise Graph6Error("empty graph6 line")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range [63, 126]")
    if text[0] != "~":
        n, rest = ord(text[0]) - 63, text[1:]
    elif len(text) >= 2 and text[1] == "~":
        raise Graph6Error("8-byte graph6 size form is not supported (n > 258047)")
    else:
        if len(text) < 4:
            raise Graph6Error("truncated long-form vertex count")
        n = 0
        for ch in text[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        rest = text[4:]
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != expected:
        raise Graph6Error(f"length mismatch: n={n} needs {expected} data bytes, got {len(rest)}")
    bits = []
    for ch in rest:
        v = ord(ch) - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = [pair for pair, bit in zip(_pairs(n), bits) if bit]
    if any(bits[n * (n - 1) // 2 :]):
        raise Graph6Error("nonzero padding bits")
    return build_graph(n, edges)


def read_graph6(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield ``(line number, text)`` for each non-blank line of a graph6 file."""
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if text:
            yield lineno, text
