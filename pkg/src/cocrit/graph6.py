"""graph6 encoding (McKay's format), short and long size headers."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

_MAX_N = 258047


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= _MAX_N:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"n={n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no newline, no ``>>graph6<<`` header)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for v in range(1, g.n):
        row = adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Raises Graph6Error on malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            # 8-byte form (n >= 258048) is not supported
            raise Graph6Error("malformed or unsupported length header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n < 63:
            raise Graph6Error("long header used for n < 63")
        body = vals[4:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise Graph6Error(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - need
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if body[i // 6] >> (5 - i % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph.trusted(n, tuple(rows))


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    """Yield graphs from a stream, one graph6 line each; blank lines skipped."""
    for line in stream:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(emit_graph6(g) + "\n")
