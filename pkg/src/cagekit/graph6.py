"""graph6 codec: 6-bit packed upper triangle, one graph per ASCII line."""
from __future__ import annotations

import os
from typing import Iterable, Iterator

from .errors import MalformedGraph6, OrderTooLarge
from .graph import Graph

_HEADER = ">>graph6<<"
_MAX_ORDER = 2 ** 18


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode(g: Graph) -> str:
    """Encode one graph as a graph6 line (without newline)."""
    n = g.order
    if n > _MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds graph6 cap {_MAX_ORDER}")
    out = [_encode_order(n)]
    adj = g.adjacency
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = set(adj[j])
        for i in range(j):
            acc = (acc << 1) | (1 if i in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    """Decode one graph6 line."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise MalformedGraph6("empty line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"byte {ord(ch)} out of graph6 range")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise MalformedGraph6("truncated order field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise MalformedGraph6("truncated order field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    if n > _MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds graph6 cap {_MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} payload bytes, got {len(body)}")
    bits = 0
    for v in body:
        bits = (bits << 6) | v
    total = 6 * need
    if need and bits & ((1 << (total - nbits)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (bits >> (total - 1 - pos)) & 1:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def iter_file(path: str | os.PathLike) -> Iterator[Graph]:
    """Stream graphs from a file, one per line; blank lines are skipped."""
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                yield decode(line)


def read_file(path: str | os.PathLike) -> list[Graph]:
    return list(iter_file(path))


def write_file(path: str | os.PathLike, graphs: Iterable[Graph]) -> int:
    """Write graphs one per line; returns the count."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
            count += 1
    return count
