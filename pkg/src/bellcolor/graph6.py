"""graph6 encoding (simple undirected graphs only)."""

from __future__ import annotations

from .errors import MalformedGraph6
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n < 2**36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"order {n} too large for graph6")


def write_graph6(g: Graph) -> str:
    # upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    bits = [
        1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    data = [
        int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + x) for x in _encode_n(g.n) + data)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise MalformedGraph6(f"byte {ch!r} outside graph6 range")
        vals.append(o - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise MalformedGraph6("truncated order field")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != nbytes:
        raise MalformedGraph6(
            f"order {n} needs {nbytes} data bytes, got {len(body)}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbytes and body[-1] & ((1 << (nbytes * 6 - nbits)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph.from_edges(n, edges)
