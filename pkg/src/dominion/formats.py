"""Edge-list and graph6 reading/writing.

Edge-list format::

    n 4
    0 1
    1 2

Blank lines and lines starting with ``#`` are ignored.  graph6 is the usual
ASCII encoding (upper triangle, column by column, six bits per byte offset
by 63); only graphs with at most 128 vertices are accepted.
"""
from __future__ import annotations

from .errors import CapacityError, GraphParseError
from .graph import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    n = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphParseError(f"expected 'n <count>', got {raw!r}", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 0:
                raise GraphParseError(f"negative vertex count {n}", lineno)
            if n > MAX_VERTICES:
                raise CapacityError(f"graph has {n} vertices; capacity is {MAX_VERTICES}")
            adj = [0] * n
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {raw!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range 0..{n - 1} in {raw!r}", lineno)
        if u == v:
            raise GraphParseError(f"loop edge {u}-{v} not allowed", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n is None:
        raise GraphParseError("missing 'n <count>' header line")
    return Graph(n, tuple(adj))


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string")
    data = []
    for pos, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b} at position {pos} outside graph6 range 63..126")
        data.append(b - 63)

    if data[0] != 63:
        n, body = data[0], data[1:]
    else:
        if len(data) < 4:
            raise GraphParseError("truncated vertex count")
        if data[1] == 63:
            raise GraphParseError("graphs with more than 258047 vertices are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph has {n} vertices; capacity is {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise GraphParseError(f"truncated bit stream: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise GraphParseError(f"trailing data: expected {need} bytes, got {len(body)}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n]
    else:
        out = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc)
                acc = nacc = 0
    if nacc:
        out.append(acc << (6 - nacc))
    return "".join(chr(b + 63) for b in out)
