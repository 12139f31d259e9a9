"""Bitset graph representation, family generators and the join operation.

Vertices are 0-based: 1-based labels v_1..v_n correspond to indices
0..n-1 (v_i is vertex i-1).  Every neighbor set and every vertex set is a
plain Python ``int`` used as a bit mask, bit ``v`` standing for vertex ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapacityError, InvalidFamilyError, InvalidInputError

MAX_VERTICES = 128

# A VertexSet is a bit mask over the vertices of its owning graph.
VertexSet = int


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        if v < 0:
            raise InvalidInputError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Return the vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bit mask of neighbors of ``v``.  ``blocks`` optionally
    records the part index of each vertex for complete multipartite graphs;
    it does not take part in equality.
    """

    n: int
    adj: tuple[int, ...]
    blocks: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph has {self.n} vertices; capacity is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InvalidInputError(f"expected {self.n} neighbor sets, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise InvalidInputError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise InvalidInputError(f"loop at vertex {v}")
            for u in members(nbrs):
                if not self.adj[u] >> v & 1:
                    raise InvalidInputError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph has {n} vertices; capacity is {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced_connected(self, mask: VertexSet) -> bool:
        """True if the subgraph induced by ``mask`` is connected (empty counts as connected)."""
        if not mask:
            return True
        reached = mask & -mask
        frontier = reached
        while frontier:
            grow = 0
            for v in members(frontier):
                grow |= self.adj[v]
            frontier = grow & mask & ~reached
            reached |= frontier
        return reached == mask

    def is_connected(self) -> bool:
        return self.induced_connected(self.full)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def make_empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices (the complement of K_n)."""
    if n < 0:
        raise InvalidFamilyError("vertex count must be non-negative")
    return Graph(n, (0,) * n)


def make_path(n: int) -> Graph:
    """Path 0-1-...-(n-1); vertex i is v_{i+1} in 1-based labels.  n=1 gives K_1."""
    if n < 1:
        raise InvalidFamilyError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyError("a complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def make_star(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    if leaves < 1:
        raise InvalidFamilyError("a star needs at least one leaf")
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def make_sun(n: int) -> Graph:
    """Sun graph on 2n vertices.

    Cycle on ``0..n-1``; leaf ``n+i`` hangs off cycle vertex ``i``.
    """
    if n < 3:
        raise InvalidFamilyError(f"a sun graph needs a cycle of length >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    """K(m_1, ..., m_k) with blocks laid out consecutively in the given order."""
    parts = list(parts)
    if len(parts) < 2:
        raise InvalidFamilyError("a complete multipartite graph needs at least 2 parts")
    if any(m < 1 for m in parts):
        raise InvalidFamilyError(f"part sizes must be >= 1, got {parts}")
    n = sum(parts)
    if n > MAX_VERTICES:
        raise CapacityError(f"K{tuple(parts)} has {n} vertices; capacity is {MAX_VERTICES}")
    blocks = []
    block_masks = []
    start = 0
    for idx, m in enumerate(parts):
        blocks.extend([idx] * m)
        block_masks.append(((1 << m) - 1) << start)
        start += m
    full = (1 << n) - 1
    adj = tuple(full & ~block_masks[blocks[v]] for v in range(n))
    return Graph(n, adj, blocks=tuple(blocks))


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 ∨ G2: disjoint union plus every edge between the two sides.

    Vertices of ``g2`` are shifted up by ``g1.n``.
    """
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices; capacity is {MAX_VERTICES}")
    left = g1.full
    right = g2.full << g1.n
    adj = tuple(a | right for a in g1.adj) + tuple((a << g1.n) | left for a in g2.adj)
    return Graph(n, adj)
