"""Classify minimum dominating sets as perfect, connected, total, independent, clique."""
from __future__ import annotations

from dataclasses import dataclass, fields

from .engine import enumerate_gamma_sets, is_dominating
from .errors import InvalidInputError
from .graph import Graph, VertexSet, members, popcount


@dataclass(frozen=True)
class ClassFlags:
    perfect: bool
    connected: bool
    total: bool
    independent: bool
    clique: bool

    def any(self) -> bool:
        return any(getattr(self, f.name) for f in fields(self))

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Census:
    total_gamma_sets: int
    perfect_count: int = 0
    connected_count: int = 0
    total_count: int = 0
    independent_count: int = 0
    clique_count: int = 0
    none_count: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def classify(g: Graph, s: VertexSet) -> ClassFlags:
    """Flags for a dominating set ``s``.

    A single vertex counts as connected, independent and a clique, but not
    total (it is isolated in its own induced subgraph).  Perfection only
    looks at vertices outside ``s``: each must be covered by exactly one
    member.
    """
    if not is_dominating(g, s):
        raise InvalidInputError(f"{members(s)} is not a dominating set")
    inside = members(s)
    outside = g.full & ~s

    perfect = all(popcount(g.adj[v] & s) == 1 for v in members(outside))
    inner_degrees = [popcount(g.adj[v] & s) for v in inside]
    k = len(inside)
    return ClassFlags(
        perfect=perfect,
        connected=g.induced_connected(s),
        total=k > 0 and all(d > 0 for d in inner_degrees),
        independent=all(d == 0 for d in inner_degrees),
        clique=all(d == k - 1 for d in inner_degrees),
    )


def census_of(g: Graph, sets) -> Census:
    counts = dict.fromkeys(("perfect", "connected", "total", "independent", "clique", "none"), 0)
    total = 0
    for s in sets:
        total += 1
        flags = classify(g, s)
        for name, value in flags.as_dict().items():
            counts[name] += value
        if not flags.any():
            counts["none"] += 1
    return Census(total, *(counts[k] for k in ("perfect", "connected", "total", "independent", "clique", "none")))


def census(g: Graph) -> Census:
    return census_of(g, enumerate_gamma_sets(g))
