"""Exact domination number, minimum dominating set enumeration and dominion.

Two independent routes are provided:

* the search route (:func:`domination_number`, :func:`enumerate_gamma_sets`,
  :func:`dominion`) built on branch-and-bound over bit masks;
* :func:`brute_force_dominion`, a plain subset scan used as an oracle.  It
  shares no search code with the first route.

Minimum dominating sets are produced in lexicographic order of their sorted
vertex lists, e.g. ``[0, 2] < [0, 3] < [1, 2]``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from operator import or_
from typing import Iterator

from .errors import CapacityError, CountOverflowError, InvalidInputError, SearchTimeout
from .graph import Graph, VertexSet, members, popcount

U128_MAX = (1 << 128) - 1
ORACLE_MAX_VERTICES = 24

# how many search nodes between deadline checks
_TICK = 1024


def checked_u128(value: int) -> int:
    if not 0 <= value <= U128_MAX:
        raise CountOverflowError(f"count {value} does not fit in 128 bits")
    return value


@dataclass(frozen=True)
class GammaReport:
    """Domination number ``gamma``, dominion ``zeta`` and, on request, the γ-sets."""

    gamma: int
    zeta: int
    sets: tuple[VertexSet, ...] | None = None

    def __post_init__(self):
        checked_u128(self.zeta)
        if self.sets is not None and len(self.sets) != self.zeta:
            raise InvalidInputError("materialized set list does not match zeta")


class _Clock:
    def __init__(self, deadline):
        self.deadline = deadline
        self.ticks = 0

    def tick(self):
        if self.deadline is None:
            return
        self.ticks += 1
        if self.ticks % _TICK == 1 and time.monotonic() > self.deadline:
            raise SearchTimeout("search exceeded its time budget")


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: the vertices covered by ``v``."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return g.adj[v] | (1 << v)


def _closed_neighborhoods(g: Graph) -> list[int]:
    return [g.adj[v] | (1 << v) for v in range(g.n)]


def is_dominating(g: Graph, s: VertexSet) -> bool:
    if s & ~g.full:
        raise InvalidInputError(f"vertex set has members outside 0..{g.n - 1}")
    covered = 0
    for v in members(s):
        covered |= g.adj[v] | (1 << v)
    return covered == g.full


def greedy_dominating_set(g: Graph) -> VertexSet:
    """Max-coverage greedy; ties go to the lowest index."""
    nbhd = _closed_neighborhoods(g)
    uncovered = g.full
    chosen = 0
    while uncovered:
        best_v, best_gain = -1, 0
        for v in range(g.n):
            gain = popcount(nbhd[v] & uncovered)
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        uncovered &= ~nbhd[best_v]
    return chosen


def domination_number(g: Graph, deadline: float | None = None) -> int:
    """γ(G) by branch-and-bound.

    Branches on the lowest-index uncovered vertex, trying each member of its
    closed neighborhood.  A subtree is cut when its size plus
    ``ceil(uncovered / max |N[v]|)`` cannot beat the incumbent, which starts
    at the greedy solution.  ``deadline`` is a :func:`time.monotonic` value.
    The empty graph has γ = 0.
    """
    if g.n == 0:
        return 0
    nbhd = _closed_neighborhoods(g)
    full = g.full
    maxcov = max(popcount(m) for m in nbhd)
    best = popcount(greedy_dominating_set(g))
    clock = _Clock(deadline)

    def search(covered, size):
        nonlocal best
        clock.tick()
        if covered == full:
            best = size
            return
        uncovered = full & ~covered
        if size + -(-popcount(uncovered) // maxcov) >= best:
            return
        u = (uncovered & -uncovered).bit_length() - 1
        for v in members(nbhd[u]):
            search(covered | nbhd[v], size + 1)

    search(0, 0)
    return best


def dominating_sets_of_size(g: Graph, k: int, deadline: float | None = None) -> Iterator[VertexSet]:
    """Yield every dominating set with exactly ``k`` vertices, in lexicographic order.

    Depth-first over include/exclude decisions for vertices 0, 1, ..., n-1,
    including first.  A branch dies when some uncovered vertex has no
    undecided vertex left in its closed neighborhood, or when the remaining
    budget times the largest remaining ``|N[v]|`` is below the uncovered count.
    """
    n = g.n
    if not 0 <= k <= n:
        return
    nbhd = _closed_neighborhoods(g)
    full = g.full

    # dead_before[i]: vertices whose closed neighborhood lies entirely in 0..i-1
    dead_before = [0] * (n + 1)
    for v, m in enumerate(nbhd):
        dead_before[m.bit_length()] |= 1 << v
    for i in range(1, n + 1):
        dead_before[i] |= dead_before[i - 1]
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = max(suffix_max[i + 1], popcount(nbhd[i]))

    clock = _Clock(deadline)

    def rec(i, chosen, covered, budget):
        clock.tick()
        if covered == full:
            for extra in combinations(range(i, n), budget):
                yield reduce(or_, (1 << v for v in extra), chosen)
            return
        if budget == 0 or i == n:
            return
        uncovered = full & ~covered
        if uncovered & dead_before[i]:
            return
        if popcount(uncovered) > budget * suffix_max[i]:
            return
        yield from rec(i + 1, chosen | (1 << i), covered | nbhd[i], budget - 1)
        if n - i - 1 >= budget:
            yield from rec(i + 1, chosen, covered, budget)

    yield from rec(0, 0, 0, k)


def enumerate_gamma_sets(g: Graph, deadline: float | None = None) -> Iterator[VertexSet]:
    gamma = domination_number(g, deadline)
    return dominating_sets_of_size(g, gamma, deadline)


def dominion(g: Graph, with_sets: bool = False, deadline: float | None = None) -> GammaReport:
    """γ(G) and ζ(G), the number of minimum dominating sets.

    The sets themselves are kept only when ``with_sets`` is true.
    """
    gamma = domination_number(g, deadline)
    stream = dominating_sets_of_size(g, gamma, deadline)
    if with_sets:
        sets = tuple(stream)
        return GammaReport(gamma, checked_u128(len(sets)), sets)
    count = 0
    for _ in stream:
        count += 1
    return GammaReport(gamma, checked_u128(count))


def brute_force_dominion(g: Graph, with_sets: bool = False, deadline: float | None = None) -> GammaReport:
    """Reference dominion by scanning subsets in cardinality-then-lex order.

    Only for ``n <= 24``.  The deadline is checked between cardinalities.
    """
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise CapacityError(f"brute force is capped at {ORACLE_MAX_VERTICES} vertices, got {n}")
    cover = [g.adj[v] | (1 << v) for v in range(n)]
    bits = [1 << v for v in range(n)]
    full = (1 << n) - 1
    for k in range(n + 1):
        if deadline is not None and time.monotonic() > deadline:
            raise SearchTimeout("brute force exceeded its time budget")
        count = 0
        found = []
        for covers, picked in zip(combinations(cover, k), combinations(bits, k)):
            if reduce(or_, covers, 0) == full:
                count += 1
                if with_sets:
                    found.append(reduce(or_, picked, 0))
        if count:
            return GammaReport(k, count, tuple(found) if with_sets else None)
    raise AssertionError("the full vertex set always dominates")
