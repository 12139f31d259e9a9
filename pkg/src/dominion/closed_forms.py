"""Closed-form domination numbers and dominions for named graph families.

Each family result carries a status: ``PROVEN`` for established results and
``CONJECTURED`` for the cycle formulas with n ≡ 1, 2 (mod 3), which are
returned for comparison but never treated as fact.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .engine import GammaReport, checked_u128
from .errors import HypothesisViolation, InvalidFamilyError, InvalidInputError
from .graph import Graph


class Status(str, enum.Enum):
    PROVEN = "PROVEN"
    CONJECTURED = "CONJECTURED"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FamilyValue:
    gamma: int | None
    zeta: int
    status: Status
    source: str

    def __post_init__(self):
        checked_u128(self.zeta)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def path_dominion(n: int) -> FamilyValue:
    if n < 2:
        raise InvalidFamilyError(f"path formula holds for n >= 2, got {n}")
    gamma = _ceil_div(n, 3)
    r = n % 3
    if r == 0:
        zeta = 1
    elif r == 1:
        zeta = (n + 2) * (n + 11) // 18 - 1
    else:
        zeta = gamma + 1
    return FamilyValue(gamma, zeta, Status.PROVEN, "path dominion theorem")


def cycle_dominion(n: int) -> FamilyValue:
    if n < 3:
        raise InvalidFamilyError(f"cycle formula holds for n >= 3, got {n}")
    gamma = _ceil_div(n, 3)
    r = n % 3
    if r == 0:
        return FamilyValue(gamma, 3, Status.PROVEN, "cycle dominion for n = 3k")
    if r == 1:
        return FamilyValue(gamma, (n * n + 5 * n) // 6, Status.CONJECTURED, "cycle conjecture, n = 3k+1")
    return FamilyValue(gamma, n, Status.CONJECTURED, "cycle conjecture, n = 3k+2")


def sun_dominion(n: int) -> FamilyValue:
    """Sun graph on 2n vertices: every γ-set picks a cycle vertex or its leaf, per pair."""
    if n < 3:
        raise InvalidFamilyError(f"sun formula holds for n >= 3, got {n}")
    return FamilyValue(n, checked_u128(2**n), Status.PROVEN, "sun graph dominion")


def complete_dominion(n: int) -> FamilyValue:
    """K_n: every vertex covers everything."""
    if n < 1:
        raise InvalidFamilyError(f"complete graph needs n >= 1, got {n}")
    return FamilyValue(1, n, Status.PROVEN, "complete graph dominion")


def star_dominion(leaves: int) -> FamilyValue:
    """K_{1,leaves} with at least two leaves: only the center dominates alone."""
    if leaves < 2:
        raise InvalidFamilyError(f"star formula holds for >= 2 leaves, got {leaves}")
    return FamilyValue(1, 1, Status.PROVEN, "star dominion")


def join_gamma(gamma1: int, gamma2: int) -> int:
    if gamma1 < 1 or gamma2 < 1:
        raise InvalidInputError("domination numbers of non-empty graphs are >= 1")
    return 1 if min(gamma1, gamma2) == 1 else 2


def join_dominion(g1: Graph, report1: GammaReport, g2: Graph, report2: GammaReport) -> FamilyValue:
    """ζ(G1 ∨ G2) from the parts' own γ, ζ and orders.

    Both graphs must be connected and non-empty.
    """
    for g in (g1, g2):
        if g.n == 0 or not g.is_connected():
            raise HypothesisViolation("join formula needs two non-empty connected graphs")
    (ga, za, na), (gb, zb, nb) = sorted(
        [(report1.gamma, report1.zeta, g1.n), (report2.gamma, report2.zeta, g2.n)],
        key=lambda t: t[0],
    )
    cross = na * nb
    if ga == 1 and gb == 1:
        zeta = za + zb
    elif ga == 2 and gb == 2:
        zeta = za + zb + cross
    elif ga == 1:
        zeta = za
    elif ga == 2:
        zeta = za + cross
    else:
        zeta = cross
    return FamilyValue(join_gamma(ga, gb), checked_u128(zeta), Status.PROVEN, "join dominion theorem")


def iterated_join_dominion(gamma: int, zeta: int, r: int) -> int:
    """ζ of the r-fold self-join of a graph with γ = 1."""
    if gamma != 1:
        raise HypothesisViolation(f"r-fold join formula needs gamma = 1, got {gamma}")
    if r < 1:
        raise InvalidInputError(f"r must be >= 1, got {r}")
    return checked_u128(r * zeta)


def multipartite_dominion(parts: Sequence[int]) -> FamilyValue:
    """K(m_1, ..., m_k) with m_1 <= ... <= m_k.

    With singleton parts, each singleton vertex is a γ-set on its own.
    Otherwise γ = 2: every pair from two different parts works, and so does
    each part of size exactly 2.
    """
    parts = list(parts)
    if len(parts) < 2:
        raise InvalidInputError("need at least 2 parts")
    if any(m < 1 for m in parts):
        raise InvalidInputError(f"part sizes must be >= 1, got {parts}")
    if parts != sorted(parts):
        raise InvalidInputError(f"part sizes must be sorted ascending, got {parts}")
    ones = parts.count(1)
    if ones:
        return FamilyValue(1, ones, Status.PROVEN, "complete multipartite dominion")
    total = sum(parts)
    cross = (total * total - sum(m * m for m in parts)) // 2
    zeta = cross + parts.count(2)
    return FamilyValue(2, checked_u128(zeta), Status.PROVEN, "complete multipartite dominion")


def dominion_bounds(n: int, gamma: int) -> tuple[int, int]:
    """Trivial bounds 1 <= ζ <= C(n, γ)."""
    if not 1 <= gamma <= n:
        raise InvalidInputError(f"need 1 <= gamma <= n, got gamma={gamma}, n={n}")
    return 1, checked_u128(comb(n, gamma))


def join_lower_bound(n1: int, n2: int) -> int:
    """Every cross pair dominates the join.

    Only a lower bound on ζ(G1 ∨ G2) when 2 <= γ(G1) <= γ(G2); the caller
    is responsible for that hypothesis.
    """
    return n1 * n2
