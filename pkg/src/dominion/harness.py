"""Sweeps that check every closed form against the exact engines.

Each instance runs the branch-and-bound engine and, when the graph is small
enough, the brute-force oracle as well; the two must agree before the
closed form is compared.  A mismatch on a PROVEN formula (or an engine
disagreement) is a failure.  A mismatch on a CONJECTURED formula is a
finding: it is reported, never raised.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from . import closed_forms as cf
from .closed_forms import FamilyValue, Status
from .engine import ORACLE_MAX_VERTICES, GammaReport, brute_force_dominion, dominion
from .errors import CapacityError, SearchTimeout
from .families import parse_family
from .formats import emit_graph6, parse_graph6
from .graph import Graph, join

DEFAULT_SEARCH_CAP = 40

MATCH = "MATCH"
MISMATCH = "MISMATCH"
ENGINE_DISAGREE = "ENGINE_DISAGREE"
SKIPPED = "SKIPPED"
TIMEOUT = "TIMEOUT"

FAMILY_KINDS = ("path", "cycle", "sun", "complete", "star", "kpartite", "join")


def search_cap() -> int:
    """Largest vertex count the search engine accepts (env ``DOMINION_MAX_N``)."""
    raw = os.environ.get("DOMINION_MAX_N")
    return int(raw) if raw else DEFAULT_SEARCH_CAP


@dataclass(frozen=True)
class VerificationRecord:
    family: str
    param: int | tuple
    formula_gamma: int | None
    formula_zeta: int
    engine_gamma: int | None
    engine_zeta: int | None
    status: Status
    match: bool
    elapsed_ms: float
    outcome: str
    note: str = ""

    @property
    def failed(self) -> bool:
        """True for a bug: a proven formula or the two engines disagree."""
        if self.outcome == ENGINE_DISAGREE:
            return True
        return self.outcome == MISMATCH and self.status is Status.PROVEN

    @property
    def finding(self) -> bool:
        return self.outcome == MISMATCH and self.status is Status.CONJECTURED

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "param": list(self.param) if isinstance(self.param, tuple) else self.param,
            "formula_gamma": self.formula_gamma,
            "formula_zeta": str(self.formula_zeta),
            "engine_gamma": self.engine_gamma,
            "engine_zeta": None if self.engine_zeta is None else str(self.engine_zeta),
            "status": self.status.value,
            "match": self.match,
            "outcome": self.outcome,
            "note": self.note,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


_FORMULAS = {
    "path": cf.path_dominion,
    "cycle": cf.cycle_dominion,
    "sun": cf.sun_dominion,
    "complete": cf.complete_dominion,
    "star": cf.star_dominion,
    "kpartite": cf.multipartite_dominion,
}


def _label(kind: str, param) -> str:
    if kind == "kpartite":
        return "kpartite:" + ",".join(map(str, param))
    if kind == "join":
        return f"join:{param[0]}+{param[1]}"
    return f"{kind}:{param}"


def _formula(kind: str, param) -> FamilyValue:
    if kind == "join":
        g1, g2 = (parse_graph6(s) for s in param)
        # the parts' reports come from the oracle so the search engine is only
        # trusted on the joined graph
        return cf.join_dominion(g1, _reference_report(g1), g2, _reference_report(g2))
    return _FORMULAS[kind](param)


def _graph(kind: str, param) -> Graph:
    if kind == "join":
        return join(*(parse_graph6(s) for s in param))
    return parse_family(_label(kind, param)).build()


def _reference_report(g: Graph) -> GammaReport:
    return brute_force_dominion(g) if g.n <= ORACLE_MAX_VERTICES else dominion(g)


def _deadline(budget_ms):
    return None if budget_ms is None else time.monotonic() + budget_ms / 1000


def _run(task) -> VerificationRecord:
    kind, param, engine_choice, budget_ms, cap = task
    start = time.perf_counter()

    def record(formula, label, eg=None, ez=None, outcome=SKIPPED, note=""):
        match = outcome == MATCH
        return VerificationRecord(
            family=label,
            param=param,
            formula_gamma=formula.gamma,
            formula_zeta=formula.zeta,
            engine_gamma=eg,
            engine_zeta=ez,
            status=formula.status,
            match=match,
            elapsed_ms=(time.perf_counter() - start) * 1000,
            outcome=outcome,
            note=note,
        )

    label = _label(kind, param)
    formula = _formula(kind, param)
    try:
        g = _graph(kind, param)
    except CapacityError as exc:
        return record(formula, label, note=str(exc))

    use_search = g.n <= cap
    use_oracle = g.n <= ORACLE_MAX_VERTICES
    if engine_choice == "oracle" and not use_oracle:
        return record(formula, label, note=f"n={g.n} exceeds oracle cap {ORACLE_MAX_VERTICES}")
    if engine_choice == "search" and not use_search:
        return record(formula, label, note=f"n={g.n} exceeds search cap {cap}")

    reports = {}
    try:
        if use_search:
            reports["search"] = dominion(g, deadline=_deadline(budget_ms))
        if use_oracle:
            reports["oracle"] = brute_force_dominion(g, deadline=_deadline(budget_ms))
    except SearchTimeout:
        return record(formula, label, outcome=TIMEOUT, note=f"budget of {budget_ms} ms exhausted")

    primary = reports[engine_choice]
    eg, ez = primary.gamma, primary.zeta
    if len(reports) == 2 and reports["search"] != reports["oracle"]:
        s, o = reports["search"], reports["oracle"]
        note = f"search gave ({s.gamma}, {s.zeta}), oracle gave ({o.gamma}, {o.zeta})"
        return record(formula, label, eg, ez, ENGINE_DISAGREE, note)
    ok = ez == formula.zeta and eg == formula.gamma
    return record(formula, label, eg, ez, MATCH if ok else MISMATCH)


def _normalize(kind: str, param):
    if kind == "kpartite":
        return tuple(param)
    if kind == "join":
        return tuple(emit_graph6(p) if isinstance(p, Graph) else p for p in param)
    return param


def verify_family(
    family: str,
    params: Iterable,
    engine_choice: str = "search",
    budget_ms: float | None = None,
    workers: int = 1,
) -> list[VerificationRecord]:
    """One record per parameter, in the order given.

    ``params`` are vertex counts (``cycle``, ``path``, ...), part-size tuples
    (``kpartite``) or pairs of graphs / graph6 strings (``join``).
    """
    if family not in FAMILY_KINDS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILY_KINDS}")
    if engine_choice not in ("search", "oracle"):
        raise ValueError("engine_choice must be 'search' or 'oracle'")
    cap = search_cap()
    tasks = [(family, _normalize(family, p), engine_choice, budget_ms, cap) for p in params]
    return _map(tasks, workers)


def _map(tasks, workers):
    if workers <= 1 or len(tasks) <= 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps parameter order whatever the completion order
        return list(pool.map(_run, tasks))


def verify_cycle_conjecture(
    max_n: int,
    budget_ms: float | None = None,
    engine_choice: str = "search",
    workers: int = 1,
) -> list[VerificationRecord]:
    """Engine ζ(C_n) against the conjectured value for n ≤ max_n, n ≢ 0 (mod 3)."""
    ns = [n for n in range(4, max_n + 1) if n % 3]
    return verify_family("cycle", ns, engine_choice, budget_ms, workers)


def conjecture_summary(records: Sequence[VerificationRecord], max_n: int) -> str:
    if not records:
        return f"no conjectured cases up to {max_n}"
    for rec in records:
        if rec.outcome in (MISMATCH, ENGINE_DISAGREE):
            return (
                f"counterexample at n={rec.param}: engine zeta={rec.engine_zeta}, "
                f"conjectured zeta={rec.formula_zeta}"
            )
    for prev, rec in zip([None, *records], records):
        if rec.outcome != MATCH:
            upto = 3 if prev is None else prev.param
            return f"consistent up to {upto} ({rec.outcome.lower()} at n={rec.param})"
    return f"consistent up to {max_n}"


def exit_status(records: Iterable[VerificationRecord]) -> int:
    """0 all good, 1 a proven formula failed, 5 a conjecture mismatch was found."""
    records = list(records)
    if any(r.failed for r in records):
        return 1
    if any(r.finding for r in records):
        return 5
    return 0


def multipartite_vectors(max_part: int = 4, max_total: int = 14, ks: Sequence[int] = (2, 3)):
    """All sorted part-size vectors with the given numbers of parts."""
    out = []
    for k in ks:
        for parts in combinations_with_replacement(range(1, max_part + 1), k):
            if sum(parts) <= max_total:
                out.append(parts)
    return out


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus each remaining edge with probability ``p``."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def join_case(gamma1: int, gamma2: int) -> str:
    a, b = sorted((gamma1, gamma2))
    if a == b == 1:
        return "1=1"
    if a == b == 2:
        return "2=2"
    if a == 1:
        return "1<g2"
    if a == 2:
        return "2<g2"
    return "2<g1<=g2"


JOIN_CASES = ("1=1", "2=2", "1<g2", "2<g2", "2<g1<=g2")


def sample_join_pairs(per_case: int = 8, max_total: int = 16, seed: int = 0) -> list[tuple[Graph, Graph]]:
    """Random connected pairs, ``per_case`` for each of the five γ cases of the join formula."""
    rng = random.Random(seed)
    pool: dict[int, list[Graph]] = {1: [], 2: [], 3: []}
    while min(len(v) for v in pool.values()) < 2 * per_case:
        n = rng.randint(2, 8)
        g = random_connected_graph(n, rng.choice((0.0, 0.1, 0.3, 0.6)), rng)
        bucket = min(brute_force_dominion(g).gamma, 3)
        if len(pool[bucket]) < 2 * per_case:
            pool[bucket].append(g)

    wanted = {"1=1": (1, [1]), "2=2": (2, [2]), "1<g2": (1, [2, 3]), "2<g2": (2, [3]), "2<g1<=g2": (3, [3])}
    pairs = []
    for case in JOIN_CASES:
        lo, hi = wanted[case]
        fits = [(a, b) for a in pool[lo] for h in hi for b in pool[h] if a.n + b.n <= max_total]
        # a case may be infeasible for a small max_total; it is then left out
        pairs += rng.sample(fits, min(per_case, len(fits)))
    return pairs


def default_family_params(max_n: int) -> dict[str, list]:
    """Parameter ranges of the ``families`` suite for a vertex budget ``max_n``."""
    return {
        "path": list(range(2, max_n + 1)),
        "cycle": [n for n in range(3, max_n + 1) if n % 3 == 0],
        "sun": list(range(3, max_n // 2 + 1)),
        "complete": list(range(1, max_n + 1)),
        "star": list(range(2, max_n)),
        "kpartite": multipartite_vectors(max_total=min(14, max_n)),
        "join": [tuple(map(emit_graph6, pr)) for pr in sample_join_pairs(max_total=min(16, max_n))],
    }


def verify_families(
    max_n: int,
    engine_choice: str = "search",
    budget_ms: float | None = None,
    workers: int = 1,
) -> list[VerificationRecord]:
    records = []
    for kind, params in default_family_params(max_n).items():
        records += verify_family(kind, params, engine_choice, budget_ms, workers)
    return records
