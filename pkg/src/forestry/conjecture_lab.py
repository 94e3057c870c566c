"""Brute-force experimental checks: negative correlation of uniform random
forests, 2-cover forest inequalities, the crossed-cover identity, the
large-girth tower trend, and the shattering-set sandwich.

A conjecture counterexample is never swallowed: reports carry the offending
instance and the verify suites print it loudly (finding one would be a
research event, not a code failure).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetError
from . import exact_count
from .graph_core import (
    MultiGraph,
    SignedLift,
    TowerResult,
    cross_edge_cover,
    girth,
    random_girth_tower,
)

log = logging.getLogger(__name__)

CORRELATION_EDGE_LIMIT = 22
SHATTERING_EDGE_LIMIT = 10

TWO_ROOT_TWO = 2.0 * math.sqrt(2.0)


# ---------------------------------------------------------------------------
# negative correlation of uniform random forests


def forest_pair_counts(g: MultiGraph) -> tuple[int, list[int], dict[tuple[int, int], int]]:
    """(F, per-edge forest counts, per-pair forest counts) in one enumeration."""
    if g.m > CORRELATION_EDGE_LIMIT:
        raise BudgetError(
            f"correlation tallies: m = {g.m} exceeds {CORRELATION_EDGE_LIMIT}"
        )
    singles = [0] * g.m
    pairs: dict[tuple[int, int], int] = {}
    total = 0
    for forest in exact_count.iter_forests(g):
        total += 1
        for a in forest:
            singles[a] += 1
        k = len(forest)
        for x in range(k):
            for y in range(x + 1, k):
                key = (forest[x], forest[y])
                pairs[key] = pairs.get(key, 0) + 1
    return total, singles, pairs


@dataclass(frozen=True)
class CorrelationReport:
    """Worst edge pair for P(e,f in F) <= P(e in F) P(f in F) under the uniform
    forest measure; margin = rhs - lhs as an exact rational."""

    graph_id: str
    total_forests: int
    worst_pair: tuple[int, int] | None
    lhs: Fraction | None
    rhs: Fraction | None
    min_margin: Fraction | None
    violated: bool


def negative_correlation_report(g: MultiGraph, graph_id: str | None = None) -> CorrelationReport:
    gid = graph_id if graph_id is not None else g.describe()
    total, singles, pairs = forest_pair_counts(g)
    worst: tuple[int, int] | None = None
    worst_margin: Fraction | None = None
    worst_lhs = worst_rhs = None
    denom = Fraction(total * total)
    for e in range(g.m):
        for f in range(e + 1, g.m):
            joint = pairs.get((e, f), 0)
            lhs = Fraction(joint * total)
            rhs = Fraction(singles[e] * singles[f])
            margin = (rhs - lhs) / denom
            if worst_margin is None or margin < worst_margin:
                worst_margin = margin
                worst = (e, f)
                worst_lhs = lhs / denom
                worst_rhs = rhs / denom
    violated = worst_margin is not None and worst_margin < 0
    if violated:
        log.critical(
            "REFUTATION: negative-correlation violated on %s at pair %s (margin %s)",
            gid,
            worst,
            worst_margin,
        )
    return CorrelationReport(gid, total, worst, worst_lhs, worst_rhs, worst_margin, violated)


def correlation_equivalences(g: MultiGraph, e: int, f: int) -> tuple[bool, bool, bool]:
    """Truth values of the three equivalent pair inequalities for the uniform
    forest measure (in-in, out-out, and the cross-product form). They must
    agree; disagreement would be an arithmetic bug, so it raises."""
    if e == f:
        raise ValueError("need two distinct edges")
    if e > f:
        e, f = f, e
    total, singles, pairs = forest_pair_counts(g)
    both = pairs.get((e, f), 0)
    only_e = singles[e] - both
    only_f = singles[f] - both
    neither = total - singles[e] - singles[f] + both
    b1 = both * total <= singles[e] * singles[f]
    b2 = neither * total <= (total - singles[e]) * (total - singles[f])
    b3 = both * neither <= only_e * only_f
    if not (b1 == b2 == b3):
        raise RuntimeError(
            f"equivalent inequalities disagree on {g.describe()} pair ({e},{f})"
        )
    return b1, b2, b3


# ---------------------------------------------------------------------------
# 2-cover inequalities


@dataclass(frozen=True)
class CoverCheck:
    graph_id: str
    signs: tuple[int, ...]
    base_forests_squared: int
    lift_forests: int
    violated: bool


def two_cover_check(g: MultiGraph, signs: Sequence[int]) -> CoverCheck:
    """Compare F(G)^2 with F(H) for the 2-lift H given by the signs. Any
    violation would refute the negative-correlation conjecture and is
    reported loudly."""
    lift = SignedLift(g, tuple(signs)).expand()
    base, _ = exact_count.count_forests_auto(g)
    lifted, _ = exact_count.count_forests_auto(lift)
    violated = base * base > lifted
    if violated:
        log.critical(
            "REFUTATION: F(G)^2 = %d > F(H) = %d for %s with signs %s",
            base * base,
            lifted,
            g.describe(),
            tuple(signs),
        )
    return CoverCheck(g.describe(), tuple(signs), base * base, lifted, violated)


def crossed_cover_identity_check(g: MultiGraph, i: int) -> bool:
    """Exact identity for the one-crossed-edge double cover H of g at edge i:
    with f1 = F(G - e) and f2 = F(G / e), F(H) = 3 f1^2 + 2 f1 f2 - f2^2 and
    F(G)^2 = (f1 + f2)^2 <= F(H)."""
    f1, _ = exact_count.count_forests_auto(g.delete_edge(i))
    f2, _ = exact_count.count_forests_auto(g.contract_edge(i))
    cover = cross_edge_cover(g, i)
    lifted, _ = exact_count.count_forests_auto(cover)
    expected = 3 * f1 * f1 + 2 * f1 * f2 - f2 * f2
    return lifted == expected and (f1 + f2) ** 2 <= lifted


# ---------------------------------------------------------------------------
# girth tower


def root_leaf_connection_probability(depth: int) -> float:
    """p_t for the binary tree of depth t: the probability that a uniformly
    random edge subset connects the root to some depth-t leaf. Satisfies
    p_t = p_{t-1} - p_{t-1}^2 / 4 with p_0 = 1 (a depth-0 root is a leaf)."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    p = 1.0
    for _ in range(depth):
        p = p - p * p / 4
    return p


def cubic_rate_floor(girth_value: float) -> float | None:
    """Analytic lower bound 2*sqrt(2) * (1 - 3 p_{R-1}) on the weakly-induced
    forest rate of a cubic graph, where the girth g >= 2k+1 allows R = k-1.
    None when the girth admits no R >= 1 (g < 5)."""
    if girth_value == math.inf:
        return None
    k = (int(girth_value) - 1) // 2
    r = k - 1
    if r < 1:
        return None
    return TWO_ROOT_TWO * (1 - 3 * root_leaf_connection_probability(r - 1))


@dataclass(frozen=True)
class LevelRecord:
    level: int
    n: int
    m: int
    girth: float
    forests: int | None
    forest_rate: float | None
    acyclic_orientations: int | None
    acyclic_rate: float | None
    weakly_induced: int | None
    weakly_induced_rate: float | None
    analytic_floor: float | None


@dataclass(frozen=True)
class TowerTrace:
    records: tuple[LevelRecord, ...]


def _rate(count: int | None, n: int) -> float | None:
    if count is None or count <= 0:
        return None
    return math.exp(math.log(count) / n)


def girth_tower_experiment(
    levels: int,
    seed: int = 0,
    start: str = "k4",
    small_count_edge_limit: int = 16,
    max_states: int = 2_000_000,
) -> TowerTrace:
    """Iterated random 2-lifts of a small cubic graph, recording exact counts
    per level while budgets allow. Forest counts use the frontier method with
    a greedy order; the slower a(G) and weakly-induced counts stop once m
    exceeds small_count_edge_limit (later levels record bounds only)."""
    from .graph_core import named_graph

    base = named_graph("complete(4)") if start == "k4" else named_graph(start)
    tower = random_girth_tower(base, levels, seed=seed)
    records = []
    for level, g in enumerate(tower.graphs):
        gr = tower.girths[level]
        forests = exact_count.count_forests_frontier(
            g, order=exact_count.greedy_frontier_order(g), max_states=max_states
        )
        if g.m <= small_count_edge_limit:
            acyclic = exact_count.count_acyclic_orientations(g)
            weakly = exact_count.count_weakly_induced_forests(g)
        else:
            acyclic = None
            weakly = None
        records.append(
            LevelRecord(
                level=level,
                n=g.n,
                m=g.m,
                girth=gr,
                forests=forests,
                forest_rate=_rate(forests, g.n),
                acyclic_orientations=acyclic,
                acyclic_rate=_rate(acyclic, g.n),
                weakly_induced=weakly,
                weakly_induced_rate=_rate(weakly, g.n),
                analytic_floor=cubic_rate_floor(gr),
            )
        )
    return TowerTrace(tuple(records))


# ---------------------------------------------------------------------------
# ratios and penalties


@dataclass(frozen=True)
class ForestRatio:
    forests: int
    ratio: Fraction
    value: float
    backend: str


def forest_ratio(g: MultiGraph, max_states: int = 4_000_000) -> ForestRatio:
    """F(G) / 2^m, exactly and as a float."""
    count, backend = exact_count.count_forests_auto(g, max_states=max_states)
    ratio = Fraction(count, 1 << g.m)
    return ForestRatio(count, ratio, float(ratio), backend)


def short_cycle_bound(g: MultiGraph, cycles: Sequence[Sequence[int]]) -> int:
    """Exact upper bound prod (2^|C_i| - 1) * 2^(m - sum |C_i|) on F(G) from
    edge-disjoint cycles (each given as a list of edge indices)."""
    all_circuits = set(exact_count.circuits(g))
    used: set[int] = set()
    total_len = 0
    bound = 1
    for cycle in cycles:
        cycle_set = frozenset(cycle)
        if cycle_set not in all_circuits:
            raise ValueError(f"edge set {sorted(cycle_set)} is not a cycle of the graph")
        if used & cycle_set:
            raise ValueError("cycles must be edge-disjoint")
        used |= cycle_set
        total_len += len(cycle_set)
        bound *= (1 << len(cycle_set)) - 1
    return bound << (g.m - total_len)


# ---------------------------------------------------------------------------
# shattering


@dataclass(frozen=True)
class ShatteringReport:
    """Sizes of the shattered / family / strongly-shattered triple for the
    family of acyclic-orientation flip sets, plus whether the shattered sets
    are exactly the forests and the strongly shattered ones exactly the
    weakly induced forests."""

    graph_id: str
    strongly_shattered: int
    family_size: int
    shattered: int
    shattered_are_forests: bool
    strongly_shattered_are_weakly_induced: bool

    @property
    def ok(self) -> bool:
        return (
            self.shattered_are_forests
            and self.strongly_shattered_are_weakly_induced
            and self.strongly_shattered <= self.family_size <= self.shattered
        )


def shattering_report(g: MultiGraph) -> ShatteringReport:
    if g.m > SHATTERING_EDGE_LIMIT:
        raise BudgetError(f"shattering check: m = {g.m} exceeds {SHATTERING_EDGE_LIMIT}")
    if g.has_loops():
        raise ValueError("shattering check needs a loopless graph")
    from collections import deque

    n, m = g.n, g.m
    family: list[int] = []
    for mask in range(1 << m):
        out_adj: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        for i, (u, v) in enumerate(g.edges):
            if mask >> i & 1:
                u, v = v, u
            out_adj[u].append(v)
            indeg[v] += 1
        queue = deque(v for v in range(n) if indeg[v] == 0)
        visited = 0
        while queue:
            x = queue.popleft()
            visited += 1
            for y in out_adj[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if visited == n:
            family.append(mask)

    full = (1 << m) - 1
    shattered: set[int] = set()
    strongly: set[int] = set()
    for subset in range(1 << m):
        size = bin(subset).count("1")
        projections = {s & subset for s in family}
        if len(projections) == 1 << size:
            shattered.add(subset)
        groups: dict[int, int] = {}
        for s in family:
            outside = s & (full & ~subset)
            groups[outside] = groups.get(outside, 0) + 1
        if any(count == 1 << size for count in groups.values()):
            strongly.add(subset)

    forests = set()
    for forest in exact_count.iter_forests(g):
        mask = 0
        for i in forest:
            mask |= 1 << i
        forests.add(mask)
    weakly = set()
    for mask in forests:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        for i in range(m):
            if mask >> i & 1:
                u, v = g.edges[i]
                parent[find(u)] = find(v)
        if all(
            mask >> i & 1 or find(u) != find(v) for i, (u, v) in enumerate(g.edges)
        ):
            weakly.add(mask)

    return ShatteringReport(
        g.describe(),
        len(strongly),
        len(family),
        len(shattered),
        shattered == forests,
        strongly == weakly,
    )
