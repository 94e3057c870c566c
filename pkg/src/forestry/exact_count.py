"""Exact counters for forests, connected spanning subgraphs, acyclic
orientations, spanning trees, broken-cycle-free sets, weakly induced forests
and score vectors.

Every quantity has a dumb subset-enumeration oracle plus at least one scalable
route (deletion-contraction recursion or a frontier dynamic program); the
routes are independent so they can cross-check each other. All counts are
exact Python ints.

Frontier states are canonical tuples: one small int per active boundary
vertex, naming its partial-forest component, ids renumbered by first
appearance so that equal partitions merge. In forest mode a state dies when
an edge would close a cycle; in connected mode a component that retires while
other material is still active (or still to come) kills its state instead.
"""

from __future__ import annotations

import os
from collections import defaultdict, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BudgetError, StateBudgetError
from .graph_core import MultiGraph

ORACLE_EDGE_LIMIT = 30
SCORE_EDGE_LIMIT = 20
ORIENTATION_EDGE_LIMIT = 20
CIRCUIT_EDGE_LIMIT = 25
WEAKLY_INDUCED_EDGE_LIMIT = 30
CHROMATIC_EDGE_LIMIT = 25
DEFAULT_STATE_LIMIT = 2_000_000
DC_NODE_LIMIT = 4_000_000


def _threads_from_env() -> int:
    try:
        return max(1, int(os.environ.get("FORESTRY_THREADS", "1")))
    except ValueError:
        return 1


def _check_edge_budget(g: MultiGraph, limit: int, what: str) -> None:
    if g.m > limit:
        raise BudgetError(f"{what}: m = {g.m} exceeds the budget of {limit} edges")


# ---------------------------------------------------------------------------
# subset-enumeration oracles


def _mask_range_forests(edges: Sequence[tuple[int, int]], n: int, lo: int, hi: int) -> int:
    count = 0
    for mask in range(lo, hi):
        parent = list(range(n))
        ok = True
        mm = mask
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            u, v = edges[i]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                ok = False
                break
            parent[u] = v
        if ok:
            count += 1
    return count


def _mask_range_connected(edges: Sequence[tuple[int, int]], n: int, lo: int, hi: int) -> int:
    count = 0
    for mask in range(lo, hi):
        parent = list(range(n))
        comps = n
        mm = mask
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            u, v = edges[i]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                parent[u] = v
                comps -= 1
        if comps == 1:
            count += 1
    return count


def _parallel_masks(fn, edges, n: int, m: int, threads: int | None) -> int:
    threads = threads if threads is not None else _threads_from_env()
    total = 1 << m
    if threads <= 1 or total < 1 << 12:
        return fn(edges, n, 0, total)
    chunk = total // threads
    bounds = [(k * chunk, (k + 1) * chunk if k < threads - 1 else total) for k in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda b: fn(edges, n, b[0], b[1]), bounds))
    return sum(parts)  # fixed chunk order keeps the result bit-identical


def count_forests_brute(g: MultiGraph, threads: int | None = None) -> int:
    """Number of acyclic edge subsets, by checking all 2^m subsets."""
    _check_edge_budget(g, ORACLE_EDGE_LIMIT, "forest oracle")
    return _parallel_masks(_mask_range_forests, g.edges, g.n, g.m, threads)


def count_connected_brute(g: MultiGraph, threads: int | None = None) -> int:
    """Number of edge subsets A with (V, A) connected, by checking all 2^m subsets."""
    if g.n <= 1:
        return 1 << g.m
    if not g.is_connected():
        return 0
    _check_edge_budget(g, ORACLE_EDGE_LIMIT, "connected-subgraph oracle")
    return _parallel_masks(_mask_range_connected, g.edges, g.n, g.m, threads)


def iter_forests(g: MultiGraph) -> Iterator[tuple[int, ...]]:
    """Yield every acyclic edge subset as a tuple of edge indices."""
    _check_edge_budget(g, ORACLE_EDGE_LIMIT, "forest enumeration")
    m = g.m
    edges = g.edges
    parent = list(range(g.n))
    size = [1] * g.n
    chosen: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(chosen)
            return
        yield from rec(i + 1)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv

    yield from rec(0)


# ---------------------------------------------------------------------------
# deletion-contraction


def _strip_isolated(g: MultiGraph) -> MultiGraph:
    used = sorted({x for e in g.edges for x in e})
    if len(used) == g.n:
        return g
    remap = {v: k for k, v in enumerate(used)}
    return MultiGraph(len(used), [(remap[u], remap[v]) for u, v in g.edges])


def _labeled_key(g: MultiGraph) -> tuple:
    return (g.n, tuple(sorted((u, v) if u <= v else (v, u) for u, v in g.edges)))


def _find_cycle_edge(g: MultiGraph) -> int | None:
    """Index of some edge lying on a cycle, or None if the graph is a forest."""
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            return i
    adj = g.adjacency()
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [(root, -1)]
        seen[root] = True
        while stack:
            x, via = stack.pop()
            for y, e in adj[x]:
                if e == via:
                    continue
                if seen[y]:
                    return e
                seen[y] = True
                stack.append((y, e))
    return None


def count_forests_dc(g: MultiGraph, node_budget: int = DC_NODE_LIMIT) -> int:
    """F(G) via the recursion F(G) = F(G - e) + F(G / e) on a cycle edge.

    Loops are deleted eagerly (a forest never contains one) and isolated
    vertices stripped; small labeled subproblems are memoized. Exponential in
    the worst case, intended for m up to ~20 or heavily reducible graphs.
    """
    memo: dict[tuple, int] = {}
    nodes = 0

    def rec(graph: MultiGraph) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetError(f"deletion-contraction budget of {node_budget} nodes exceeded")
        if graph.has_loops():
            graph = graph.without_loops()
        graph = _strip_isolated(graph)
        cycle_edge = _find_cycle_edge(graph)
        if cycle_edge is None:
            return 1 << graph.m
        key = _labeled_key(graph)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = rec(graph.delete_edge(cycle_edge)) + rec(graph.contract_edge(cycle_edge))
        memo[key] = value
        return value

    return rec(g)


def count_connected_dc(g: MultiGraph, node_budget: int = DC_NODE_LIMIT) -> int:
    """C(G) via C(G) = C(G - e) + C(G / e); a loop contributes a free factor 2."""
    if g.n <= 1:
        return 1 << g.m
    if not g.is_connected():
        return 0
    memo: dict[tuple, int] = {}
    nodes = 0

    def rec(graph: MultiGraph) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetError(f"deletion-contraction budget of {node_budget} nodes exceeded")
        loops = sum(1 for u, v in graph.edges if u == v)
        if loops:
            graph = graph.without_loops()
        factor = 1 << loops
        if not graph.is_connected():
            return 0
        if graph.m == graph.n - 1:
            return factor
        key = _labeled_key(graph)
        hit = memo.get(key)
        if hit is not None:
            return factor * hit
        cycle_edge = _find_cycle_edge(graph)
        assert cycle_edge is not None
        value = rec(graph.delete_edge(cycle_edge)) + rec(graph.contract_edge(cycle_edge))
        memo[key] = value
        return factor * value

    return rec(g)


def count_spanning_trees_dc(g: MultiGraph, node_budget: int = DC_NODE_LIMIT) -> int:
    """Spanning trees via tau(G) = tau(G - e) + tau(G / e); loops are dropped."""
    memo: dict[tuple, int] = {}
    nodes = 0

    def rec(graph: MultiGraph) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetError(f"deletion-contraction budget of {node_budget} nodes exceeded")
        graph = graph.without_loops()
        if not graph.is_connected():
            return 0
        if graph.m == graph.n - 1:
            return 1
        key = _labeled_key(graph)
        hit = memo.get(key)
        if hit is not None:
            return hit
        cycle_edge = _find_cycle_edge(graph)
        assert cycle_edge is not None
        value = rec(graph.delete_edge(cycle_edge)) + rec(graph.contract_edge(cycle_edge))
        memo[key] = value
        return value

    return rec(g)


def count_spanning_trees(g: MultiGraph) -> int:
    """Spanning trees via the matrix-tree determinant (0 when disconnected)."""
    from .algebraic import spanning_tree_count_det

    return spanning_tree_count_det(g)


# ---------------------------------------------------------------------------
# frontier dynamic program


def bfs_order(g: MultiGraph) -> list[int]:
    """BFS vertex order from vertex 0, continuing at the next unvisited id."""
    adj = g.adjacency()
    seen = [False] * g.n
    order: list[int] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y, _ in sorted(adj[x]):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def greedy_frontier_order(g: MultiGraph) -> list[int]:
    """Vertex order greedily minimizing the running boundary width."""
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    placed: set[int] = set()
    order: list[int] = []
    boundary: set[int] = set()

    def width_after(v: int) -> int:
        b = set(boundary)
        b.add(v)
        for w in list(b):
            if all(x in placed or x == v for x in adj[w]):
                b.discard(w)
        return len(b)

    while len(order) < g.n:
        candidates = {w for v in boundary for w in adj[v] if w not in placed}
        if not candidates:
            candidates = {v for v in range(g.n) if v not in placed}
        best = min(candidates, key=lambda v: (width_after(v), -len(adj[v] & placed), v))
        order.append(best)
        placed.add(best)
        boundary.add(best)
        boundary.difference_update(
            w for w in list(boundary) if all(x in placed for x in adj[w])
        )
    return order


def _canon(blocks: tuple[int, ...]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for b in blocks:
        if b not in seen:
            seen[b] = len(seen)
        out.append(seen[b])
    return tuple(out)


def _frontier_count(
    g: MultiGraph, mode: str, order: Sequence[int] | None, max_states: int
) -> int:
    assert mode in ("forest", "connected")
    if mode == "connected":
        if g.n <= 1:
            return 1 << g.m
        if not g.is_connected():
            return 0
    if g.m == 0:
        return 1

    if order is None:
        order = bfs_order(g)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of all vertices")
    pos = [0] * g.n
    for k, v in enumerate(order):
        pos[v] = k
    schedule = sorted(
        range(g.m),
        key=lambda i: (
            max(pos[g.edges[i][0]], pos[g.edges[i][1]]),
            min(pos[g.edges[i][0]], pos[g.edges[i][1]]),
            i,
        ),
    )
    last_use: dict[int, int] = {}
    for t, i in enumerate(schedule):
        u, v = g.edges[i]
        last_use[u] = t
        last_use[v] = t
    retire_at: dict[int, list[int]] = defaultdict(list)
    for v, t in last_use.items():
        retire_at[t].append(v)
    remaining = len(last_use)  # vertices with at least one edge

    active: list[int] = []
    states: dict[tuple[int, ...], int] = {(): 1}
    answer = 0
    peak = 0

    for t, i in enumerate(schedule):
        u, v = g.edges[i]
        for w in (u, v):
            if w not in active:
                active.append(w)
                states = {
                    st + ((max(st) + 1) if st else 0,): c for st, c in states.items()
                }
        peak = max(peak, len(active))
        iu = active.index(u)
        iv = active.index(v)
        new_states: dict[tuple[int, ...], int] = defaultdict(int)
        for st, cnt in states.items():
            new_states[st] += cnt  # skip the edge
            bu, bv = st[iu], st[iv]
            if bu == bv:
                if mode == "connected":
                    new_states[st] += cnt  # a cycle is fine here
                continue
            lo, hi = (bu, bv) if bu < bv else (bv, bu)
            merged = _canon(tuple(lo if b == hi else b for b in st))
            new_states[merged] += cnt
        states = dict(new_states)

        for w in retire_at.get(t, ()):  # retire vertices one at a time
            idx = active.index(w)
            remaining -= 1
            reduced: dict[tuple[int, ...], int] = defaultdict(int)
            for st, cnt in states.items():
                b = st[idx]
                rest = st[:idx] + st[idx + 1:]
                if mode == "connected" and b not in rest:
                    if remaining == 0:
                        answer += cnt
                    continue  # sealed too early: dead branch
                reduced[_canon(rest)] += cnt
            states = dict(reduced)
            active.pop(idx)

        if len(states) > max_states:
            raise StateBudgetError(len(states), len(active), peak)

    if mode == "forest":
        return states.get((), 0)
    return answer


def count_forests_frontier(
    g: MultiGraph, order: Sequence[int] | None = None, max_states: int = DEFAULT_STATE_LIMIT
) -> int:
    """F(G) by dynamic programming over boundary partitions along a vertex
    elimination order (default BFS from vertex 0)."""
    return _frontier_count(g, "forest", order, max_states)


def count_connected_frontier(
    g: MultiGraph, order: Sequence[int] | None = None, max_states: int = DEFAULT_STATE_LIMIT
) -> int:
    """C(G) by the same dynamic program, tracking early-sealed components as
    dead branches."""
    return _frontier_count(g, "connected", order, max_states)


# ---------------------------------------------------------------------------
# auto backend selection

AUTO_ORACLE_BITS = 16


def count_forests_auto(
    g: MultiGraph, max_states: int = DEFAULT_STATE_LIMIT, oracle_bits: int = AUTO_ORACLE_BITS
) -> tuple[int, str]:
    """Cheapest applicable forest counter; returns (count, backend name)."""
    if g.m <= oracle_bits:
        return count_forests_brute(g), "oracle"
    try:
        return count_forests_frontier(g, max_states=max_states), "frontier"
    except StateBudgetError:
        return (
            count_forests_frontier(g, order=greedy_frontier_order(g), max_states=max_states),
            "frontier",
        )


def count_connected_auto(
    g: MultiGraph, max_states: int = DEFAULT_STATE_LIMIT, oracle_bits: int = AUTO_ORACLE_BITS
) -> tuple[int, str]:
    if g.m <= oracle_bits:
        return count_connected_brute(g), "oracle"
    try:
        return count_connected_frontier(g, max_states=max_states), "frontier"
    except StateBudgetError:
        return (
            count_connected_frontier(g, order=greedy_frontier_order(g), max_states=max_states),
            "frontier",
        )


# ---------------------------------------------------------------------------
# chromatic polynomial and acyclic orientations


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficients[k] is the coefficient of q^k."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return IntPolynomial(
            tuple(
                (a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)
                for k in range(size)
            )
        )


def _monomial(n: int) -> IntPolynomial:
    return IntPolynomial((0,) * n + (1,))


def chromatic_polynomial(g: MultiGraph) -> IntPolynomial:
    """Proper-coloring polynomial via deletion-contraction.

    Parallel edges collapse to one, a loop gives the zero polynomial.
    """
    _check_edge_budget(g, CHROMATIC_EDGE_LIMIT, "chromatic polynomial")
    memo: dict[tuple, IntPolynomial] = {}

    def simplify(graph: MultiGraph) -> MultiGraph | None:
        seen: set[tuple[int, int]] = set()
        for u, v in graph.edges:
            if u == v:
                return None
            seen.add((u, v) if u < v else (v, u))
        return MultiGraph(graph.n, sorted(seen))

    def rec(graph: MultiGraph) -> IntPolynomial:
        simple = simplify(graph)
        if simple is None:
            return IntPolynomial(())
        if simple.m == 0:
            return _monomial(simple.n)
        key = _labeled_key(simple)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = rec(simple.delete_edge(0)) - rec(simple.contract_edge(0))
        memo[key] = value
        return value

    return rec(g)


def count_acyclic_orientations(g: MultiGraph) -> int:
    """a(G) = |ch(G, -1)|; a graph with a loop has none."""
    if g.has_loops():
        import logging

        logging.getLogger(__name__).warning(
            "graph has a loop: it admits no acyclic orientation"
        )
        return 0
    return abs(chromatic_polynomial(g)(-1))


def acyclic_orientations_brute(g: MultiGraph) -> int:
    """Direct orientation enumeration with a topological-sort DAG check."""
    _check_edge_budget(g, ORIENTATION_EDGE_LIMIT, "orientation enumeration")
    if g.has_loops():
        return 0
    n, m = g.n, g.m
    count = 0
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
            count += 1
    return count


# ---------------------------------------------------------------------------
# circuits, broken cycles, weakly induced forests


def circuits(g: MultiGraph) -> list[frozenset[int]]:
    """All circuits as edge-index sets: loops, parallel pairs, and
    vertex-simple cycles of length >= 3 (every parallel-edge choice counts)."""
    _check_edge_budget(g, CIRCUIT_EDGE_LIMIT, "circuit enumeration")
    out: list[frozenset[int]] = []
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            out.append(frozenset((i,)))
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            groups[(u, v) if u < v else (v, u)].append(i)
    for members in groups.values():
        out.extend(frozenset(pair) for pair in combinations(members, 2))

    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))

    path_vertices: list[int] = []
    path_edges: list[int] = []
    on_path = [False] * g.n

    def extend(start: int, v: int) -> None:
        for w, e in adj[v]:
            if w == start:
                if len(path_edges) >= 2 and e != path_edges[0] and path_vertices[1] < v:
                    out.append(frozenset(path_edges + [e]))
            elif w > start and not on_path[w]:
                path_vertices.append(w)
                path_edges.append(e)
                on_path[w] = True
                extend(start, w)
                on_path[w] = False
                path_edges.pop()
                path_vertices.pop()

    for s in range(g.n):
        path_vertices = [s]
        path_edges = []
        on_path[s] = True
        extend(s, s)
        on_path[s] = False
    return out


def broken_cycles(g: MultiGraph) -> list[frozenset[int]]:
    """Each circuit minus its largest-labeled edge, deduplicated."""
    seen: set[frozenset[int]] = set()
    for circuit in circuits(g):
        seen.add(circuit - {max(circuit)})
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def broken_cycle_free_counts(g: MultiGraph) -> list[int]:
    """c_k = number of k-edge sets containing no broken cycle, k = 0..m.

    Enumerates exactly the broken-cycle-free sets: when edge i enters, only
    broken cycles whose largest label is i can become complete, so a subset
    containing one is pruned with its whole subtree.
    """
    m = g.m
    by_max: list[list[int]] = [[] for _ in range(m)]
    for broken in broken_cycles(g):
        if broken:
            top = max(broken)
            rest_mask = 0
            for e in broken:
                if e != top:
                    rest_mask |= 1 << e
            by_max[top].append(rest_mask)
    counts = [0] * (m + 1)

    def rec(i: int, mask: int, size: int) -> None:
        if i == m:
            counts[size] += 1
            return
        rec(i + 1, mask, size)
        for rest in by_max[i]:
            if mask & rest == rest:
                return  # taking edge i would complete a broken cycle
        rec(i + 1, mask | (1 << i), size + 1)

    rec(0, 0, 0)
    return counts


def count_broken_cycle_free(g: MultiGraph, k: int) -> int:
    counts = broken_cycle_free_counts(g)
    return counts[k] if 0 <= k <= g.m else 0


def count_weakly_induced_forests(g: MultiGraph) -> int:
    """Acyclic edge sets whose components are induced subgraphs of g.

    Equivalently: S is a forest and no edge outside S joins two vertices of
    the same component of (V, S). A loop never qualifies, and its mere
    presence forces the count to zero (it always sits inside its component).
    """
    _check_edge_budget(g, WEAKLY_INDUCED_EDGE_LIMIT, "weakly induced forests")
    edges = g.edges
    count = 0
    for chosen in iter_forests(g):
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        for i in chosen:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            parent[ru] = rv
        in_forest = set(chosen)
        ok = True
        for j, (u, v) in enumerate(edges):
            if j not in in_forest and find(u) == find(v):
                ok = False
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# score vectors


def count_score_vectors(g: MultiGraph) -> int:
    """Distinct out-degree sequences over all 2^m orientations."""
    _check_edge_budget(g, SCORE_EDGE_LIMIT, "score vector enumeration")
    n, m = g.n, g.m
    edges = g.edges
    seen: set[tuple[int, ...]] = set()
    for mask in range(1 << m):
        out = [0] * n
        for i in range(m):
            u, v = edges[i]
            if mask >> i & 1:
                out[v] += 1
            else:
                out[u] += 1
        seen.add(tuple(out))
    return len(seen)
