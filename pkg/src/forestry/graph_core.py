"""Finite undirected multigraphs: surgery, girth, 2-lifts, named graphs, io, generators.

Vertices are dense integers 0..n-1. Edges are an ordered tuple of (u, v) pairs;
the position of an edge in the tuple is its label (so a file's edge order fixes
the labeling used by broken-cycle counting). Loops (u == v) and parallel edges
are allowed everywhere except where an operation says otherwise. All values are
immutable and all operations are pure, so graphs are safe to share across
threads.
"""

from __future__ import annotations

import math
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence

from .errors import ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        for i, (u, v) in enumerate(norm):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} = ({u}, {v}) out of range for n = {self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        # loops count twice
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def average_degree(self) -> float:
        if self.n == 0:
            return 0.0
        return 2.0 * self.m / self.n

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        deg = self.degrees()
        if not deg:
            return None
        return deg[0] if all(d == deg[0] for d in deg) else None

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge index); a loop appears once at its vertex."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            if u != v:
                adj[v].append((u, i))
        return adj

    def delete_edge(self, i: int) -> "MultiGraph":
        if not 0 <= i < self.m:
            raise IndexError(f"edge index {i} out of range (m = {self.m})")
        return MultiGraph(self.n, self.edges[:i] + self.edges[i + 1:])

    def contract_edge(self, i: int) -> "MultiGraph":
        """Contract a non-loop edge; parallel copies of it become loops at the merged vertex."""
        if not 0 <= i < self.m:
            raise IndexError(f"edge index {i} out of range (m = {self.m})")
        u, v = self.edges[i]
        if u == v:
            raise ValueError("cannot contract a loop")
        a, b = (u, v) if u < v else (v, u)

        def remap(x: int) -> int:
            if x == b:
                return a
            return x - 1 if x > b else x

        new_edges = [
            (remap(x), remap(y)) for j, (x, y) in enumerate(self.edges) if j != i
        ]
        return MultiGraph(self.n - 1, new_edges)

    def without_loops(self) -> "MultiGraph":
        return MultiGraph(self.n, [e for e in self.edges if e[0] != e[1]])

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Apply a vertex permutation (perm[old] = new); edge order is preserved."""
        return MultiGraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def permute_edges(self, order: Sequence[int]) -> "MultiGraph":
        """Reorder the edge list (i.e. relabel the edges)."""
        return MultiGraph(self.n, [self.edges[i] for i in order])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        adj = self.adjacency()
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y, _ in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def describe(self) -> str:
        return f"G(n={self.n}, m={self.m})"


def disjoint_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return MultiGraph(g.n + h.n, list(g.edges) + shifted)


def normalized_edge_multiset(g: MultiGraph) -> tuple[Edge, ...]:
    """Edge multiset with each pair sorted, as a sorted tuple (labels forgotten)."""
    return tuple(sorted((u, v) if u <= v else (v, u) for u, v in g.edges))


# ---------------------------------------------------------------------------
# girth


@dataclass(frozen=True)
class GirthReport:
    """Shortest-cycle length; math.inf with no witness for forests.

    A loop is a cycle of length 1 and a parallel pair a cycle of length 2.
    The witness lists the vertices of one shortest cycle in order.
    """

    girth: float
    witness: tuple[int, ...] | None

    @property
    def is_acyclic(self) -> bool:
        return self.girth == math.inf


def girth(g: MultiGraph) -> GirthReport:
    for u, v in g.edges:
        if u == v:
            return GirthReport(1, (u,))
    seen_pairs: set[Edge] = set()
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            return GirthReport(2, key)
        seen_pairs.add(key)

    adj = g.adjacency()
    best: tuple[int, int, int, int] | None = None  # (length, root, x, w)
    best_len = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        parent_edge = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best_len:
                continue
            for w, e in adj[x]:
                if dist[w] == -1:
                    dist[w] = dist[x] + 1
                    parent[w] = x
                    parent_edge[w] = e
                    queue.append(w)
                elif e != parent_edge[x]:
                    cand = dist[x] + dist[w] + 1
                    if cand < best_len:
                        best_len = cand
                        best = (cand, root, x, w)
        if best_len == 3:
            break
    if best is None:
        return GirthReport(math.inf, None)

    _, root, x, w = best
    # walk both endpoints up to the root; minimality makes the result a simple cycle
    dist = [-1] * g.n
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        a = queue.popleft()
        for b, e in adj[a]:
            if dist[b] == -1:
                dist[b] = dist[a] + 1
                parent[b] = a
                parent_edge[b] = e
                queue.append(b)

    def path_to_root(a: int) -> list[int]:
        out = [a]
        while out[-1] != root:
            out.append(parent[out[-1]])
        return out

    left = path_to_root(x)          # x .. root
    right = path_to_root(w)[:-1]    # w .. child of root
    cycle = tuple(reversed(left)) + tuple(right)
    if len(cycle) != best_len or len(set(cycle)) != best_len:
        raise RuntimeError("internal error: girth witness reconstruction failed")
    return GirthReport(int(best_len), cycle)


# ---------------------------------------------------------------------------
# 2-lifts


@dataclass(frozen=True)
class SignedLift:
    """A 2-lift of `base`, one sign per base edge.

    Sign +1 at (u, v) lifts to the matching ((u,0),(v,0)), ((u,1),(v,1));
    sign -1 lifts to ((u,0),(v,1)), ((u,1),(v,0)). Layer i vertex u gets
    id u + i*n in the expanded graph.
    """

    base: MultiGraph
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.signs) != self.base.m:
            raise ValueError("need exactly one sign per base edge")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def expand(self) -> MultiGraph:
        n = self.base.n
        out: list[Edge] = []
        for (u, v), s in zip(self.base.edges, self.signs):
            if s == 1:
                out.append((u, v))
                out.append((u + n, v + n))
            else:
                out.append((u, v + n))
                out.append((u + n, v))
        return MultiGraph(2 * n, out)


def expand_lift(lift: SignedLift) -> MultiGraph:
    return lift.expand()


def signs_from_string(text: str) -> tuple[int, ...]:
    table = {"+": 1, "-": -1}
    try:
        return tuple(table[c] for c in text.strip())
    except KeyError as exc:
        raise ValueError(f"sign string may only contain + and -: {text!r}") from exc


def cross_edge_cover(g: MultiGraph, i: int) -> MultiGraph:
    """Double cover of g that crosses the two copies of edge i between the layers.

    Built literally: take the disjoint union g + g, drop both copies of edge i,
    and reconnect them across the layers. Identical (as an edge multiset) to
    expanding the lift with sign -1 at edge i and +1 elsewhere.
    """
    if not 0 <= i < g.m:
        raise IndexError(f"edge index {i} out of range (m = {g.m})")
    u, v = g.edges[i]
    if u == v:
        raise ValueError("cannot cross a loop")
    n = g.n
    out: list[Edge] = []
    for j, (x, y) in enumerate(g.edges):
        if j != i:
            out.append((x, y))
    for j, (x, y) in enumerate(g.edges):
        if j != i:
            out.append((x + n, y + n))
    out.append((u, v + n))
    out.append((u + n, v))
    return MultiGraph(2 * n, out)


@dataclass(frozen=True)
class TowerResult:
    graphs: tuple[MultiGraph, ...]
    girths: tuple[float, ...]
    reached_target: bool


def random_girth_tower(
    g0: MultiGraph,
    levels: int,
    target_girth: int | None = None,
    seed: int = 0,
    tries_per_level: int = 64,
) -> TowerResult:
    """Iterated random 2-lifts of g0, rejection-sampling sign vectors per level.

    Each level keeps the first lift whose girth strictly exceeds the current
    girth, falling back to the best draw otherwise (girth never decreases under
    a 2-lift). Deterministic for a fixed seed. Stops early once target_girth is
    reached; reached_target is False only when a target was given and missed.
    """
    if not g0.is_connected():
        raise ValueError("tower base must be connected")
    if girth(g0).is_acyclic:
        raise ValueError("tower base must contain a cycle")
    rng = random.Random(seed)
    graphs = [g0]
    girths = [girth(g0).girth]
    for _ in range(levels):
        if target_girth is not None and girths[-1] >= target_girth:
            break
        current = graphs[-1]
        g_now = girths[-1]
        best: MultiGraph | None = None
        best_girth = -1.0
        for _ in range(tries_per_level):
            signs = tuple(rng.choice((1, -1)) for _ in range(current.m))
            lifted = SignedLift(current, signs).expand()
            gg = girth(lifted).girth
            if gg > best_girth:
                best, best_girth = lifted, gg
            if gg > g_now:
                break
        assert best is not None
        graphs.append(best)
        girths.append(best_girth)
    reached = target_girth is None or girths[-1] >= target_girth
    return TowerResult(tuple(graphs), tuple(girths), reached)


# ---------------------------------------------------------------------------
# named graphs


def _cycle(k: int) -> MultiGraph:
    if k < 1:
        raise ValueError("cycle needs at least one vertex")
    if k == 1:
        return MultiGraph(1, [(0, 0)])
    return MultiGraph(k, [(i, (i + 1) % k) for i in range(k)])


def _complete(k: int) -> MultiGraph:
    return MultiGraph(k, list(combinations(range(k), 2)))


def _petersen() -> MultiGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return MultiGraph(10, edges)


def _cube() -> MultiGraph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            if v < v ^ bit:
                edges.append((v, v ^ bit))
    return MultiGraph(8, edges)


def _k33() -> MultiGraph:
    return MultiGraph(6, [(i, 3 + j) for i in range(3) for j in range(3)])


def lcf_graph(shifts: Sequence[int], repeats: int) -> MultiGraph:
    """Hamiltonian cubic graph from LCF notation: a cycle 0..n-1 plus chords i -> i+shift."""
    k = len(shifts)
    n = k * repeats
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        j = (i + shifts[i % k]) % n
        if i < j:
            edges.append((i, j))
    return MultiGraph(n, edges)


def _tutte_coxeter() -> MultiGraph:
    # the unique cubic graph of girth 8 on 30 vertices; vertex order is Hamiltonian
    return lcf_graph([-13, -9, 7, -7, 9, 13], 5)


_NAMED: dict[str, Callable[[], MultiGraph]] = {
    "petersen": _petersen,
    "tutte_coxeter": _tutte_coxeter,
    "cube": _cube,
    "k33": _k33,
}


def named_graph(key: str) -> MultiGraph:
    """Registry of canonical constructions: cycle(k), complete(k), petersen,
    tutte_coxeter, cube, k33; kN is accepted as an alias for complete(N)."""
    text = key.strip().lower()
    if text in _NAMED:
        return _NAMED[text]()
    match = re.fullmatch(r"cycle\((\d+)\)", text)
    if match:
        return _cycle(int(match.group(1)))
    match = re.fullmatch(r"complete\((\d+)\)", text)
    if match:
        return _complete(int(match.group(1)))
    match = re.fullmatch(r"k(\d+)", text)
    if match:
        return _complete(int(match.group(1)))
    raise KeyError(f"unknown graph name: {key!r}")


def named_graph_keys() -> list[str]:
    return sorted(_NAMED) + ["cycle(k)", "complete(k)", "kN"]


# ---------------------------------------------------------------------------
# file formats


def parse_edge_list(text: str | Iterable[str]) -> MultiGraph:
    """Parse the plain edge-list format.

    First meaningful line: the vertex count n. Every following line: one
    "u v" pair, 0-based. Blank lines and '#' comments are ignored. File order
    defines the edge labels.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError("expected a single vertex count on the first line", lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[0]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"bad vertex id in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range in {line!r} (n = {n})", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: no vertex count found")
    return MultiGraph(n, edges)


def format_edge_list(g: MultiGraph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> MultiGraph:
    """Decode one graph6 string (simple graphs, n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("invalid graph6 character")
    n = data[0]
    if n == 63:
        raise ParseError("graph6 inputs with n >= 63 are not supported")
    body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for b in body:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return MultiGraph(n, edges)


def to_graph6(g: MultiGraph) -> str:
    """Encode a simple graph (no loops, no parallel edges) as graph6."""
    if g.n > 62:
        raise ValueError("graph6 writer supports n <= 62")
    pairs = set()
    for u, v in g.edges:
        if u == v:
            raise ValueError("graph6 cannot represent loops")
        key = (u, v) if u < v else (v, u)
        if key in pairs:
            raise ValueError("graph6 cannot represent parallel edges")
        pairs.add(key)
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in pairs else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        byte = 0
        for b in bits[k:k + 6]:
            byte = (byte << 1) | b
        out.append(chr(63 + byte))
    return "".join(out)


def load_graph(spec: str) -> MultiGraph:
    """Resolve a CLI graph argument: named-graph key first, then a file path
    (.g6 suffix selects graph6, anything else the edge-list format)."""
    try:
        return named_graph(spec)
    except KeyError:
        pass
    from pathlib import Path

    path = Path(spec)
    if not path.exists():
        raise ParseError(f"not a known graph name and not a file: {spec!r}")
    text = path.read_text()
    if path.suffix == ".g6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise ParseError(f"no graph6 data in {spec!r}")
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# isomorphism (brute force, small graphs only)


def _multiplicity_table(g: MultiGraph) -> list[dict[int, int]]:
    table: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        table[u][v] = table[u].get(v, 0) + 1
        if u != v:
            table[v][u] = table[v].get(u, 0) + 1
    return table


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    """Backtracking isomorphism test; intended for graphs with at most ~10 vertices."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    tg, th = _multiplicity_table(g), _multiplicity_table(h)
    deg_g, deg_h = g.degrees(), h.degrees()
    loops_g = [tg[v].get(v, 0) for v in range(g.n)]
    loops_h = [th[v].get(v, 0) for v in range(h.n)]
    # map high-degree vertices first, preferring ones adjacent to mapped ones
    order: list[int] = []
    remaining = set(range(g.n))
    while remaining:
        anchored = [v for v in remaining if any(u in order for u in tg[v])]
        pool = anchored or list(remaining)
        nxt = max(pool, key=lambda v: (deg_g[v], -v))
        order.append(nxt)
        remaining.discard(nxt)
    mapping: dict[int, int] = {}
    used = [False] * h.n

    def assign(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in range(h.n):
            if used[w] or deg_h[w] != deg_g[v] or loops_h[w] != loops_g[v]:
                continue
            ok = True
            for x, mult in tg[v].items():
                if x == v:
                    continue
                if x in mapping and th[w].get(mapping[x], 0) != mult:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if assign(k + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return assign(0)


# ---------------------------------------------------------------------------
# exhaustive generators (test corpora)


@lru_cache(maxsize=None)
def _pair_index_perms(n: int) -> tuple[tuple[int, ...], ...]:
    pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        tables.append(
            tuple(index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs)
        )
    return tuple(tables)


def _canonical_pair_mask(mask: int, n: int) -> int:
    best = mask
    for table in _pair_index_perms(n):
        out = 0
        s = mask
        while s:
            b = (s & -s).bit_length() - 1
            s &= s - 1
            out |= 1 << table[b]
        if out < best:
            best = out
    return best


def _mask_to_graph(mask: int, n: int) -> MultiGraph:
    pairs = list(combinations(range(n), 2))
    edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
    return MultiGraph(n, edges)


_CONNECTED_CACHE: dict[int, list[MultiGraph]] = {}


def connected_graphs(n: int) -> list[MultiGraph]:
    """All connected simple graphs on exactly n vertices, one per isomorphism
    class. Exhaustive generation is feasible for n <= 7."""
    if n < 1:
        raise ValueError("n must be positive")
    if n in _CONNECTED_CACHE:
        return _CONNECTED_CACHE[n]
    if n == 1:
        result = [MultiGraph(1, [])]
    else:
        prev = connected_graphs(n - 1)
        pairs = list(combinations(range(n), 2))
        index = {p: k for k, p in enumerate(pairs)}
        seen: set[int] = set()
        result = []
        for g in prev:
            base_mask = 0
            for u, v in g.edges:
                base_mask |= 1 << index[(u, v) if u < v else (v, u)]
            for attach in range(1, 1 << (n - 1)):
                mask = base_mask
                for w in range(n - 1):
                    if attach >> w & 1:
                        mask |= 1 << index[(w, n - 1)]
                canon = _canonical_pair_mask(mask, n)
                if canon not in seen:
                    seen.add(canon)
                    result.append(_mask_to_graph(canon, n))
    _CONNECTED_CACHE[n] = result
    return result


def connected_graphs_upto(n_max: int) -> list[MultiGraph]:
    out: list[MultiGraph] = []
    for n in range(1, n_max + 1):
        out.extend(connected_graphs(n))
    return out


def _edge_insertion(g: MultiGraph, i: int, j: int) -> MultiGraph:
    # subdivide edges i and j and join the two new vertices; keeps 3-regularity
    a, b = g.edges[i]
    c, d = g.edges[j]
    x, y = g.n, g.n + 1
    edges = [e for k, e in enumerate(g.edges) if k not in (i, j)]
    edges += [(a, x), (x, b), (c, y), (y, d), (x, y)]
    return MultiGraph(g.n + 2, edges)


_CUBIC_CACHE: dict[int, list[MultiGraph]] = {}


def cubic_graphs(n: int) -> list[MultiGraph]:
    """All connected cubic (3-regular) simple graphs on exactly n vertices, up
    to isomorphism, generated from K4 by two-edge subdivide-and-join steps.
    Intended for n <= 12; exhaustiveness for n <= 10 is asserted by the tests
    against the known counts (1, 2, 5, 19)."""
    import numpy as np

    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even vertex count >= 4")
    if n in _CUBIC_CACHE:
        return _CUBIC_CACHE[n]
    if n == 4:
        result = [_complete(4)]
    else:
        def fingerprint(g: MultiGraph) -> tuple:
            adj = np.zeros((g.n, g.n))
            for u, v in g.edges:
                adj[u, v] += 1
                adj[v, u] += 1
            eig = tuple(round(x, 6) for x in np.linalg.eigvalsh(adj))
            return (girth(g).girth, eig)

        buckets: dict[tuple, list[MultiGraph]] = {}
        result = []
        for base in cubic_graphs(n - 2):
            for i, j in combinations(range(base.m), 2):
                cand = _edge_insertion(base, i, j)
                key = fingerprint(cand)
                group = buckets.setdefault(key, [])
                if not any(is_isomorphic(cand, other) for other in group):
                    group.append(cand)
                    result.append(cand)
    _CUBIC_CACHE[n] = result
    return result


def cubic_graphs_upto(n_max: int) -> list[MultiGraph]:
    out: list[MultiGraph] = []
    for n in range(4, n_max + 1, 2):
        out.extend(cubic_graphs(n))
    return out


# ---------------------------------------------------------------------------
# random generators (seeded corpora)


def random_multigraph(
    rng: random.Random, n: int, m: int, loop_probability: float = 0.0
) -> MultiGraph:
    edges: list[Edge] = []
    for _ in range(m):
        if n > 0 and rng.random() < loop_probability:
            v = rng.randrange(n)
            edges.append((v, v))
        else:
            u = rng.randrange(n)
            v = rng.randrange(n)
            edges.append((u, v))
    return MultiGraph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra_edges: int = 0) -> MultiGraph:
    """Random connected simple graph: random tree plus up to extra_edges chords."""
    edges: list[Edge] = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    present = {(min(u, v), max(u, v)) for u, v in edges}
    candidates = [p for p in combinations(range(n), 2) if p not in present]
    rng.shuffle(candidates)
    edges.extend(candidates[:extra_edges])
    return MultiGraph(n, edges)
