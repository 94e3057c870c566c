"""Exact rational linear algebra and walk counting.

Matrices are plain lists of lists of Fractions. Determinants go through
fraction-free integer Bareiss elimination after clearing row denominators, so
no floating point ever touches a reported count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

from .errors import BudgetError
from .graph_core import MultiGraph

RationalMatrix = list[list[Fraction]]

RANDOM_CLUSTER_EDGE_LIMIT = 30
WALK_MOMENT_LIMIT = 40


def laplacian(g: MultiGraph, weights: Sequence[Fraction] | None = None) -> RationalMatrix:
    """Weighted Laplacian; parallel edges add their weights, loops are ignored
    entirely (they never contribute to spanning-tree or forest weights)."""
    if weights is None:
        weights = [Fraction(1)] * g.m
    if len(weights) != g.m:
        raise ValueError(f"need {g.m} edge weights, got {len(weights)}")
    mat = [[Fraction(0)] * g.n for _ in range(g.n)]
    for (u, v), w in zip(g.edges, weights):
        if u == v:
            continue
        w = Fraction(w)
        mat[u][u] += w
        mat[v][v] += w
        mat[u][v] -= w
        mat[v][u] -= w
    return mat


def add_scaled_identity(mat: RationalMatrix, alpha: Fraction) -> RationalMatrix:
    alpha = Fraction(alpha)
    out = [row[:] for row in mat]
    for i in range(len(out)):
        out[i][i] += alpha
    return out


def delete_row_col(mat: RationalMatrix, k: int) -> RationalMatrix:
    return [
        [x for j, x in enumerate(row) if j != k]
        for i, row in enumerate(mat)
        if i != k
    ]


def _det_int_bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_exact(mat: RationalMatrix) -> Fraction:
    """Exact determinant: clear each row's denominators, run integer Bareiss."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    scale = Fraction(1)
    int_rows: list[list[int]] = []
    for row in mat:
        fracs = [Fraction(x) for x in row]
        denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
        scale *= denom
        int_rows.append([int(f * denom) for f in fracs])
    return Fraction(_det_int_bareiss(int_rows), 1) / scale


def spanning_tree_count_det(g: MultiGraph, drop_index: int = 0) -> int:
    """Matrix-tree count: determinant of the Laplacian with one row and column
    removed (which one is irrelevant); 0 for disconnected graphs."""
    if g.n == 0:
        return 1
    if g.n == 1:
        return 1
    minor = delete_row_col(laplacian(g), drop_index)
    value = det_exact(minor)
    assert value.denominator == 1
    return int(value)


def forest_weight_sum(g: MultiGraph, alpha: Fraction) -> Fraction:
    """det(L + alpha*I): the sum over spanning forests of alpha^k times the
    product of component sizes (every vertex counts, singletons included)."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return det_exact(add_scaled_identity(laplacian(g), alpha))


# ---------------------------------------------------------------------------
# closed walks


@dataclass(frozen=True)
class WalkMoments:
    """Closed-walk counts from the root of the infinite d-regular tree;
    moments[k] is the number of closed k-step walks."""

    d: int
    moments: tuple[int, ...]


def tree_walk_moments(d: int, k_max: int) -> WalkMoments:
    """Dynamic program over (steps, distance from root): the root offers d
    forward moves, every other vertex d-1 forward plus one move back."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    if k_max > WALK_MOMENT_LIMIT:
        raise BudgetError(f"walk moments limited to k <= {WALK_MOMENT_LIMIT}")
    ways = [0] * (k_max + 2)
    ways[0] = 1
    moments = [1]
    for _ in range(k_max):
        nxt = [0] * (k_max + 2)
        for dist in range(k_max + 1):
            w = ways[dist]
            if not w:
                continue
            nxt[dist + 1] += w * (d if dist == 0 else d - 1)
            if dist > 0:
                nxt[dist - 1] += w
        ways = nxt
        moments.append(ways[0])
    return WalkMoments(d, tuple(moments))


def adjacency_matrix(g: MultiGraph) -> list[list[int]]:
    """Integer adjacency matrix; a loop adds 2 on the diagonal so row sums are degrees."""
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        if u == v:
            a[u][u] += 2
        else:
            a[u][v] += 1
            a[v][u] += 1
    return a


def count_closed_walks(g: MultiGraph, k: int) -> int:
    """Trace of A^k, exactly."""
    n = g.n
    a = adjacency_matrix(g)
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(k):
        power = [
            [sum(power[i][x] * a[x][j] for x in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return sum(power[i][i] for i in range(n))


# ---------------------------------------------------------------------------
# random-cluster partition function


def random_cluster_Z(g: MultiGraph, q: Fraction, w: Fraction) -> Fraction:
    """Z(q, w) = sum over edge subsets A of q^(components) * w^|A|, exactly."""
    if g.m > RANDOM_CLUSTER_EDGE_LIMIT:
        raise BudgetError(
            f"random-cluster enumeration: m = {g.m} exceeds {RANDOM_CLUSTER_EDGE_LIMIT}"
        )
    q = Fraction(q)
    w = Fraction(w)
    n, m = g.n, g.m
    edges = g.edges
    tally: dict[tuple[int, int], int] = {}
    for mask in range(1 << m):
        parent = list(range(n))
        comps = n
        size = 0
        mm = mask
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            size += 1
            u, v = edges[i]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                parent[u] = v
                comps -= 1
        key = (comps, size)
        tally[key] = tally.get(key, 0) + 1
    q_pow = [q**k for k in range(n + 1)]
    w_pow = [w**s for s in range(m + 1)]
    return sum(
        (count * q_pow[comps] * w_pow[size] for (comps, size), count in tally.items()),
        start=Fraction(0),
    )
