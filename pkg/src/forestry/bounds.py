"""Closed-form upper bounds on forest and connected-spanning-subgraph counts,
Kesten-McKay quadrature, and the two-parameter bound optimization behind the
per-degree constant tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import BudgetError, QuadratureError, StateBudgetError
from .graph_core import MultiGraph

TABLE_DEGREES = (5, 6, 7, 8, 9)


def entropy(x: float) -> float:
    """Natural-log binary entropy x*ln(1/x) + (1-x)*ln(1/(1-x)); 0 at the endpoints."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log(x) - (1.0 - x) * math.log(1.0 - x)


def binomial_tail_bound(m: int, n: int) -> float:
    """exp(m * H(n/m)), an upper bound for sum_{k<=n} C(m, k) when n <= m/2."""
    if n < 0 or 2 * n > m:
        raise ValueError(f"need 0 <= n <= m/2, got n = {n}, m = {m}")
    return math.exp(m * entropy(n / m))


# ---------------------------------------------------------------------------
# bound reports


@dataclass(frozen=True)
class BoundReport:
    """A named bound value with the parameters that produced it."""

    name: str
    value: float
    params: dict[str, float] = field(default_factory=dict)
    valid_for: str = ""

    def __post_init__(self):
        if not math.isfinite(self.value) or self.value <= 0:
            raise ValueError(f"bound value must be finite and positive: {self.value}")


def degree_product_bound(g: MultiGraph) -> BoundReport:
    """Per-vertex form of F(G) <= prod_v (deg(v) + 1)."""
    product = 1
    for d in g.degrees():
        product *= d + 1
    per_vertex = product ** (1.0 / g.n) if g.n else 1.0
    return BoundReport(
        "degree-product",
        per_vertex,
        params={"product": float(product), "n": float(g.n)},
        valid_for="any multigraph",
    )


def average_degree_bound(dbar: float) -> BoundReport:
    """Per-vertex forest bound exp((dbar/2) H(2/dbar)) for average degree >= 4."""
    if dbar < 4:
        raise ValueError(f"average-degree forest bound needs dbar >= 4, got {dbar}")
    value = math.exp(dbar / 2 * entropy(2 / dbar))
    return BoundReport(
        "average-degree", value, params={"dbar": dbar}, valid_for="average degree >= 4"
    )


# ---------------------------------------------------------------------------
# Kesten-McKay measure

# density d*sqrt(4(d-1) - x^2) / (2*pi*(d^2 - x^2)) on (-2*sqrt(d-1), 2*sqrt(d-1))


@dataclass(frozen=True)
class KMQuadrature:
    """Fixed quadrature rule for the spectral measure of the infinite d-regular
    tree; nodes use the substitution x = 2*sqrt(d-1)*sin(theta), which removes
    the square-root endpoint singularity."""

    d: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    def integrate(self, f: Callable[[float], float]) -> float:
        return math.fsum(w * f(x) for x, w in zip(self.nodes, self.weights))


@lru_cache(maxsize=None)
def km_rule(d: int, order: int = 400) -> KMQuadrature:
    import numpy as np

    if d < 2:
        raise ValueError("degree must be at least 2")
    radius = 2.0 * math.sqrt(d - 1)
    theta, gl_weights = np.polynomial.legendre.leggauss(order)
    theta = theta * (math.pi / 2)
    gl_weights = gl_weights * (math.pi / 2)
    nodes = []
    weights = []
    for t, w in zip(theta, gl_weights):
        x = radius * math.sin(t)
        cos_t = math.cos(t)
        density = d * radius * radius * cos_t * cos_t / (2 * math.pi * (d * d - x * x))
        nodes.append(x)
        weights.append(w * density)
    return KMQuadrature(d, tuple(nodes), tuple(weights))


def km_integrate(
    d: int,
    f: Callable[[float], float],
    tol: float = 1e-10,
    start_order: int = 100,
    max_order: int = 6400,
) -> float:
    """Integrate f against the Kesten-McKay measure by doubling the rule order
    until two successive values agree within tol (absolute for O(1) values,
    relative beyond, since float64 cannot resolve 1e-10 absolutely on large
    moments)."""
    order = start_order
    prev = km_rule(d, order).integrate(f)
    while order < max_order:
        order *= 2
        cur = km_rule(d, order).integrate(f)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise QuadratureError(
        f"Kesten-McKay quadrature did not converge to {tol} by order {max_order}"
    )


def km_log_integral(d: int, gamma: float) -> float:
    """Closed form of the log-moment integral of ln(1 - gamma*x) against the
    Kesten-McKay measure, valid for |gamma| < 1/(2*sqrt(d-1))."""
    radius = 1.0 / (2.0 * math.sqrt(d - 1))
    if abs(gamma) >= radius:
        raise ValueError(f"need |gamma| < {radius}, got {gamma}")
    if gamma == 0.0:
        return 0.0
    g2 = gamma * gamma
    eta = (1.0 - math.sqrt(1.0 - 4.0 * (d - 1) * g2)) / (2.0 * (d - 1) * g2)
    return -math.log(eta * ((d - eta) / (d - 1)) ** ((d - 2) / 2))


def log_shifted_km_integral(d: int, alpha: float) -> float:
    """Integral of ln(d + alpha - x) against the Kesten-McKay measure, via the
    closed form (the shift keeps gamma = 1/(d+alpha) strictly inside the disk)."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return math.log(d + alpha) + km_log_integral(d, 1.0 / (d + alpha))


def kahale_schulman_bound(d: int) -> BoundReport:
    """Spectral per-vertex forest bound for d-regular graphs:
    ((d+1)/eta) * ((d-1)/(d-eta))^((d-2)/2)."""
    if d < 3:
        raise ValueError("needs degree d >= 3")
    eta = ((d + 1) ** 2 - (d + 1) * math.sqrt(d * d - 2 * d + 5)) / (2 * (d - 1))
    value = (d + 1) / eta * ((d - 1) / (d - eta)) ** ((d - 2) / 2)
    return BoundReport(
        "kahale-schulman", value, params={"d": float(d), "eta": eta}, valid_for="d-regular"
    )


# ---------------------------------------------------------------------------
# component-split bound (the table constants)


def split_forest_bound(d: int, alpha: float, c: float) -> float:
    """Per-vertex forest rate max of the two branches of the component-split
    argument: forests with at most c*n components weighted through
    det(L + alpha*I), the rest through the binomial tail.

    Requires 0 < alpha <= 1 (so the weight correction is one-sided) and
    0 <= c <= 1 with 2(1-c)/d <= 1/2.
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if not 0 <= c <= 1:
        raise ValueError(f"c must lie in [0, 1], got {c}")
    tail_arg = 2 * (1 - c) / d
    if tail_arg > 0.5:
        raise ValueError(f"2(1-c)/d = {tail_arg} exceeds 1/2; binomial tail bound invalid")
    det_rate = math.exp(log_shifted_km_integral(d, alpha) + c * math.log(1 / alpha))
    tail_rate = math.exp(d / 2 * entropy(tail_arg))
    return max(det_rate, tail_rate)


def _split_rates(d: int, alpha: float, c: float) -> tuple[float, float]:
    det_rate = math.exp(log_shifted_km_integral(d, alpha) + c * math.log(1 / alpha))
    tail_rate = math.exp(d / 2 * entropy(2 * (1 - c) / d))
    return det_rate, tail_rate


def _golden_min(f: Callable[[float], float], lo: float, hi: float, iters: int = 90) -> float:
    ratio = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    x1 = b - ratio * (b - a)
    x2 = a + ratio * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - ratio * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + ratio * (b - a)
            f2 = f(x2)
    return (a + b) / 2


@lru_cache(maxsize=None)
def optimize_split_bound(d: int) -> BoundReport:
    """Minimize the component-split rate over (alpha, c).

    The determinant branch increases with c and the tail branch decreases, so
    the minimax sits where the two rates cross; we bisect on c with the inner
    alpha minimized by golden section, then assert the two rates agree to 1e-4.
    """
    if not 5 <= d <= 12:
        raise ValueError(f"split-bound optimization supports 5 <= d <= 12, got {d}")

    def best_alpha(c: float) -> float:
        return _golden_min(
            lambda a: log_shifted_km_integral(d, a) + c * math.log(1 / a), 1e-6, 1.0
        )

    def gap(c: float) -> float:
        a = best_alpha(c)
        det_rate, tail_rate = _split_rates(d, a, c)
        return det_rate - tail_rate

    lo, hi = 0.0, 1.0
    if gap(lo) >= 0:
        c_star = lo
    else:
        for _ in range(60):
            mid = (lo + hi) / 2
            if gap(mid) < 0:
                lo = mid
            else:
                hi = mid
        c_star = (lo + hi) / 2
    alpha_star = best_alpha(c_star)
    det_rate, tail_rate = _split_rates(d, alpha_star, c_star)
    value = max(det_rate, tail_rate)
    if abs(det_rate - tail_rate) > 1e-4 * value:
        raise QuadratureError(
            f"split-bound optimizer failed to equalize the branches at d={d}: "
            f"{det_rate} vs {tail_rate}"
        )
    return BoundReport(
        "component-split",
        value,
        params={
            "d": float(d),
            "alpha": alpha_star,
            "c": c_star,
            "det_rate": det_rate,
            "tail_rate": tail_rate,
        },
        valid_for="d-regular",
    )


# ---------------------------------------------------------------------------
# 4-regular rate


@dataclass(frozen=True)
class FourRegularRates:
    """The two per-vertex growth rates in the 4-regular forest argument:
    few-edge forests via the binomial tail, near-spanning ones via the
    spanning-tree growth rate (27/8)^n times a small deletion tail."""

    epsilon: float
    tail_rate: float
    tree_rate: float

    @property
    def value(self) -> float:
        return max(self.tail_rate, self.tree_rate)


def four_regular_rates(epsilon: float) -> FourRegularRates:
    if not 0 < epsilon < 0.5:
        raise ValueError(f"epsilon must lie in (0, 1/2), got {epsilon}")
    tail_rate = math.exp(2 * entropy((1 - epsilon) / 2))
    tree_rate = 27 / 8 * math.exp(entropy(epsilon))
    return FourRegularRates(epsilon, tail_rate, tree_rate)


def minimize_four_regular_rate() -> FourRegularRates:
    eps = _golden_min(lambda e: four_regular_rates(e).value, 1e-6, 0.499)
    return four_regular_rates(eps)


# ---------------------------------------------------------------------------
# connected-subgraph bounds


def janson_connected_bound(d: int) -> BoundReport:
    """Per-vertex bound 2^(d/2) (1 - 2^-d) exp(d / (2^d (2^d - 1))) on C(G)
    for d-regular graphs, from the second moment of isolated-vertex events."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    two_d = 2.0**d
    value = 2 ** (d / 2) * (1 - 1 / two_d) * math.exp(d / (two_d * (two_d - 1)))
    return BoundReport(
        "janson-connected",
        value,
        params={
            "d": float(d),
            "isolation_probability": 1 / two_d,
            "pair_overlap_per_vertex": d / 2 ** (2 * d - 1),
        },
        valid_for="d-regular, counts connected spanning subgraphs",
    )


def average_connected_bound(dbar: float, n: int) -> float:
    """Total-count bound C(G) <= (2/(dbar-2)) exp(n (dbar/2) H(2/dbar)) for
    average degree in (2, 4], via the random-cluster inequality at
    q = (dbar-2)/2."""
    if not 2 < dbar <= 4:
        raise ValueError(f"average degree must lie in (2, 4], got {dbar}")
    return 2 / (dbar - 2) * math.exp(n * dbar / 2 * entropy(2 / dbar))


# ---------------------------------------------------------------------------
# bound suite


@dataclass(frozen=True)
class SuiteEntry:
    """One evaluated bound next to the exact quantity it must dominate.

    scope is "per-vertex" or "total"; observed is None when the exact count
    was out of budget, and satisfied mirrors that.
    """

    report: BoundReport
    quantity: str
    scope: str
    observed: float | None
    satisfied: bool | None


def _nth_root(count: int, n: int) -> float:
    if n == 0:
        return 1.0
    return math.exp(math.log(count) / n) if count > 1 else float(count)


def bound_suite(g: MultiGraph, max_states: int = 500_000) -> list[SuiteEntry]:
    """Evaluate every bound whose precondition g satisfies, next to exact
    counts where budgets allow. Violations are entries with satisfied=False,
    never exceptions."""
    from . import exact_count

    entries: list[SuiteEntry] = []
    forest_count: int | None = None
    connected_count: int | None = None
    try:
        forest_count, _ = exact_count.count_forests_auto(g, max_states=max_states)
    except (BudgetError, StateBudgetError):
        pass
    if g.is_connected():
        try:
            connected_count, _ = exact_count.count_connected_auto(g, max_states=max_states)
        except (BudgetError, StateBudgetError):
            pass

    forest_rate = _nth_root(forest_count, g.n) if forest_count is not None else None
    connected_rate = _nth_root(connected_count, g.n) if connected_count is not None else None

    def add(report: BoundReport, quantity: str, scope: str, observed: float | None):
        ok = None if observed is None else bool(report.value >= observed - 1e-12)
        entries.append(SuiteEntry(report, quantity, scope, observed, ok))

    trivial = BoundReport(
        "trivial-edge",
        2.0 ** (g.m / g.n) if g.n else 1.0,
        params={"m": float(g.m), "n": float(g.n)},
        valid_for="any multigraph",
    )
    add(trivial, "forests", "per-vertex", forest_rate)
    add(degree_product_bound(g), "forests", "per-vertex", forest_rate)

    dbar = g.average_degree
    if dbar >= 4:
        add(average_degree_bound(dbar), "forests", "per-vertex", forest_rate)

    d = g.regular_degree()
    if d is not None and d >= 3:
        add(kahale_schulman_bound(d), "forests", "per-vertex", forest_rate)
        if 5 <= d <= 9:
            add(optimize_split_bound(d), "forests", "per-vertex", forest_rate)
    if g.is_connected():
        if d is not None and d >= 1:
            add(janson_connected_bound(d), "connected", "per-vertex", connected_rate)
        if 2 < dbar <= 4:
            report = BoundReport(
                "average-connected",
                average_connected_bound(dbar, g.n),
                params={"dbar": dbar, "n": float(g.n), "q": (dbar - 2) / 2},
                valid_for="connected, average degree in (2, 4], total count",
            )
            add(
                report,
                "connected",
                "total",
                float(connected_count) if connected_count is not None else None,
            )
    return entries


# ---------------------------------------------------------------------------
# tables


def table_rows(which: int) -> list[dict[str, float]]:
    """The per-degree bound tables for d = 5..9.

    Table 1 columns: the optimized constant, the spectral bound, the degree
    product and the average-degree bound. Table 2 columns: the optimized
    constant, the spectral bound, and the optimizing (alpha, c).
    """
    if which not in (1, 2):
        raise ValueError("table number must be 1 or 2")
    rows = []
    for d in TABLE_DEGREES:
        opt = optimize_split_bound(d)
        ks = kahale_schulman_bound(d)
        if which == 1:
            from .graph_core import named_graph

            product = degree_product_bound(named_graph(f"complete({d + 1})"))
            rows.append(
                {
                    "d": float(d),
                    "new_bound": opt.value,
                    "kahale_schulman": ks.value,
                    "degree_product": product.value,
                    "average_degree": average_degree_bound(float(d)).value,
                }
            )
        else:
            rows.append(
                {
                    "d": float(d),
                    "new_bound": opt.value,
                    "kahale_schulman": ks.value,
                    "alpha": opt.params["alpha"],
                    "c": opt.params["c"],
                }
            )
    return rows


def render_table(rows: list[dict[str, float]], fmt: str = "pretty") -> str:
    if not rows:
        return ""
    columns = list(rows[0])

    def cell(key: str, value: float) -> str:
        return f"{int(value)}" if key == "d" else f"{value:.4f}"

    if fmt == "tsv":
        lines = ["\t".join(columns)]
        lines += ["\t".join(cell(k, r[k]) for k in columns) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        import json

        return json.dumps(
            [{k: (int(r[k]) if k == "d" else round(r[k], 6)) for k in columns} for r in rows],
            indent=2,
        ) + "\n"
    widths = {k: max(len(k), *(len(cell(k, r[k])) for r in rows)) for k in columns}
    lines = ["  ".join(k.ljust(widths[k]) for k in columns)]
    for r in rows:
        lines.append("  ".join(cell(k, r[k]).ljust(widths[k]) for k in columns))
    return "\n".join(lines) + "\n"
