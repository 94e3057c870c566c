"""Command-line front end.

Subcommands: count (exact counts for one graph), table (the per-degree bound
tables), verify (correlation / covers / sandwich / bounds suites) and lift
(2-lift construction and girth towers). Counts serialize as decimal strings in
JSON so arbitrary precision survives. Exit codes: 0 success, 2 parse error,
3 budget exhaustion (partial results are still printed), 1 internal failure or
bound violation. A conjecture counterexample prints a REFUTATION block but
exits 0: finding one means the tool worked.

The --time-limit budget is enforced between quantities, not inside a running
counter.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from dataclasses import dataclass, field

from . import bounds, conjecture_lab, exact_count
from .errors import BudgetError, ParseError, StateBudgetError
from .graph_core import (
    MultiGraph,
    SignedLift,
    connected_graphs_upto,
    format_edge_list,
    girth,
    load_graph,
    named_graph,
    random_connected_graph,
    random_girth_tower,
    signs_from_string,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    command: str
    graph: str | None = None
    backend: str = "auto"
    fmt: str = "pretty"
    seed: int = 0
    max_states: int = exact_count.DEFAULT_STATE_LIMIT
    max_bits: int = 22
    time_limit: float | None = None
    out: str | None = None
    extra: dict = field(default_factory=dict)


def _emit(text: str, config: RunConfig) -> None:
    if config.out:
        with open(config.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# count


def _count_one(g: MultiGraph, quantity: str, config: RunConfig) -> tuple[int, str]:
    backend = config.backend
    if quantity in ("forests", "connected"):
        brute = (
            exact_count.count_forests_brute
            if quantity == "forests"
            else exact_count.count_connected_brute
        )
        dc = (
            exact_count.count_forests_dc
            if quantity == "forests"
            else exact_count.count_connected_dc
        )
        frontier = (
            exact_count.count_forests_frontier
            if quantity == "forests"
            else exact_count.count_connected_frontier
        )
        auto = (
            exact_count.count_forests_auto
            if quantity == "forests"
            else exact_count.count_connected_auto
        )
        if backend == "oracle":
            if g.m > config.max_bits:
                raise BudgetError(f"m = {g.m} exceeds --max-bits {config.max_bits}")
            return brute(g), "oracle"
        if backend == "dc":
            return dc(g), "dc"
        if backend == "frontier":
            order = exact_count.greedy_frontier_order(g)
            return frontier(g, order=order, max_states=config.max_states), "frontier"
        return auto(g, max_states=config.max_states, oracle_bits=min(config.max_bits, 18))
    if quantity == "acyclic_orientations":
        return exact_count.count_acyclic_orientations(g), "chromatic"
    if quantity == "spanning_trees":
        return exact_count.count_spanning_trees(g), "matrix-tree"
    if quantity == "weakly_induced":
        return exact_count.count_weakly_induced_forests(g), "enumeration"
    raise ValueError(quantity)


def cmd_count(config: RunConfig) -> int:
    g = load_graph(config.graph)
    quantities = [
        ("forests", "F"),
        ("connected", "C"),
        ("acyclic_orientations", "a"),
        ("spanning_trees", "tau"),
        ("weakly_induced", "F_wi"),
    ]
    started = time.monotonic()
    results: dict[str, dict] = {}
    budget_hit = False
    for quantity, label in quantities:
        if config.time_limit is not None and time.monotonic() - started > config.time_limit:
            results[label] = {"skipped": "time budget exhausted"}
            budget_hit = True
            continue
        try:
            value, backend = _count_one(g, quantity, config)
        except (BudgetError, StateBudgetError) as exc:
            results[label] = {"skipped": str(exc)}
            budget_hit = True
            continue
        entry = {"value": str(value), "backend": backend}
        if g.n > 0 and value > 0:
            entry["per_vertex_root"] = f"{math.exp(math.log(value) / g.n):.6f}"
        results[label] = entry

    if config.fmt == "json":
        payload = {"graph": config.graph, "n": g.n, "m": g.m, "counts": results}
        _emit(json.dumps(payload, indent=2) + "\n", config)
    elif config.fmt == "tsv":
        lines = ["quantity\tvalue\tper_vertex_root\tbackend"]
        for label, entry in results.items():
            if "skipped" in entry:
                lines.append(f"{label}\tskipped\t\t{entry['skipped']}")
            else:
                lines.append(
                    f"{label}\t{entry['value']}\t{entry.get('per_vertex_root', '')}\t"
                    f"{entry['backend']}"
                )
        _emit("\n".join(lines) + "\n", config)
    else:
        lines = [f"graph {config.graph}: n={g.n} m={g.m}"]
        for label, entry in results.items():
            if "skipped" in entry:
                lines.append(f"  {label:<5} skipped ({entry['skipped']})")
            else:
                root = entry.get("per_vertex_root", "")
                root_part = f"  per-vertex {root}" if root else ""
                lines.append(
                    f"  {label:<5} = {entry['value']}{root_part}  [{entry['backend']}]"
                )
        _emit("\n".join(lines) + "\n", config)
    return EXIT_BUDGET if budget_hit else EXIT_OK


# ---------------------------------------------------------------------------
# table


def cmd_table(config: RunConfig) -> int:
    which = config.extra["which"]
    rows = bounds.table_rows(which)
    _emit(bounds.render_table(rows, config.fmt), config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# lift


def cmd_lift(config: RunConfig) -> int:
    g = load_graph(config.graph)
    signs_arg = config.extra.get("signs")
    tower_levels = config.extra.get("tower")
    lines: list[str] = []
    if tower_levels is not None:
        tower = random_girth_tower(g, tower_levels, seed=config.seed)
        for level, (graph, gr) in enumerate(zip(tower.graphs, tower.girths)):
            name = f"{config.out or 'lift'}_level{level}.txt"
            with open(name, "w") as handle:
                handle.write(format_edge_list(graph))
            lines.append(f"level {level}: n={graph.n} m={graph.m} girth={gr} -> {name}")
        sys.stdout.write("\n".join(lines) + "\n")
        return EXIT_OK
    if signs_arg == "random":
        rng = random.Random(config.seed)
        signs = tuple(rng.choice((1, -1)) for _ in range(g.m))
    else:
        signs = signs_from_string(signs_arg)
    lifted = SignedLift(g, signs).expand()
    report = girth(lifted)
    sys.stderr.write(f"lift: n={lifted.n} m={lifted.m} girth={report.girth}\n")
    _emit(format_edge_list(lifted), config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites


def _suite_sandwich(seed: int, lines: list[str]) -> bool:
    ok = True
    corpus = [g for g in connected_graphs_upto(5)]
    rng = random.Random(seed)
    corpus += [random_connected_graph(rng, rng.randint(2, 6), rng.randint(0, 4)) for _ in range(20)]
    for g in corpus:
        weakly = exact_count.count_weakly_induced_forests(g)
        acyclic = exact_count.count_acyclic_orientations(g)
        forests = exact_count.count_forests_brute(g)
        if not (weakly <= acyclic <= forests <= 1 << g.m):
            ok = False
            lines.append(f"FAIL sandwich on {g.describe()}: {weakly}, {acyclic}, {forests}")
    lines.append(f"sandwich: checked {len(corpus)} graphs")
    return ok


def _suite_correlation(seed: int, lines: list[str], max_n: int = 6) -> bool:
    ok = True
    refutations = 0
    count = 0
    for g in connected_graphs_upto(max_n):
        report = conjecture_lab.negative_correlation_report(g)
        count += 1
        if report.violated:
            refutations += 1
            lines.append(
                "REFUTATION: negative correlation fails on "
                f"{report.graph_id} pair {report.worst_pair}, margin {report.min_margin}"
            )
    lines.append(f"correlation: {count} graphs exhaustively checked, {refutations} violations")
    return ok


def _suite_covers(seed: int, lines: list[str], instances: int = 100) -> bool:
    ok = True
    rng = random.Random(seed)
    refutations = 0
    for _ in range(instances):
        n = rng.randint(2, 5)
        g = random_connected_graph(rng, n, rng.randint(0, 4))
        signs = [rng.choice((1, -1)) for _ in range(g.m)]
        check = conjecture_lab.two_cover_check(g, signs)
        if check.violated:
            refutations += 1
            lines.append(
                f"REFUTATION: F(G)^2 > F(H) on {check.graph_id} signs {check.signs}"
            )
        edge = rng.randrange(g.m)
        if not conjecture_lab.crossed_cover_identity_check(g, edge):
            ok = False
            lines.append(f"FAIL crossed-cover identity on {g.describe()} edge {edge}")
    lines.append(f"covers: {instances} random 2-lifts checked, {refutations} violations")
    return ok


def _suite_bounds(seed: int, lines: list[str]) -> bool:
    ok = True
    checked = 0
    for g in connected_graphs_upto(5):
        for entry in bounds.bound_suite(g):
            checked += 1
            if entry.satisfied is False:
                ok = False
                lines.append(
                    f"FAIL bound {entry.report.name} on {g.describe()}: "
                    f"value {entry.report.value} < observed {entry.observed}"
                )
    lines.append(f"bounds: {checked} bound evaluations dominated their exact counts")
    return ok


def cmd_verify(config: RunConfig) -> int:
    suite = config.extra["suite"]
    lines: list[str] = []
    ok = True
    runners = {
        "sandwich": _suite_sandwich,
        "correlation": _suite_correlation,
        "covers": _suite_covers,
        "bounds": _suite_bounds,
    }
    selected = list(runners) if suite == "all" else [suite]
    for name in selected:
        ok = runners[name](config.seed, lines) and ok
    status = "PASS" if ok else "FAIL"
    lines.append(f"verify {suite}: {status}")
    _emit("\n".join(lines) + "\n", config)
    return EXIT_OK if ok else EXIT_FAILURE


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestry",
        description="Exact forest/connected-subgraph counting and bound certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph: bool = True):
        if graph:
            p.add_argument("--graph", required=True, help="named graph or input file")
        p.add_argument("--backend", default="auto", choices=["auto", "oracle", "dc", "frontier"])
        p.add_argument("--format", default="pretty", choices=["pretty", "tsv", "json"])
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-states", type=int, default=exact_count.DEFAULT_STATE_LIMIT)
        p.add_argument("--max-bits", type=int, default=22, help="subset-oracle edge budget")
        p.add_argument("--time-limit", type=float, default=None, help="seconds, per command")
        p.add_argument("--out", default=None, help="write output to this file")

    p_count = sub.add_parser("count", help="exact counts for one graph")
    common(p_count)

    p_table = sub.add_parser("table", help="reproduce a per-degree bound table")
    p_table.add_argument("which", type=int, choices=[1, 2])
    common(p_table, graph=False)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=["correlation", "covers", "sandwich", "bounds", "all"],
    )
    common(p_verify, graph=False)

    p_lift = sub.add_parser("lift", help="expand a signed 2-lift or build a girth tower")
    common(p_lift)
    group = p_lift.add_mutually_exclusive_group(required=True)
    group.add_argument("--signs", help="one +/- per edge, or 'random'")
    group.add_argument("--tower", type=int, help="number of tower levels")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(
        command=args.command,
        graph=getattr(args, "graph", None),
        backend=getattr(args, "backend", "auto"),
        fmt=getattr(args, "format", "pretty"),
        seed=getattr(args, "seed", 0),
        max_states=getattr(args, "max_states", exact_count.DEFAULT_STATE_LIMIT),
        max_bits=getattr(args, "max_bits", 22),
        time_limit=getattr(args, "time_limit", None),
        out=getattr(args, "out", None),
    )
    if args.command == "table":
        config.extra["which"] = args.which
    if args.command == "verify":
        config.extra["suite"] = args.suite
    if args.command == "lift":
        config.extra["signs"] = args.signs
        config.extra["tower"] = args.tower
    return config


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    config = _config_from_args(args)
    handlers = {
        "count": cmd_count,
        "table": cmd_table,
        "verify": cmd_verify,
        "lift": cmd_lift,
    }
    try:
        return handlers[config.command](config)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except (BudgetError, StateBudgetError) as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
