"""Command-line surface: generation, colouring, verification, reports, fuzzing.

Exit codes: 0 success, 1 bad input, 2 mathematical failure or violation
(a stuck solve, a failed verification, a violated counting condition), so CI
can tell bad plumbing from genuine alarms.  Every run is reproducible: all
randomness flows from ``--seed`` (default 0) through named substreams, and
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .colouring import (TotalColoring, check_edge_colouring, check_total_colouring,
                        colouring_from_json, colouring_to_json)
from .errors import FancolourError, GuardExceeded, InputError, SolveFailure
from .exact import (OracleBudget, chromatic_index, improper2_chromatic_index,
                    list_edge_colourable, matching_number,
                    total_independence_number)
from .graphs import Graph, generate, max_degree, parse_graph, serialize_graph
from .hall import (check_hall_edge_condition, check_hall_total_condition,
                   hall_condition_index, total_hall_condition_number)
from .lists import (ListAssignment, TotalListAssignment, lists_from_json,
                    lists_to_json, random_lists, uniform_lists)
from .solver import SolverConfig, colour_edges, total_colour, total_colour_lists

_P_VALUES = tuple(round(0.1 * i, 1) for i in range(1, 10))


def subseed(seed: int, name: str) -> int:
    """Derive a substream seed; stable across runs and platforms."""
    return random.Random(f"{seed}:{name}").getrandbits(64)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for maths only
        raise InputError(message)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _edge_lists_for(g: Graph, ns) -> ListAssignment:
    given = sum(x is not None for x in (ns.lists, ns.uniform, ns.random))
    if given != 1:
        raise InputError("need exactly one of --lists, --uniform, --random")
    if ns.lists is not None:
        lists = lists_from_json(_read_text(ns.lists))
        if isinstance(lists, TotalListAssignment):
            lists = lists.edge_assignment()
        if len(lists) != g.m:
            raise InputError("list assignment does not match the graph")
        return lists
    if ns.uniform is not None:
        return uniform_lists(g, ns.uniform)
    k = ns.random
    delta = max_degree(g)
    palette = ns.palette if ns.palette is not None else k + (delta + 1) // 2
    return random_lists(g, k, palette, subseed(ns.seed, "list-gen"))


# --- subcommands ------------------------------------------------------------

def cmd_gen(ns) -> int:
    kind = ns.kind.replace("-", "_")
    params = [int(p) if "." not in p else float(p) for p in ns.params]
    if kind == "random":
        g = generate("random", *params, seed=subseed(ns.seed, "graph-gen"))
    else:
        g = generate(kind, *params)
    _write_text(ns.output, serialize_graph(g))
    return 0


def cmd_colour_edges(ns) -> int:
    g = _load_graph(ns.graph)
    lists = _edge_lists_for(g, ns)
    cfg = SolverConfig(force=ns.force, trace=[] if ns.trace else None)
    try:
        colours, report = colour_edges(g, lists, cfg)
    except SolveFailure as exc:
        bundle = {"error": str(exc), "stuck_edge": exc.stuck_edge,
                  "repro": exc.repro}
        failure_path = (ns.output or ns.graph) + ".failure.json"
        Path(failure_path).write_text(
            json.dumps(bundle, sort_keys=True, indent=2) + "\n")
        print(f"solve failed; reproduction bundle at {failure_path}",
              file=sys.stderr)
        if ns.trace and cfg.trace is not None:
            _write_text(ns.trace, "\n".join(cfg.trace) + "\n")
        return 2
    bad = check_edge_colouring(g, lists, colours)
    if bad is not None:
        print(f"output failed verification: {bad}", file=sys.stderr)
        return 2
    if ns.trace:
        _write_text(ns.trace, "\n".join(cfg.trace) + "\n")
    _write_text(ns.output, colouring_to_json(colours, None, report.totals()))
    return 0


def cmd_colour_total(ns) -> int:
    g = _load_graph(ns.graph)
    if (ns.lists is None) == (ns.palette is None):
        raise InputError("need exactly one of --lists, --palette")
    if ns.lists is not None:
        total = lists_from_json(_read_text(ns.lists))
        if not isinstance(total, TotalListAssignment):
            raise InputError("total colouring needs vertex lists too")
        tc = total_colour_lists(g, total)
        check_against = total
    else:
        tc = total_colour(g, ns.palette)
        check_against = None
    bad = check_total_colouring(g, check_against, tc)
    if bad is not None:
        print(f"output failed verification: {bad}", file=sys.stderr)
        return 2
    _write_text(ns.output, colouring_to_json(
        list(tc.edge_colours), list(tc.vertex_colours), {}))
    return 0


def cmd_verify(ns) -> int:
    g = _load_graph(ns.graph)
    edge_colours, vertex_colours, _ = colouring_from_json(_read_text(ns.colouring))
    lists = None
    if ns.lists is not None:
        lists = lists_from_json(_read_text(ns.lists))
    if ns.total:
        if vertex_colours is None:
            raise InputError("total verification needs vertex colours")
        if lists is not None and not isinstance(lists, TotalListAssignment):
            raise InputError("total verification needs total lists")
        bad = check_total_colouring(
            g, lists, TotalColoring(tuple(vertex_colours), tuple(edge_colours)))
    else:
        if isinstance(lists, TotalListAssignment):
            lists = lists.edge_assignment()
        bad = check_edge_colouring(g, lists, edge_colours)
    if bad is None:
        _write_text(ns.output, json.dumps({"ok": True}, sort_keys=True) + "\n")
        return 0
    _write_text(ns.output, json.dumps(
        {"ok": False, "violation": {"clause": bad.clause, "message": bad.message}},
        sort_keys=True, indent=2) + "\n")
    return 2


def cmd_exact(ns) -> int:
    g = _load_graph(ns.graph)
    budget = OracleBudget(node_limit=ns.node_limit)
    doc: dict[str, int | None] = {}
    try:
        doc["chi_prime"] = chromatic_index(g, budget, guard_edges=ns.guard_edges)
    except GuardExceeded:
        doc["chi_prime"] = None
    try:
        doc["chi_prime_2"] = improper2_chromatic_index(
            g, budget, guard_edges=ns.guard_edges)
    except GuardExceeded:
        doc["chi_prime_2"] = None
    doc["alpha_prime"] = matching_number(g)
    try:
        doc["alpha_T"] = total_independence_number(g, guard_items=ns.guard_items)
    except GuardExceeded:
        doc["alpha_T"] = None
    _write_text(ns.output, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 0


def cmd_hall(ns) -> int:
    g = _load_graph(ns.graph)
    chosen = sum(1 for x in (ns.edge, ns.total, ns.check) if x)
    if chosen != 1:
        raise InputError("need exactly one of --edge, --total, --check")
    if ns.edge:
        _write_text(ns.output, hall_condition_index(g, guard=ns.guard).to_json())
        return 0
    if ns.total:
        _write_text(ns.output,
                    total_hall_condition_number(g, guard=ns.guard).to_json())
        return 0
    lists = lists_from_json(_read_text(ns.check))
    if isinstance(lists, TotalListAssignment):
        bad = check_hall_total_condition(g, lists, guard_items=ns.guard_items)
    else:
        bad = check_hall_edge_condition(g, lists, guard=ns.guard)
    if bad is None:
        _write_text(ns.output, json.dumps({"satisfied": True}, sort_keys=True) + "\n")
        return 0
    doc = {"satisfied": False, "witness": list(bad.witness),
           "required": bad.required, "available": bad.available}
    if bad.witness_edges is not None:
        doc["witness_edges"] = list(bad.witness_edges)
    _write_text(ns.output, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 2


def fuzz_campaign(trials: int, n_max: int, offset: int, seed: int,
                  p_values: tuple[float, ...] = _P_VALUES,
                  oracle_max_edges: int = 12,
                  oracle_rate: float = 0.05) -> dict:
    """Random (graph, lists) pairs with list size max_degree + offset.

    Runs the solver on each, re-checks successes independently, and
    cross-examines a small random subsample against the exhaustive oracle.
    """
    summary = {"trials": trials, "offset": offset, "successes": 0,
               "solve_failures": 0, "checker_violations": 0,
               "oracle_checked": 0, "oracle_disagreements": 0,
               "failed_trials": []}
    for t in range(trials):
        rng = random.Random(f"{seed}:fuzz:{t}")
        n = rng.randint(2, n_max)
        p = rng.choice(p_values)
        g = generate("random", n, p, seed=rng.getrandbits(64))
        delta = max_degree(g)
        if g.m == 0:
            summary["successes"] += 1
            continue
        k = delta + offset
        palette = k + (delta + 1) // 2
        lists = random_lists(g, k, palette, rng.getrandbits(64))
        want_oracle = rng.random() < oracle_rate and g.m <= oracle_max_edges
        try:
            colours, _ = colour_edges(g, lists, SolverConfig(force=offset < 2))
        except SolveFailure:
            summary["solve_failures"] += 1
            summary["failed_trials"].append(t)
            continue
        summary["successes"] += 1
        if check_edge_colouring(g, lists, colours) is not None:
            summary["checker_violations"] += 1
            summary["failed_trials"].append(t)
        if want_oracle:
            summary["oracle_checked"] += 1
            outcome = list_edge_colourable(g, lists, OracleBudget(node_limit=10 ** 6))
            if outcome.status == "no":
                summary["oracle_disagreements"] += 1
                summary["failed_trials"].append(t)
    summary["failed_trials"].sort()
    return summary


def cmd_fuzz(ns) -> int:
    summary = fuzz_campaign(ns.trials, ns.n_max, ns.offset, ns.seed)
    _write_text(ns.output, json.dumps(summary, sort_keys=True, indent=2) + "\n")
    bad = summary["checker_violations"] or summary["oracle_disagreements"]
    if ns.offset >= 2:
        bad = bad or summary["solve_failures"]
    return 2 if bad else 0


# --- parser -----------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="fancolour",
                     description="list edge colouring toolkit")
    parser.add_argument("--seed", type=int, default=0,
                        help="master seed for every random substream")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a stock graph")
    p.add_argument("kind", choices=["path", "cycle", "complete",
                                    "complete-bipartite", "petersen", "random"])
    p.add_argument("params", nargs="*", help="numeric parameters of the kind")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("colour-edges", help="list edge colouring")
    p.add_argument("graph")
    p.add_argument("--lists", help="list-assignment JSON file")
    p.add_argument("--uniform", type=int, help="uniform lists {0..k-1}")
    p.add_argument("--random", type=int, help="random lists of this size")
    p.add_argument("--palette", type=int, help="palette size for --random")
    p.add_argument("--force", action="store_true",
                   help="waive the max_degree+2 list-size requirement")
    p.add_argument("--trace", help="write interchange search events here")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_colour_edges)

    p = sub.add_parser("colour-total", help="total colouring (vertices and edges)")
    p.add_argument("graph")
    p.add_argument("--palette", type=int, help="palette size, at least max_degree+4")
    p.add_argument("--lists", help="total list-assignment JSON file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_colour_total)

    p = sub.add_parser("verify", help="re-check a colouring independently")
    p.add_argument("graph")
    p.add_argument("colouring", help="colouring JSON file")
    p.add_argument("--lists", help="list-assignment JSON file")
    p.add_argument("--total", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exhaustive small-graph quantities")
    p.add_argument("graph")
    p.add_argument("--node-limit", type=int, default=10 ** 8)
    p.add_argument("--guard-edges", type=int, default=24)
    p.add_argument("--guard-items", type=int, default=24)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("hall", help="counting-condition indices and checks")
    p.add_argument("graph")
    p.add_argument("--edge", action="store_true", help="edge condition index")
    p.add_argument("--total", action="store_true", help="total condition number")
    p.add_argument("--check", help="check the condition for these lists")
    p.add_argument("--guard", type=int, default=12,
                   help="vertex-count guard for the subgraph sweeps")
    p.add_argument("--guard-items", type=int, default=18,
                   help="item-count guard for the total condition check")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("fuzz", help="randomized solver campaign")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--offset", type=int, default=2,
                   help="list size is max_degree plus this")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return ns.func(ns)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FancolourError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
