"""Constructive list edge colouring with two spare colours per list.

Edges are inserted one at a time.  Each insertion first tries a colour free
at both endpoints; failing that it builds a fan around one endpoint ``v``:
a sequence of distinct neighbours ``y_1, ..., y_i`` whose edges to ``v``
carry distinct colours ``t_1, ..., t_{i-1}``, where each ``t_h`` lies in the
list of ``v y_h`` and is missing at ``y_h``.  Rotating the fan (shifting
every ``t_h`` one edge towards the uncoloured edge) finishes the insertion as
soon as some candidate colour is missing at ``v`` as well.  When every
candidate at the fan's tip is already used on an earlier fan edge, a
``v``-restricted interchange path frees one, with ban sets making sure the
interchange never destroys the fan's reserved missing colours.

Every rotation re-checks its preconditions against the live colouring and
every interchange is validated before it is applied, so the solver can only
ever produce proper colourings.  If an interchange damages the fan in a way
the bookkeeping cannot absorb (the path may brush the fan's own edges), the
fan is truncated to its longest still-valid prefix and regrown; a step
budget turns any hypothetical livelock into a loud failure instead of a
hang.  With list sizes of at least ``max_degree + 2`` a ``SolveFailure`` is
a bug alarm; in forced mode with smaller lists it is an expected outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .colouring import PartialEdgeColoring, TotalColoring
from .errors import InputError, InvariantViolation, NoInterchangePath, SolveFailure
from .graphs import Graph, max_degree, serialize_graph
from .interchange import (InterchangePath, apply_interchange,
                          cut_interchange_path, find_interchange_path)
from .lists import (ListAssignment, TotalListAssignment, greedy_vertex_colouring,
                    lists_to_json, residual_edge_lists, uniform_total_lists)


@dataclass
class SolverConfig:
    """Tuning knobs; the defaults suit everything in the test corpus."""

    force: bool = False            # waive the max_degree + 2 list-size check
    step_budget_base: int = 200    # fan-loop iterations allowed per edge ...
    step_budget_per_degree: int = 20   # ... plus this many per degree of the centre
    interchange_hook: Callable | None = None  # called (g, lists, col, path, bans)
    trace: list[str] | None = None


@dataclass
class EdgeStats:
    """What it took to insert one edge."""

    edge: int
    direct: bool = False
    fan_max: int = 0
    cip_lengths: list[int] = field(default_factory=list)
    interchanges: int = 0
    truncations: int = 0
    relaxations: int = 0


@dataclass
class SolveReport:
    edge_stats: dict[int, EdgeStats] = field(default_factory=dict)

    def totals(self) -> dict:
        stats = self.edge_stats.values()
        return {
            "edges": len(self.edge_stats),
            "direct": sum(1 for s in stats if s.direct),
            "fans": sum(1 for s in stats if s.fan_max > 0),
            "max_fan_length": max((s.fan_max for s in stats), default=0),
            "interchange_paths": sum(len(s.cip_lengths) for s in stats),
            "interchange_path_edges": sum(sum(s.cip_lengths) - len(s.cip_lengths)
                                          for s in stats),
            "interchanges": sum(s.interchanges for s in stats),
            "truncations": sum(s.truncations for s in stats),
            "relaxations": sum(s.relaxations for s in stats),
        }


class _Fan:
    """Fan state around a centre; ``committed[h]`` is the colour reserved for
    ``leaves[h]`` and carried by the edge from the centre to ``leaves[h+1]``."""

    def __init__(self, v: int, f: int, y1: int):
        self.v = v
        self.f = f
        self.leaves: list[int] = [y1]
        self.committed: list[int] = []

    def leaf_edge(self, g: Graph, idx: int) -> int:
        """Edge id from the centre to ``leaves[idx]`` (the uncoloured edge for idx 0)."""
        if idx == 0:
            return self.f
        eid = g.edge_id(self.v, self.leaves[idx])
        if eid is None:
            raise InvariantViolation("fan leaf is not a neighbour of the centre")
        return eid

    def valid_prefix(self, g: Graph, lists: ListAssignment,
                     col: PartialEdgeColoring) -> int:
        """Longest leaf count m such that the fan restricted to its first m
        leaves still satisfies the fan conditions."""
        m = 1
        for h in range(len(self.committed)):
            c = self.committed[h]
            if c not in lists[self.leaf_edge(g, h)]:
                break
            if col.present(self.leaves[h], c):
                break
            eid = g.edge_id(self.v, self.leaves[h + 1])
            if eid is None or col.colour_of(eid) != c:
                break
            m = h + 2
        return m

    def truncate(self, m: int) -> None:
        del self.leaves[m:]
        del self.committed[m - 1:]

    def bans(self) -> dict[int, set[int]]:
        """Ban each committed leaf's reserved colour from arriving there.

        The tip is deliberately not banned: the resolution always replaces
        its pending colour with the freed one, and an extra ban there can
        choke the path search for nothing.
        """
        return {self.leaves[h]: {self.committed[h]}
                for h in range(len(self.committed))}


def _rotate(g: Graph, lists: ListAssignment, col: PartialEdgeColoring,
            fan: _Fan, final_colour: int) -> None:
    """Shift the reserved colours one edge towards the uncoloured edge and
    colour the tip edge with ``final_colour``.  Every precondition is checked
    against the live colouring; a breach aborts rather than miscolours."""
    i = len(fan.leaves)
    values = fan.committed[:i - 1] + [final_colour]
    if len(set(values)) != i:
        raise InvariantViolation(f"rotation colours not distinct: {values}")
    targets = [fan.leaf_edge(g, h) for h in range(i)]
    target_set = set(targets)
    for c in values:
        e = col.edge_at(fan.v, c)
        if e is not None and e not in target_set:
            raise InvariantViolation(
                f"rotation colour {c} is held by a foreign edge at the centre")
    for h in range(i):
        if values[h] not in lists[targets[h]]:
            raise InvariantViolation(
                f"rotation colour {values[h]} outside the list of edge {targets[h]}")
        if col.present(fan.leaves[h], values[h]):
            raise InvariantViolation(
                f"rotation colour {values[h]} already present at leaf {fan.leaves[h]}")
    for eid in targets[1:]:
        col.unassign(eid)
    for eid, c in zip(targets, values):
        col.assign(eid, c)


def _insert_edge(g: Graph, lists: ListAssignment, col: PartialEdgeColoring,
                 f: int, cfg: SolverConfig,
                 report: SolveReport) -> PartialEdgeColoring:
    """Extend ``col`` by the uncoloured edge ``f``.  Returns the colouring
    (a fresh object whenever an interchange was applied)."""
    stats = report.edge_stats.setdefault(f, EdgeStats(edge=f))
    u, w = g.endpoints(f)
    for c in sorted(lists[f]):
        if not col.present(u, c) and not col.present(w, c):
            col.assign(f, c)
            stats.direct = True
            return col

    du, dw = col.coloured_degree(u), col.coloured_degree(w)
    if du != dw:
        v = u if du > dw else w
    else:
        v = min(u, w)
    fan = _Fan(v, f, w if v == u else u)
    budget = cfg.step_budget_base + cfg.step_budget_per_degree * g.degree(v)

    while True:
        budget -= 1
        if budget < 0:
            raise SolveFailure("fan resolution exceeded its step budget",
                               stuck_edge=f)
        stats.fan_max = max(stats.fan_max, len(fan.leaves))
        tip = fan.leaves[-1]
        tip_edge = fan.leaf_edge(g, len(fan.leaves) - 1)
        cands = [c for c in sorted(lists[tip_edge]) if not col.present(tip, c)]
        if not cands:
            raise SolveFailure(
                f"no admissible colour at vertex {tip} for edge {tip_edge}",
                stuck_edge=f)

        finish = next((c for c in cands if not col.present(v, c)), None)
        if finish is not None:
            _rotate(g, lists, col, fan, finish)
            return col

        grew = False
        for c in cands:
            eid = col.edge_at(v, c)
            y_new = g.other_end(eid, v)
            if y_new not in fan.leaves:
                fan.committed.append(c)
                fan.leaves.append(y_new)
                grew = True
                break
        if grew:
            continue

        # Every candidate at the tip sits on a fan edge: free a colour at the
        # tip through a restricted interchange path.
        a_cands = [c for c in sorted(lists[tip_edge]) if not col.present(v, c)]
        if not a_cands:
            raise SolveFailure(
                f"no colour of edge {tip_edge} is free at the centre {v}",
                stuck_edge=f)
        a1 = a_cands[0]
        if not col.present(tip, a1):
            _rotate(g, lists, col, fan, a1)
            return col
        start_edge = col.edge_at(tip, a1)
        bans = fan.bans()
        try:
            ip = find_interchange_path(g, lists, col, start_edge, a1, tip,
                                       restricted_to=v, forbidden=bans,
                                       trace=cfg.trace)
        except NoInterchangePath:
            # A saturated fan can ban so much that no compliant path exists.
            # An unrestricted path always does; any damage it causes to the
            # fan's reservations is repaired by truncation below.
            stats.relaxations += 1
            bans = {}
            try:
                ip = find_interchange_path(g, lists, col, start_edge, a1, tip,
                                           trace=cfg.trace)
            except NoInterchangePath as exc:
                raise SolveFailure(
                    f"no interchange path from edge {start_edge}: {exc}",
                    stuck_edge=f) from exc
        stats.cip_lengths.append(ip.s)
        if cfg.interchange_hook is not None:
            cfg.interchange_hook(g, lists, col.copy(), ip, bans)

        col = _apply_resolution(g, lists, col, fan, ip, a1)
        stats.interchanges += 1

        if not col.present(v, a1):
            if fan.valid_prefix(g, lists, col) == len(fan.leaves):
                _rotate(g, lists, col, fan, a1)
                return col
        else:
            e_new = col.edge_at(v, a1)
            y_new = g.other_end(e_new, v)
            if y_new not in fan.leaves:
                fan.leaves.append(y_new)
                fan.committed.append(a1)
        m = fan.valid_prefix(g, lists, col)
        if m < len(fan.leaves):
            stats.truncations += 1
            fan.truncate(m)


def _apply_resolution(g: Graph, lists: ListAssignment, col: PartialEdgeColoring,
                      fan: _Fan, ip: InterchangePath, a1: int) -> PartialEdgeColoring:
    """Apply the interchange.  When the fan is saturated (every coloured edge
    at the centre belongs to the fan) and the whole-path shift would park
    ``a1`` back on the centre via an earlier fan edge, only the tail from the
    centre onwards is shifted, which frees that fan edge's colour instead."""
    v = fan.v
    saturated = col.coloured_degree(v) == len(fan.leaves) - 1
    pos = ip.position(v)
    if saturated and pos is not None and 2 <= pos <= ip.s - 1 \
            and ip.colours[pos] == a1:
        try:
            j = fan.leaves.index(ip.vertices[pos - 2]) + 1
            k = fan.leaves.index(ip.vertices[pos]) + 1
        except ValueError:
            raise InvariantViolation(
                "saturated fan has a coloured centre edge outside the fan") from None
        if k < j:
            if ip.colours[pos - 2] == ip.colours[pos]:
                raise InvariantViolation(
                    "cannot cut the interchange path at the centre")
            _, tail = cut_interchange_path(ip, pos)
            return apply_interchange(col, tail, lists)
    return apply_interchange(col, ip, lists)


def colour_edges(g: Graph, lists: ListAssignment,
                 config: SolverConfig | None = None) -> tuple[list[int], SolveReport]:
    """Proper list edge colouring of the whole graph.

    Requires every list to hold at least ``max_degree(g) + 2`` colours unless
    ``config.force`` is set.  Deterministic for fixed input.  Raises
    ``SolveFailure`` (with a replayable bundle attached) if an insertion gets
    stuck, which the list-size precondition rules out.
    """
    cfg = config or SolverConfig()
    if len(lists) != g.m:
        raise InputError("list assignment does not match the graph")
    delta = max_degree(g)
    if not cfg.force:
        for eid in range(g.m):
            if len(lists[eid]) < delta + 2:
                raise InputError(
                    f"edge {eid} has {len(lists[eid])} colours, "
                    f"needs at least {delta + 2} (use force to override)")
    report = SolveReport()
    col = PartialEdgeColoring(g, lists)
    if delta <= 1:
        for eid in range(g.m):
            if not lists[eid]:
                raise SolveFailure(f"edge {eid} has an empty list", stuck_edge=eid)
            col.assign(eid, min(lists[eid]))
            report.edge_stats[eid] = EdgeStats(edge=eid, direct=True)
        return col.complete_list(), report
    for eid in range(g.m):
        try:
            col = _insert_edge(g, lists, col, eid, cfg, report)
        except SolveFailure as exc:
            exc.trace = list(cfg.trace or [])
            exc.repro = {
                "graph": serialize_graph(g),
                "lists": lists_to_json(lists),
                "stuck_edge": exc.stuck_edge,
                "partial_colouring": col.as_list(),
            }
            raise
    return col.complete_list(), report


def extend_one_edge(g: Graph, lists: ListAssignment, col: PartialEdgeColoring,
                    f: int, config: SolverConfig | None = None) -> PartialEdgeColoring:
    """Colour the single uncoloured edge ``f`` on a copy of ``col``."""
    if col.is_coloured(f):
        raise InputError(f"edge {f} is already coloured")
    cfg = config or SolverConfig()
    delta = max_degree(g)
    if not cfg.force:
        for eid in range(g.m):
            if len(lists[eid]) < delta + 2:
                raise InputError(
                    f"edge {eid} has {len(lists[eid])} colours, "
                    f"needs at least {delta + 2} (use force to override)")
    report = SolveReport()
    new = _insert_edge(g, lists, col.copy(), f, cfg, report)
    if not new.is_coloured(f):
        raise InvariantViolation(f"edge {f} is still uncoloured after insertion")
    return new


def total_colour(g: Graph, palette_size: int) -> TotalColoring:
    """Proper total colouring from the palette ``{0, ..., palette_size - 1}``.

    Greedy vertex colouring first, then list edge colouring on the residual
    lists (each edge loses at most its two endpoint colours, so at least
    ``max_degree + 2`` colours remain per edge).
    """
    delta = max_degree(g)
    if palette_size < delta + 4:
        raise InputError(
            f"palette of {palette_size} is too small, need {delta + 4}")
    total = uniform_total_lists(g, palette_size)
    return total_colour_lists(g, total)


def total_colour_lists(g: Graph, total: TotalListAssignment) -> TotalColoring:
    """Proper total colouring with every colour drawn from its own list."""
    delta = max_degree(g)
    if len(total.edge_lists) != g.m or len(total.vertex_lists) != g.n:
        raise InputError("total list assignment does not match the graph")
    for v in range(g.n):
        if len(total.vertex_lists[v]) < delta + 4:
            raise InputError(f"vertex {v} has fewer than {delta + 4} colours")
    for eid in range(g.m):
        if len(total.edge_lists[eid]) < delta + 4:
            raise InputError(f"edge {eid} has fewer than {delta + 4} colours")
    vc = greedy_vertex_colouring(g, total.vertex_lists)
    residual = residual_edge_lists(g, total, vc)
    edge_colours, _ = colour_edges(g, residual)
    return TotalColoring(tuple(vc), tuple(edge_colours))
