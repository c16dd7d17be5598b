"""Colour interchange paths: find, validate, apply, cut.

An interchange path rewires colours along a path ``p1, p2, ..., ps`` whose
edges ``p_i p_{i+1}`` currently carry colours ``a_1, ..., a_{s-1}``: shifting
every edge to the next colour in the sequence ``a_2, ..., a_s`` yields
another proper colouring and frees ``a_1`` at ``p1``.  The final colour
``a_s`` must be absent at ``p_s`` beforehand, which is what lets the shift
terminate.

Paths can be *restricted* relative to a vertex ``w``: at path vertices that
neighbour ``w`` the newly arriving colour must avoid a caller-supplied ban
set (the fan solver bans each leaf's reserved missing colour there, so an
interchange never destroys the fan's bookkeeping).  The "arriving" colour at
``p_k`` is ``a_{k+1}``, the one placed on the outgoing edge; at the final
vertex it is ``a_s``.

The search is an exhaustive depth-first backtrack over colour choices, so a
``NoInterchangePath`` failure is a proof that no such path exists under the
given constraints.  At each step colours that terminate the path are tried
first (in ascending order), then colours that extend it; this biases the
search towards short paths and makes it deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .colouring import PartialEdgeColoring, Violation
from .errors import InputError, InvariantViolation, NoInterchangePath
from .graphs import Graph
from .lists import ListAssignment

ForbiddenChoice = dict[int, frozenset[int] | set[int]]


@dataclass(frozen=True)
class InterchangePath:
    """A path with its colour sequence ``a_1 ... a_s`` (one per vertex).

    The edge ``p_i p_{i+1}`` carries ``colours[i-1]`` before the interchange
    and ``colours[i]`` after it.  ``restricted_to`` records the restriction
    vertex ``w`` when one applied; ``restricted_vertices`` the path vertices
    neighbouring it.
    """

    vertices: tuple[int, ...]
    colours: tuple[int, ...]
    restricted_to: int | None = None
    restricted_vertices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise InputError("a path needs at least two vertices")
        if len(self.colours) != len(self.vertices):
            raise InputError("need exactly one colour per path vertex")

    @property
    def s(self) -> int:
        return len(self.vertices)

    @property
    def first_colours(self) -> tuple[int, ...]:
        return self.colours[:-1]

    @property
    def second_colours(self) -> tuple[int, ...]:
        return self.colours[1:]

    def edge_ids(self, g: Graph) -> list[int]:
        out = []
        for u, v in zip(self.vertices, self.vertices[1:]):
            eid = g.edge_id(u, v)
            if eid is None:
                raise InputError(f"path edge ({u}, {v}) not in the graph")
            out.append(eid)
        return out

    def position(self, v: int) -> int | None:
        """1-based position of ``v`` on the path, or None."""
        try:
            return self.vertices.index(v) + 1
        except ValueError:
            return None


def arriving_colour(ip: InterchangePath, k: int) -> int:
    """Colour newly appearing at path position ``k`` (1-based) after the shift."""
    return ip.colours[k] if k < ip.s else ip.colours[ip.s - 1]


def find_interchange_path(g: Graph, lists: ListAssignment, col: PartialEdgeColoring,
                          start_edge: int, first_colour: int, start_vertex: int,
                          restricted_to: int | None = None,
                          forbidden: ForbiddenChoice | None = None,
                          trace: list[str] | None = None) -> InterchangePath:
    """Exhaustive search for an interchange path starting on ``start_edge``.

    ``start_vertex`` orients the path (it becomes ``p1``); ``first_colour``
    must be the current colour of the start edge.  ``forbidden`` maps
    neighbours of ``restricted_to`` to colours that must not arrive there.
    Raises ``NoInterchangePath`` when the exhaustive search fails.
    """
    if col.colour_of(start_edge) != first_colour:
        raise InputError(
            f"start edge {start_edge} is not coloured {first_colour}")
    u, v = g.endpoints(start_edge)
    if start_vertex not in (u, v):
        raise InputError(f"vertex {start_vertex} is not on edge {start_edge}")
    p1, p2 = start_vertex, (v if start_vertex == u else u)
    forbidden = forbidden or {}
    if restricted_to is None:
        if forbidden:
            raise InputError("forbidden choices need a restriction vertex")
    else:
        if restricted_to in (p1, p2):
            raise InputError("restriction vertex may not start the path")
        wn = set(g.neighbours(restricted_to))
        for x in forbidden:
            if x not in wn:
                raise InputError(
                    f"forbidden vertex {x} is not a neighbour of {restricted_to}")

    def banned(x: int) -> frozenset[int] | set[int]:
        return forbidden.get(x, frozenset())

    path = [p1, p2]
    colours = [first_colour]
    on_path = {p1, p2}
    nodes = 0

    def candidates(prev: int, eid: int, incoming_old: int | None):
        # Colours legal on the edge (prev, tail): in the list, not banned at
        # prev, and absent at prev -- except that the colour draining off the
        # previous path edge may be reused, since it leaves prev in the shift.
        for c in sorted(lists[eid]):
            if c in banned(prev):
                continue
            if col.present(prev, c) and c != incoming_old:
                continue
            if c == colours[-1]:
                continue
            yield c

    def extend() -> bool:
        nonlocal nodes
        prev, tail = path[-2], path[-1]
        eid = g.edge_id(prev, tail)
        incoming_old = colours[-2] if len(colours) >= 2 else None
        cands = list(candidates(prev, eid, incoming_old))
        # Terminating colours first: absent at the tail and not banned there.
        for c in cands:
            nodes += 1
            if not col.present(tail, c) and c not in banned(tail):
                colours.append(c)
                if trace is not None:
                    trace.append(f"ACCEPT s={len(path)}")
                return True
        for c in cands:
            e_next = col.edge_at(tail, c)
            if e_next is None:
                continue  # absent but banned at tail: cannot stop, cannot go
            nxt = g.other_end(e_next, tail)
            if nxt in on_path:
                continue
            nodes += 1
            path.append(nxt)
            colours.append(c)
            on_path.add(nxt)
            if trace is not None:
                trace.append(f"PUSH {nxt} {c}")
            if extend():
                return True
            on_path.discard(nxt)
            path.pop()
            colours.pop()
            if trace is not None:
                trace.append("POP")
        return False

    if not extend():
        raise NoInterchangePath(
            f"no interchange path from edge {start_edge} "
            f"(colour {first_colour}, start {p1})", nodes)

    restricted = ()
    if restricted_to is not None:
        wn = set(g.neighbours(restricted_to))
        restricted = tuple(x for x in path if x in wn)
    ip = InterchangePath(tuple(path), tuple(colours),
                         restricted_to=restricted_to,
                         restricted_vertices=restricted)
    if trace is not None:
        trace.append(json.dumps({"path": list(ip.vertices),
                                 "colours": list(ip.colours)},
                                sort_keys=True))
    bad = validate_interchange_path(g, lists, col, ip)
    if bad is not None:
        raise InvariantViolation(f"search produced an invalid path: {bad}")
    return ip


def validate_interchange_path(g: Graph, lists: ListAssignment,
                              col: PartialEdgeColoring,
                              ip: InterchangePath) -> Violation | None:
    """Check every interchange-path invariant against the ambient colouring.

    Returns the first violated clause (report style), or None when the path
    is sound.
    """
    vs, cs, s = ip.vertices, ip.colours, ip.s
    if len(set(vs)) != s:
        return Violation("vertices-distinct", f"repeated vertex in {vs}")
    eids = []
    for i, (u, v) in enumerate(zip(vs, vs[1:])):
        eid = g.edge_id(u, v)
        if eid is None:
            return Violation("edge-exists", f"({u}, {v}) is not an edge")
        eids.append(eid)
        if col.colour_of(eid) != cs[i]:
            return Violation(
                "current-colour",
                f"edge ({u}, {v}) carries {col.colour_of(eid)}, path says {cs[i]}")
        if cs[i] not in lists[eid]:
            return Violation("colour-in-list",
                             f"colour {cs[i]} not in the list of edge ({u}, {v})")
        if cs[i + 1] not in lists[eid]:
            return Violation("colour-in-list",
                             f"colour {cs[i + 1]} not in the list of edge ({u}, {v})")
        if cs[i] == cs[i + 1]:
            return Violation("colour-changes",
                             f"edge ({u}, {v}) would keep colour {cs[i]}")
    path_edges = set(eids)

    def ambient(v: int) -> set[int]:
        return {c for c, e in col.coloured_incident(v) if e not in path_edges}

    # Both colourings must be proper at every path vertex against the
    # ambient colouring with the path's own edges removed.
    for k, v in enumerate(vs):  # k is 0-based here
        amb = ambient(v)
        for seq_name, offset in (("first-colouring", 0), ("second-colouring", 1)):
            local = []
            if k > 0:  # edge (p_{k-1}, p_k)
                local.append(cs[k - 1 + offset])
            if k < s - 1:  # edge (p_k, p_{k+1})
                local.append(cs[k + offset])
            if len(set(local)) != len(local):
                return Violation(seq_name,
                                 f"colours {local} clash at vertex {v}")
            for c in local:
                if c in amb:
                    return Violation(
                        seq_name, f"colour {c} already present at vertex {v}")
    # End conditions: a_s free at p_s before the shift, a_{s-1} free after.
    end = vs[-1]
    if col.present(end, cs[-1]):
        return Violation("end-colour-free",
                         f"colour {cs[-1]} already present at end vertex {end}")
    after_end = ambient(end) | {cs[-1]}
    if cs[-2] in after_end:
        return Violation("end-colour-free",
                         f"colour {cs[-2]} would remain at end vertex {end}")

    w = ip.restricted_to
    if w is not None:
        if w in vs[:2]:
            return Violation("restriction-start",
                             f"restriction vertex {w} starts the path")
        wn = set(g.neighbours(w))
        for x in ip.restricted_vertices:
            if x not in wn:
                return Violation("restricted-neighbour",
                                 f"restricted vertex {x} is not a neighbour of {w}")
            k = ip.position(x)
            if k is None:
                return Violation("restricted-neighbour",
                                 f"restricted vertex {x} is not on the path")
            if 2 <= k <= s - 1:
                # Internal restricted vertex: the incoming edge must offer an
                # alternative colour shared with the edge towards w.
                e_in = g.edge_id(vs[k - 2], x)
                e_w = g.edge_id(x, w)
                if cs[k - 2] not in lists[e_in]:
                    return Violation("restricted-incoming-colour",
                                     f"colour {cs[k - 2]} missing from the "
                                     f"incoming list at vertex {x}")
                shared = (lists[e_in] & lists[e_w]) - {cs[k - 2]}
                if not shared:
                    return Violation(
                        "restricted-alternative",
                        f"no alternative colour at restricted vertex {x}")
    return None


def apply_interchange(col: PartialEdgeColoring,
                      ip: InterchangePath,
                      lists: ListAssignment | None = None) -> PartialEdgeColoring:
    """Shift every path edge to its second colour; returns a new colouring.

    The path is validated first and the operation refuses to proceed on any
    violation, so the result is always proper.
    """
    g = col.graph
    use_lists = lists if lists is not None else col.lists
    if use_lists is None:
        raise InputError("apply_interchange needs the list assignment")
    bad = validate_interchange_path(g, use_lists, col, ip)
    if bad is not None:
        raise InvariantViolation(f"refusing to apply an invalid path: {bad}")
    new = col.copy()
    eids = ip.edge_ids(g)
    for eid in eids:
        new.unassign(eid)
    for eid, c in zip(eids, ip.second_colours):
        new.assign(eid, c)
    if new.present(ip.vertices[0], ip.colours[0]):
        raise InvariantViolation("first colour still present at the start vertex")
    if new.present(ip.vertices[-1], ip.colours[-2]):
        raise InvariantViolation("old final colour still present at the end vertex")
    return new


def cut_interchange_path(ip: InterchangePath, t: int) -> tuple[InterchangePath, InterchangePath]:
    """Split the path at 1-based position ``t`` (with ``2 <= t <= s-1``).

    Requires ``a_{t-1} != a_{t+1}``; the head keeps colours ``a_1 ... a_t``
    and the tail ``a_t ... a_s``.  Each part is a valid interchange path in
    the colouring where the other part keeps its stated colours.  A part
    whose first two vertices include the restriction vertex loses the
    restriction marker (the ban data cannot apply there).
    """
    s = ip.s
    if not (2 <= t <= s - 1):
        raise InputError(f"cut position must be in [2, {s - 1}], got {t}")
    if ip.colours[t - 2] == ip.colours[t]:
        raise InputError(
            f"cannot cut at {t}: colours before and after both equal "
            f"{ip.colours[t]}")

    def make(vertices, colours):
        w = ip.restricted_to
        if w is not None and w in vertices[:2]:
            w = None
        restricted = ()
        if w is not None:
            restricted = tuple(x for x in ip.restricted_vertices if x in vertices)
        return InterchangePath(tuple(vertices), tuple(colours),
                               restricted_to=w, restricted_vertices=restricted)

    head = make(ip.vertices[:t], ip.colours[:t])
    tail = make(ip.vertices[t - 1:], ip.colours[t - 1:])
    return head, tail


def path_to_dot(ip: InterchangePath) -> str:
    """DOT rendering of the path, edges labelled "before -> after"."""
    lines = ["graph interchange_path {"]
    for v in ip.vertices:
        lines.append(f'  {v};')
    for i, (u, v) in enumerate(zip(ip.vertices, ip.vertices[1:])):
        lines.append(f'  {u} -- {v} [label="{ip.colours[i]} -> {ip.colours[i + 1]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
