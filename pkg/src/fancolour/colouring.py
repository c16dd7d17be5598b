"""Partial edge colourings, total colourings, and independent checkers.

``PartialEdgeColoring`` is the solver's working state: a flat colour array
plus a per-vertex colour index so "which edge at v has colour c" is O(1).
Assignments are verified on the way in, so an improper state is
unrepresentable; a breach raises instead of corrupting the colouring.

The ``check_*`` functions at the bottom re-verify finished colourings by
brute force, sharing no data structures with the solver.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError, InvariantViolation, ParseError
from .graphs import Graph
from .lists import ListAssignment, TotalListAssignment

UNCOLOURED = -1


class PartialEdgeColoring:
    """Mutable proper partial edge colouring of a fixed graph.

    When ``lists`` is given, assignments must also stay inside each edge's
    list.  One colouring is owned by one task; use ``copy`` to branch.
    """

    def __init__(self, graph: Graph, lists: ListAssignment | None = None):
        if lists is not None and len(lists) != graph.m:
            raise InputError("list assignment does not match the graph")
        self.graph = graph
        self.lists = lists
        self._colour: list[int] = [UNCOLOURED] * graph.m
        # _at[v][c] = edge id of the unique c-coloured edge at v.
        self._at: list[dict[int, int]] = [dict() for _ in range(graph.n)]

    def copy(self) -> "PartialEdgeColoring":
        dup = PartialEdgeColoring.__new__(PartialEdgeColoring)
        dup.graph = self.graph
        dup.lists = self.lists
        dup._colour = list(self._colour)
        dup._at = [dict(d) for d in self._at]
        return dup

    def colour_of(self, eid: int) -> int | None:
        c = self._colour[eid]
        return None if c == UNCOLOURED else c

    def is_coloured(self, eid: int) -> bool:
        return self._colour[eid] != UNCOLOURED

    def present(self, v: int, c: int) -> bool:
        return c in self._at[v]

    def edge_at(self, v: int, c: int) -> int | None:
        """Edge id of the unique edge at ``v`` coloured ``c``, if any."""
        return self._at[v].get(c)

    def colours_at(self, v: int) -> set[int]:
        return set(self._at[v])

    def coloured_incident(self, v: int) -> list[tuple[int, int]]:
        """Pairs ``(colour, edge_id)`` for the coloured edges at ``v``."""
        return list(self._at[v].items())

    def coloured_degree(self, v: int) -> int:
        return len(self._at[v])

    def assign(self, eid: int, c: int) -> None:
        if self._colour[eid] != UNCOLOURED:
            raise InvariantViolation(f"edge {eid} is already coloured")
        if self.lists is not None and c not in self.lists[eid]:
            raise InvariantViolation(f"colour {c} not in the list of edge {eid}")
        u, v = self.graph.endpoints(eid)
        if c in self._at[u] or c in self._at[v]:
            raise InvariantViolation(
                f"colour {c} already present at an endpoint of edge {eid}")
        self._colour[eid] = c
        self._at[u][c] = eid
        self._at[v][c] = eid

    def unassign(self, eid: int) -> None:
        c = self._colour[eid]
        if c == UNCOLOURED:
            raise InvariantViolation(f"edge {eid} is not coloured")
        u, v = self.graph.endpoints(eid)
        del self._at[u][c]
        del self._at[v][c]
        self._colour[eid] = UNCOLOURED

    def uncoloured_edges(self) -> list[int]:
        return [e for e, c in enumerate(self._colour) if c == UNCOLOURED]

    def as_list(self) -> list[int | None]:
        return [None if c == UNCOLOURED else c for c in self._colour]

    def complete_list(self) -> list[int]:
        if UNCOLOURED in self._colour:
            raise InvariantViolation("colouring is not complete")
        return list(self._colour)


@dataclass(frozen=True)
class TotalColoring:
    """Colours for every vertex and every edge of a graph."""

    vertex_colours: tuple[int, ...]
    edge_colours: tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """First failed clause of a checker, with enough context to locate it."""

    clause: str
    message: str

    def __str__(self) -> str:
        return f"{self.clause}: {self.message}"


def check_edge_colouring(g: Graph, lists: ListAssignment | None,
                         colours: list[int]) -> Violation | None:
    """Brute-force verification of a complete edge colouring.

    Checks totality, list membership (when lists are given) and that no two
    edges sharing a vertex have equal colours.  Returns the first violation,
    or None when everything holds.
    """
    if len(colours) != g.m:
        return Violation("totality", f"{len(colours)} colours for {g.m} edges")
    for eid, c in enumerate(colours):
        if c is None:
            return Violation("totality", f"edge {eid} is uncoloured")
        if lists is not None and c not in lists[eid]:
            return Violation("list-membership",
                             f"edge {eid} has colour {c} outside its list")
    for v in range(g.n):
        inc = g.incident(v)
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                e, f = inc[i][0], inc[j][0]
                if colours[e] == colours[f]:
                    return Violation(
                        "incident-edges",
                        f"edges {e} and {f} share vertex {v} and colour {colours[e]}")
    return None


def check_total_colouring(g: Graph, lists: TotalListAssignment | None,
                          tc: TotalColoring) -> Violation | None:
    """Brute-force verification of a total colouring (vertices and edges)."""
    if len(tc.vertex_colours) != g.n or len(tc.edge_colours) != g.m:
        return Violation("totality", "colour arrays do not match the graph")
    if lists is not None:
        for v, c in enumerate(tc.vertex_colours):
            if c not in lists.vertex_lists[v]:
                return Violation("list-membership",
                                 f"vertex {v} has colour {c} outside its list")
        for eid, c in enumerate(tc.edge_colours):
            if c not in lists.edge_lists[eid]:
                return Violation("list-membership",
                                 f"edge {eid} has colour {c} outside its list")
    bad = check_edge_colouring(g, None, list(tc.edge_colours))
    if bad is not None:
        return bad
    for u, v in g.edges:
        if tc.vertex_colours[u] == tc.vertex_colours[v]:
            return Violation("adjacent-vertices",
                             f"vertices {u} and {v} share colour {tc.vertex_colours[u]}")
    for eid, (u, v) in enumerate(g.edges):
        for w in (u, v):
            if tc.vertex_colours[w] == tc.edge_colours[eid]:
                return Violation(
                    "vertex-incident-edge",
                    f"vertex {w} and edge {eid} share colour {tc.edge_colours[eid]}")
    return None


# --- JSON round trip -------------------------------------------------------
#
# Schema: {"edge_colours": [c per edge id],
#          "vertex_colours": [c per vertex id] | null,
#          "stats": {...}}

def colouring_to_json(edge_colours: list[int],
                      vertex_colours: list[int] | None = None,
                      stats: dict | None = None) -> str:
    doc = {"edge_colours": list(edge_colours),
           "vertex_colours": None if vertex_colours is None else list(vertex_colours),
           "stats": stats or {}}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def colouring_from_json(text: str) -> tuple[list[int], list[int] | None, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "edge_colours" not in doc:
        raise ParseError("expected an object with an 'edge_colours' field")
    edge = doc["edge_colours"]
    if not isinstance(edge, list) or not all(isinstance(c, int) for c in edge):
        raise ParseError("'edge_colours' must be a list of integers")
    vertex = doc.get("vertex_colours")
    if vertex is not None:
        if not isinstance(vertex, list) or not all(isinstance(c, int) for c in vertex):
            raise ParseError("'vertex_colours' must be a list of integers or null")
    return list(edge), vertex, doc.get("stats", {})
