"""Colour lists for edges and vertices, and their generators.

Colours are plain nonnegative integers; a palette is just a size.  A
``ListAssignment`` gives every edge a finite colour set, a
``TotalListAssignment`` covers vertices too.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import InputError, ParseError
from .graphs import Graph

Color = int


@dataclass(frozen=True)
class ListAssignment:
    """One colour set per edge id."""

    edge_lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        for eid, s in enumerate(self.edge_lists):
            for c in s:
                if c < 0:
                    raise InputError(f"edge {eid}: negative colour {c}")

    def __getitem__(self, eid: int) -> frozenset[int]:
        return self.edge_lists[eid]

    def __len__(self) -> int:
        return len(self.edge_lists)

    def min_size(self) -> int:
        return min((len(s) for s in self.edge_lists), default=0)


@dataclass(frozen=True)
class TotalListAssignment:
    """Colour sets for every edge and every vertex."""

    edge_lists: tuple[frozenset[int], ...]
    vertex_lists: tuple[frozenset[int], ...]

    def edge_assignment(self) -> ListAssignment:
        return ListAssignment(self.edge_lists)


def _check_graph_lists(g: Graph, lists: ListAssignment) -> None:
    if len(lists) != g.m:
        raise InputError(f"assignment covers {len(lists)} edges, graph has {g.m}")


def uniform_lists(g: Graph, k: int) -> ListAssignment:
    """Every edge gets {0, ..., k-1}."""
    if k < 1:
        raise InputError("list size must be positive")
    s = frozenset(range(k))
    return ListAssignment(tuple(s for _ in range(g.m)))


def random_lists(g: Graph, k: int, palette_size: int, seed: int) -> ListAssignment:
    """Each edge gets a uniformly random k-subset of {0, ..., palette_size-1}."""
    if k < 1:
        raise InputError("list size must be positive")
    if palette_size < k:
        raise InputError(f"palette of {palette_size} is too small for lists of {k}")
    rng = random.Random(seed)
    palette = range(palette_size)
    return ListAssignment(tuple(frozenset(rng.sample(palette, k)) for _ in range(g.m)))


def uniform_total_lists(g: Graph, k: int) -> TotalListAssignment:
    """Every edge and every vertex gets {0, ..., k-1}."""
    if k < 1:
        raise InputError("list size must be positive")
    s = frozenset(range(k))
    return TotalListAssignment(tuple(s for _ in range(g.m)),
                               tuple(s for _ in range(g.n)))


def random_total_lists(g: Graph, k: int, palette_size: int, seed: int) -> TotalListAssignment:
    """Random k-subsets of the palette for every edge and vertex."""
    if k < 1:
        raise InputError("list size must be positive")
    if palette_size < k:
        raise InputError(f"palette of {palette_size} is too small for lists of {k}")
    rng = random.Random(seed)
    palette = range(palette_size)
    return TotalListAssignment(
        tuple(frozenset(rng.sample(palette, k)) for _ in range(g.m)),
        tuple(frozenset(rng.sample(palette, k)) for _ in range(g.n)))


def greedy_vertex_colouring(g: Graph, vertex_lists: tuple[frozenset[int], ...]) -> list[int]:
    """Proper vertex colouring, each vertex from its own list.

    Vertices are processed in id order taking the lowest admissible colour;
    guaranteed to work when every list exceeds the vertex degree.
    """
    if len(vertex_lists) != g.n:
        raise InputError(f"{len(vertex_lists)} vertex lists for {g.n} vertices")
    colour: list[int] = [-1] * g.n
    for v in range(g.n):
        taken = {colour[u] for _, u in g.incident(v) if colour[u] >= 0}
        for c in sorted(vertex_lists[v]):
            if c not in taken:
                colour[v] = c
                break
        else:
            raise InputError(f"greedy vertex colouring stuck at vertex {v}")
    return colour


def residual_edge_lists(g: Graph, total: TotalListAssignment,
                        vertex_colouring: list[int]) -> ListAssignment:
    """Edge lists after removing each edge's two endpoint colours.

    ``vertex_colouring`` must be proper and stay within the vertex lists;
    list sizes shrink by at most 2.
    """
    if len(vertex_colouring) != g.n:
        raise InputError("vertex colouring must cover every vertex")
    for v, c in enumerate(vertex_colouring):
        if c not in total.vertex_lists[v]:
            raise InputError(f"vertex {v}: colour {c} not in its list")
    for u, v in g.edges:
        if vertex_colouring[u] == vertex_colouring[v]:
            raise InputError(f"vertex colouring improper on edge ({u}, {v})")
    out = []
    for eid, (u, v) in enumerate(g.edges):
        out.append(total.edge_lists[eid] - {vertex_colouring[u], vertex_colouring[v]})
    return ListAssignment(tuple(out))


# --- JSON round trip -------------------------------------------------------
#
# Schema: {"edge_lists": [[c, ...] per edge id],
#          "vertex_lists": [[c, ...] per vertex id] | null}
# Edge order matches the graph file's edge order.

def _lists_from_json(rows, what: str) -> tuple[frozenset[int], ...]:
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not all(isinstance(c, int) and c >= 0 for c in row):
            raise ParseError(f"{what} {i}: expected a list of nonnegative colours")
        if len(set(row)) != len(row):
            raise ParseError(f"{what} {i}: duplicate colours")
        out.append(frozenset(row))
    return tuple(out)


def lists_to_json(lists: ListAssignment | TotalListAssignment) -> str:
    vertex = None
    if isinstance(lists, TotalListAssignment):
        vertex = [sorted(s) for s in lists.vertex_lists]
    doc = {"edge_lists": [sorted(s) for s in lists.edge_lists],
           "vertex_lists": vertex}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def lists_from_json(text: str) -> ListAssignment | TotalListAssignment:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "edge_lists" not in doc:
        raise ParseError("expected an object with an 'edge_lists' field")
    edge = _lists_from_json(doc["edge_lists"], "edge list")
    vertex_rows = doc.get("vertex_lists")
    if vertex_rows is None:
        return ListAssignment(edge)
    return TotalListAssignment(edge, _lists_from_json(vertex_rows, "vertex list"))
