"""Hall-style counting conditions and their condition indices.

A list assignment satisfies the edge counting condition when every induced
subgraph H has enough room: |E(H)| is at most the sum over colours of the
matching number of the edges of H carrying that colour in their lists.  The
edge condition index is the least uniform list size forcing the condition;
it equals the maximum over induced subgraphs of ceil(|E(H)| / matching(H)).

The total variants count vertices plus edges against total independence
numbers.  There the condition ranges over substructures given by *arbitrary*
sets of vertices and edges (an edge may be picked without its endpoints);
restricting to vertex-induced substructures would miss, for example, a
closed star without its leaves, whose ratio (degree+1)/1 is what pushes the
total condition number up to max_degree + 1 on stars.  The formula route
therefore scans closed vertex stars plus connected vertex-induced
substructures, a reduction the test suite validates against the full
item-subset scan; the uniform-list route scans every item subset outright.

Subgraph sweeps are exponential, so every entry point carries a size guard.
The ratio maximisation only scans connected vertex subsets: numerator and
denominator are both additive over disjoint unions, so a disconnected
maximiser can never beat its best component (also test-verified against the
unrestricted scan).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import GuardExceeded, InputError, InvariantViolation
from .exact import IndependenceSolver, total_conflicts
from .graphs import Graph
from .lists import (ListAssignment, TotalListAssignment, uniform_lists,
                    uniform_total_lists)


@dataclass(frozen=True)
class HallReport:
    """A condition-index value with the substructure attaining it.

    ``value == ceil(numerator / denominator)`` where the numerator counts the
    witness's edges (vertices plus edges in the total case) and the
    denominator is its matching number (total independence number).  The
    total case also records which edges the witness picked, since it may
    take edges without their endpoints.
    """

    value: int
    witness: tuple[int, ...]
    numerator: int
    denominator: int
    witness_edges: tuple[int, ...] | None = None

    def to_json(self) -> str:
        doc = {"value": self.value, "witness": list(self.witness),
               "numerator": self.numerator, "denominator": self.denominator,
               "witness_edges": (None if self.witness_edges is None
                                 else list(self.witness_edges))}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class HallViolation:
    """A substructure where the counting condition fails."""

    witness: tuple[int, ...]
    required: int     # items of the substructure that need colours
    available: int    # sum of per-colour independence numbers
    witness_edges: tuple[int, ...] | None = None

    def __str__(self) -> str:
        where = f"substructure on vertices {list(self.witness)}"
        if self.witness_edges is not None:
            where += f" and edges {list(self.witness_edges)}"
        return (f"{where} needs {self.required} "
                f"but colours supply only {self.available}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _vertex_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.neighbours(v)) for v in range(g.n)]


def _is_connected(mask: int, adj: list[int]) -> bool:
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= adj[v] & mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _edge_solver(g: Graph) -> IndependenceSolver:
    """Independent edge sets, i.e. matchings, as an independence problem."""
    conf = [0] * g.m
    for v in range(g.n):
        inc = [eid for eid, _ in g.incident(v)]
        for i in inc:
            for j in inc:
                if i != j:
                    conf[i] |= 1 << j
    return IndependenceSolver(conf)


def _edges_within(g: Graph, mask: int) -> int:
    out = 0
    for eid, (u, v) in enumerate(g.edges):
        if (mask >> u) & 1 and (mask >> v) & 1:
            out |= 1 << eid
    return out


def _witness_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


# --- edge condition ---------------------------------------------------------

def check_hall_edge_condition(g: Graph, lists: ListAssignment,
                              guard: int = 12) -> HallViolation | None:
    """First induced subgraph violating the edge counting condition, if any.

    Subgraphs are scanned in increasing bitmask order (bit v = vertex v), so
    the reported witness is deterministic.
    """
    if g.n > guard:
        raise GuardExceeded(f"{g.n} vertices exceeds the guard of {guard}")
    if len(lists) != g.m:
        raise InputError("list assignment does not match the graph")
    solver = _edge_solver(g)
    colour_edges: dict[int, int] = {}
    for eid in range(g.m):
        for c in lists[eid]:
            colour_edges[c] = colour_edges.get(c, 0) | (1 << eid)
    for mask in range(1, 1 << g.n):
        emask = _edges_within(g, mask)
        if emask == 0:
            continue
        required = emask.bit_count()
        available = 0
        for sub in colour_edges.values():
            hit = sub & emask
            if hit:
                available += solver.mis(hit)
        if available < required:
            return HallViolation(_witness_tuple(mask), required, available)
    return None


def hall_condition_index(g: Graph, guard: int = 16,
                         connected_only: bool = True) -> HallReport:
    """Max over induced subgraphs with an edge of ceil(edges / matching).

    Ties go to the lexicographically smallest witness.  An edgeless graph
    has nothing to colour and reports the degenerate value 1.
    """
    if g.n > guard:
        raise GuardExceeded(f"{g.n} vertices exceeds the guard of {guard}")
    if g.m == 0:
        return HallReport(1, (), 1, 1)
    adj = _vertex_masks(g)
    solver = _edge_solver(g)
    best: HallReport | None = None
    for mask in range(1, 1 << g.n):
        if connected_only and not _is_connected(mask, adj):
            continue
        emask = _edges_within(g, mask)
        if emask == 0:
            continue
        edge_count = emask.bit_count()
        alpha = solver.mis(emask)
        value = _ceil_div(edge_count, alpha)
        witness = _witness_tuple(mask)
        if best is None or value > best.value \
                or (value == best.value and witness < best.witness):
            best = HallReport(value, witness, edge_count, alpha)
    assert best is not None
    return best


def hall_condition_index_via_lists(g: Graph, guard: int = 10) -> int:
    """Least uniform list size whose assignment passes the edge condition.

    An independent route to the same number as ``hall_condition_index``.
    """
    if g.n > guard:
        raise GuardExceeded(f"{g.n} vertices exceeds the guard of {guard}")
    if g.m == 0:
        return 1
    for size in range(1, g.m + 1):
        if check_hall_edge_condition(g, uniform_lists(g, size), guard=g.n) is None:
            return size
    raise InvariantViolation(
        "uniform lists as large as the edge count always satisfy the condition")


# --- total condition --------------------------------------------------------
#
# Substructure items are numbered vertices first (bit v = vertex v) and then
# edges (bit n + eid = edge eid).

def _item_tuples(g: Graph, items: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    vertices = _witness_tuple(items & ((1 << g.n) - 1))
    edges = tuple(b - g.n for b in _witness_tuple(items >> g.n << g.n))
    return vertices, edges


def _total_items_within(g: Graph, mask: int) -> int:
    items = mask  # vertex item i is bit i
    for eid, (u, v) in enumerate(g.edges):
        if (mask >> u) & 1 and (mask >> v) & 1:
            items |= 1 << (g.n + eid)
    return items


def check_hall_total_condition(g: Graph, total: TotalListAssignment,
                               guard_items: int = 18) -> HallViolation | None:
    """First substructure violating the total counting condition, if any.

    Scans every nonempty set of vertices and edges, so the guard limits the
    item count (vertices plus edges).
    """
    if g.n + g.m > guard_items:
        raise GuardExceeded(
            f"{g.n + g.m} items exceeds the guard of {guard_items}")
    if len(total.edge_lists) != g.m or len(total.vertex_lists) != g.n:
        raise InputError("total list assignment does not match the graph")
    solver = IndependenceSolver(total_conflicts(g))
    colour_items: dict[int, int] = {}
    for v in range(g.n):
        for c in total.vertex_lists[v]:
            colour_items[c] = colour_items.get(c, 0) | (1 << v)
    for eid in range(g.m):
        for c in total.edge_lists[eid]:
            colour_items[c] = colour_items.get(c, 0) | (1 << (g.n + eid))
    for items in range(1, 1 << (g.n + g.m)):
        required = items.bit_count()
        available = 0
        for sub in colour_items.values():
            hit = sub & items
            if hit:
                available += solver.mis(hit)
                if available >= required:
                    break
        if available < required:
            vertices, edges = _item_tuples(g, items)
            return HallViolation(vertices, required, available,
                                 witness_edges=edges)
    return None


def total_hall_condition_number(g: Graph, guard: int = 16,
                                connected_only: bool = True) -> HallReport:
    """Max of ceil(items / independence) over substructures.

    Scans closed vertex stars (a vertex with all its edges but no other
    endpoint, independence 1) and connected vertex-induced substructures;
    the tests check this family against the unrestricted item-subset scan.
    Single vertices count (ratio 1/1); ties go to the lexicographically
    smallest witness.
    """
    if g.n > guard:
        raise GuardExceeded(f"{g.n} vertices exceeds the guard of {guard}")
    if g.n == 0:
        return HallReport(1, (), 1, 1, witness_edges=())
    adj = _vertex_masks(g)
    solver = IndependenceSolver(total_conflicts(g))
    best: HallReport | None = None

    def offer(value, witness, witness_edges, count, alpha):
        nonlocal best
        if best is None or value > best.value or (
                value == best.value
                and (witness, witness_edges) < (best.witness, best.witness_edges)):
            best = HallReport(value, witness, count, alpha,
                              witness_edges=witness_edges)

    for v in range(g.n):
        star = tuple(sorted(eid for eid, _ in g.incident(v)))
        offer(g.degree(v) + 1, (v,), star, g.degree(v) + 1, 1)
    for mask in range(1, 1 << g.n):
        if connected_only and not _is_connected(mask, adj):
            continue
        items = _total_items_within(g, mask)
        count = items.bit_count()
        alpha = solver.mis(items)
        vertices, edges = _item_tuples(g, items)
        offer(_ceil_div(count, alpha), vertices, edges, count, alpha)
    assert best is not None
    return best


def _alpha_array(g: Graph) -> "np.ndarray":
    """Independence number of every item subset, as a flat array.

    Classic subset dynamic programme on the total conflict structure,
    vectorised over all masks sharing their lowest set bit.
    """
    conf = total_conflicts(g)
    items = g.n + g.m
    alpha = np.zeros(1 << items, dtype=np.uint8)
    for b in reversed(range(items)):
        closed = conf[b] | (1 << b)
        high = np.arange(1 << (items - b - 1), dtype=np.int64)
        masks = (high << (b + 1)) | (1 << b)
        excluded = alpha[masks ^ (1 << b)]
        included = alpha[masks & ~closed] + 1
        alpha[masks] = np.maximum(excluded, included)
    return alpha


def _popcount_array(size_bits: int) -> "np.ndarray":
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(size_bits):
        pc = np.concatenate([pc, pc + 1])
    return pc


def total_hall_condition_number_via_lists(g: Graph, guard_items: int = 22) -> int:
    """Least uniform total list size passing the total condition.

    The independent route to ``total_hall_condition_number``: evaluates the
    counting condition over *every* item subset (no structural reduction),
    which doubles as a check of the formula route's restricted scan.
    """
    items = g.n + g.m
    if items > guard_items:
        raise GuardExceeded(f"{items} items exceeds the guard of {guard_items}")
    if items == 0:
        return 1
    alpha = _alpha_array(g).astype(np.int64)
    pc = _popcount_array(items).astype(np.int64)
    for size in range(1, items + 1):
        # uniform lists put every colour on every item, so each of the
        # ``size`` colours contributes the subset's full independence number
        if not np.any(pc > size * alpha):
            return size
    raise InvariantViolation(
        "uniform total lists as large as the item count always satisfy "
        "the condition")
