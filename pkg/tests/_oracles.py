"""Independent test oracles, deliberately naive.

These share no code with the implementations they check: matching by subset
enumeration, interchange paths by exhaustive path enumeration, and the
one-edge-at-a-time sweep that colours paths and cycles directly.
"""

from __future__ import annotations

from itertools import combinations

from fancolour import Graph, InterchangePath, ListAssignment, max_degree
from fancolour.colouring import PartialEdgeColoring
from fancolour.interchange import validate_interchange_path


def matching_by_enumeration(g: Graph) -> int:
    """Maximum matching by trying every edge subset, largest first."""
    for size in range(min(g.m, g.n // 2), -1, -1):
        for subset in combinations(range(g.m), size):
            seen: set[int] = set()
            ok = True
            for eid in subset:
                u, v = g.endpoints(eid)
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                return size
    return 0


def enumerate_interchange_paths(g: Graph, lists: ListAssignment,
                                col: PartialEdgeColoring, start_edge: int,
                                first_colour: int, start_vertex: int,
                                restricted_to: int | None = None,
                                forbidden: dict | None = None,
                                cap: int = 500000) -> list[InterchangePath]:
    """All valid interchange paths from the given start, by brute force."""
    forbidden = forbidden or {}
    p2 = g.other_end(start_edge, start_vertex)
    found: list[InterchangePath] = []
    steps = {"n": 0}

    def banned(x: int) -> set[int]:
        return forbidden.get(x, set()) if restricted_to is not None else set()

    def descend(path: list[int], colours: list[int]) -> None:
        if steps["n"] > cap:
            raise RuntimeError("enumeration cap exceeded")
        prev, tail = path[-2], path[-1]
        eid = g.edge_id(prev, tail)
        incoming_old = colours[-2] if len(colours) >= 2 else None
        for c in sorted(lists[eid]):
            steps["n"] += 1
            if c == colours[-1] or c in banned(prev):
                continue
            if col.present(prev, c) and c != incoming_old:
                continue
            if not col.present(tail, c):
                if c not in banned(tail):
                    restricted = ()
                    if restricted_to is not None:
                        wn = set(g.neighbours(restricted_to))
                        restricted = tuple(x for x in path if x in wn)
                    ip = InterchangePath(tuple(path), tuple(colours + [c]),
                                         restricted_to=restricted_to,
                                         restricted_vertices=restricted)
                    if validate_interchange_path(g, lists, col, ip) is None:
                        found.append(ip)
                continue
            nxt = g.other_end(col.edge_at(tail, c), tail)
            if nxt in path:
                continue
            descend(path + [nxt], colours + [c])

    descend([start_vertex, p2], [first_colour])
    return found


def sweep_colour_low_degree(g: Graph, lists: ListAssignment) -> list[int] | None:
    """Directly colour a graph of maximum degree at most 2.

    Walks each path or cycle from an end (or an arbitrary cycle vertex),
    giving every edge the lowest list colour unused on its predecessor, and
    closing a cycle with the lowest colour clashing with neither neighbour.
    Returns None when some list is too small for this simple sweep.
    """
    assert max_degree(g) <= 2
    colour: list[int] = [-1] * g.m
    visited: set[int] = set()

    def walk(order: list[int]) -> bool:
        for eid in order:
            taken = set()
            for x in g.endpoints(eid):
                for other, _ in g.incident(x):
                    if colour[other] >= 0:
                        taken.add(colour[other])
            options = sorted(c for c in lists[eid] if c not in taken)
            if not options:
                return False
            colour[eid] = options[0]
        return True

    def trace_from(start: int) -> list[int]:
        order = []
        cur = start
        while True:
            nxt = [(e, u) for e, u in g.incident(cur) if e not in visited]
            if not nxt:
                return order
            eid, cur = nxt[0]
            visited.add(eid)
            order.append(eid)

    for start in range(g.n):  # path components, from an end
        if g.degree(start) == 1:
            order = trace_from(start)
            if order and not walk(order):
                return None
    for eid in range(g.m):  # remaining components are cycles
        if eid not in visited:
            order = trace_from(g.endpoints(eid)[0])
            if order and not walk(order):
                return None
    if any(c < 0 for c in colour):
        return None
    return colour
