"""Brute-force ground truth at desk scale.

Everything here is exhaustive (within an explicit budget), so results are
proofs: a "no" from the colourability decision really means no colouring
exists.  Intended for small graphs; the expensive routines carry size
guards.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import GuardExceeded, InputError, InvariantViolation
from .graphs import Graph, max_degree
from .lists import ListAssignment, uniform_lists


@dataclass(frozen=True)
class OracleBudget:
    """Limits for the backtracking searches."""

    node_limit: int = 10 ** 8
    timeout_s: float | None = None

    def __post_init__(self):
        if self.node_limit <= 0:
            raise InputError("node limit must be positive")


@dataclass(frozen=True)
class OracleOutcome:
    """Result of a colourability decision.

    ``status`` is ``"yes"`` (with a witness colouring), ``"no"`` (an
    exhaustive-search proof) or ``"budget_exceeded"``.
    """

    status: str
    witness: list[int] | None
    nodes: int


def list_edge_colourable(g: Graph, lists: ListAssignment,
                         budget: OracleBudget | None = None) -> OracleOutcome:
    """Decide whether a proper edge colouring within the lists exists.

    Backtracks over edges in ascending id with colours in ascending order,
    pruning whenever some uncoloured edge has no remaining option.
    """
    budget = budget or OracleBudget()
    if len(lists) != g.m:
        raise InputError("list assignment does not match the graph")
    colour: list[int] = [-1] * g.m
    used: list[set[int]] = [set() for _ in range(g.n)]
    deadline = (time.monotonic() + budget.timeout_s
                if budget.timeout_s is not None else None)
    state = {"nodes": 0, "exceeded": False}

    def out_of_budget() -> bool:
        if state["nodes"] > budget.node_limit:
            return True
        if deadline is not None and state["nodes"] % 4096 == 0 \
                and time.monotonic() > deadline:
            return True
        return False

    def descend(i: int) -> bool:
        if i == g.m:
            return True
        u, v = g.edges[i]
        for c in sorted(lists[i]):
            if c in used[u] or c in used[v]:
                continue
            state["nodes"] += 1
            if out_of_budget():
                state["exceeded"] = True
                return False
            colour[i] = c
            used[u].add(c)
            used[v].add(c)
            ok = True
            for x in (u, v):
                for eid, _ in g.incident(x):
                    if eid > i:
                        a, b = g.edges[eid]
                        if all(cc in used[a] or cc in used[b] for cc in lists[eid]):
                            ok = False
                            break
                if not ok:
                    break
            if ok and descend(i + 1):
                return True
            used[u].discard(c)
            used[v].discard(c)
            colour[i] = -1
            if state["exceeded"]:
                return False
        return False

    if descend(0):
        return OracleOutcome("yes", list(colour), state["nodes"])
    if state["exceeded"]:
        return OracleOutcome("budget_exceeded", None, state["nodes"])
    return OracleOutcome("no", None, state["nodes"])


def chromatic_index(g: Graph, budget: OracleBudget | None = None,
                    guard_edges: int = 24) -> int:
    """Exact chromatic index; guaranteed to be max_degree or max_degree + 1."""
    if g.m > guard_edges:
        raise GuardExceeded(f"{g.m} edges exceeds the guard of {guard_edges}")
    if g.m == 0:
        return 0
    delta = max_degree(g)
    for k in (delta, delta + 1):
        outcome = list_edge_colourable(g, uniform_lists(g, k), budget)
        if outcome.status == "yes":
            return k
        if outcome.status == "budget_exceeded":
            raise GuardExceeded("chromatic index search ran out of budget")
    raise InvariantViolation(
        "no colouring with max_degree + 1 colours; impossible for a simple graph")


def _improper2_colourable(g: Graph, k: int, budget: OracleBudget,
                          state: dict) -> bool:
    """Can every edge get one of k colours with at most two edges of any
    colour meeting at any vertex?"""
    count = [dict() for _ in range(g.n)]
    deadline = (time.monotonic() + budget.timeout_s
                if budget.timeout_s is not None else None)

    def descend(i: int) -> bool:
        if i == g.m:
            return True
        u, v = g.edges[i]
        for c in range(k):
            if count[u].get(c, 0) >= 2 or count[v].get(c, 0) >= 2:
                continue
            state["nodes"] += 1
            if state["nodes"] > budget.node_limit or (
                    deadline is not None and state["nodes"] % 4096 == 0
                    and time.monotonic() > deadline):
                raise GuardExceeded("2-improper search ran out of budget")
            count[u][c] = count[u].get(c, 0) + 1
            count[v][c] = count[v].get(c, 0) + 1
            if descend(i + 1):
                return True
            count[u][c] -= 1
            count[v][c] -= 1
        return False

    return descend(0)


def improper2_chromatic_index(g: Graph, budget: OracleBudget | None = None,
                              guard_edges: int = 24) -> int:
    """Least k allowing a colouring with at most two same-coloured edges per
    vertex, searched from k = 1 upward."""
    if g.m > guard_edges:
        raise GuardExceeded(f"{g.m} edges exceeds the guard of {guard_edges}")
    if g.m == 0:
        return 0
    budget = budget or OracleBudget()
    state = {"nodes": 0}
    delta = max_degree(g)
    for k in range(1, delta + 2):  # k = max_degree + 1 always suffices
        if _improper2_colourable(g, k, budget, state):
            return k
    raise InvariantViolation("2-improper colouring search failed to terminate")


# --- matching and total independence ---------------------------------------

def _bipartition(g: Graph) -> list[int] | None:
    """Two-colouring by BFS, or None if some component has an odd cycle."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for _, u in g.incident(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def _matching_bipartite(g: Graph, side: list[int]) -> int:
    """Kuhn's augmenting-path matching over one side of the bipartition."""
    mate: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for _, u in g.incident(v):
            if u in seen:
                continue
            seen.add(u)
            if u not in mate or augment(mate[u], seen):
                mate[u] = v
                mate[v] = u
                return True
        return False

    size = 0
    for v in range(g.n):
        if side[v] == 0 and v not in mate:
            if augment(v, set()):
                size += 1
    return size


def _matching_exact(g: Graph) -> int:
    """Exhaustive branch-and-memo maximum matching (handles odd cycles)."""
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        while mask:
            v = (mask & -mask).bit_length() - 1
            if adj[v] & mask:
                break
            mask &= mask - 1
        else:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        rest = mask & ~(1 << v)
        result = best(rest)  # leave v unmatched
        nb = adj[v] & mask
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            result = max(result, 1 + best(rest & ~(1 << u)))
        memo[mask] = result
        return result

    return best((1 << g.n) - 1)


def matching_number(g: Graph) -> int:
    """Size of a maximum matching.

    Augmenting-path search on bipartite graphs; exhaustive branching
    otherwise (exact everywhere, meant for small graphs in hot loops).
    """
    side = _bipartition(g)
    if side is not None:
        return _matching_bipartite(g, side)
    return _matching_exact(g)


class IndependenceSolver:
    """Memoized maximum independent set over a fixed conflict structure.

    ``conflicts[i]`` is the bitmask of items incompatible with item ``i``.
    One instance shares its memo across queries, which is what makes the
    induced-subgraph sweeps in the Hall computations affordable.
    """

    def __init__(self, conflicts: list[int]):
        self.conflicts = conflicts
        self._memo: dict[int, int] = {}

    def mis(self, avail: int) -> int:
        if avail == 0:
            return 0
        cached = self._memo.get(avail)
        if cached is not None:
            return cached
        # Branch on the item with the most conflicts left.
        best_item, best_deg = -1, -1
        m = avail
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (self.conflicts[v] & avail).bit_count()
            if d > best_deg:
                best_deg, best_item = d, v
        if best_deg == 0:
            result = avail.bit_count()
        else:
            v = best_item
            result = max(1 + self.mis(avail & ~(self.conflicts[v] | (1 << v))),
                         self.mis(avail & ~(1 << v)))
        self._memo[avail] = result
        return result


def total_conflicts(g: Graph) -> list[int]:
    """Conflict bitmasks over the items ``vertices + edges``: adjacent
    vertices, edges sharing a vertex, and vertex-incident-edge pairs."""
    size = g.n + g.m
    conf = [0] * size
    for u, v in g.edges:
        conf[u] |= 1 << v
        conf[v] |= 1 << u
    for eid, (u, v) in enumerate(g.edges):
        item = g.n + eid
        for w in (u, v):
            conf[w] |= 1 << item
            conf[item] |= 1 << w
            for eid2, _ in g.incident(w):
                if eid2 != eid:
                    conf[item] |= 1 << (g.n + eid2)
    return conf


def total_independence_number(g: Graph, guard_items: int = 24) -> int:
    """Largest set of vertices and edges with no adjacency, no shared
    endpoint between edges, and no vertex lying on a chosen edge."""
    if g.n + g.m > guard_items:
        raise GuardExceeded(
            f"{g.n + g.m} items exceeds the guard of {guard_items}")
    solver = IndependenceSolver(total_conflicts(g))
    return solver.mis((1 << (g.n + g.m)) - 1)
