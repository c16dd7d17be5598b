"""Immutable simple graphs with stable integer edge ids.

Vertices are dense integers ``0..n-1``.  Edges are unordered pairs stored in
a fixed order; an edge's id is its position in that order, so colourings can
live in flat arrays.  Adjacency is indexed both per vertex and per endpoint
pair because the colouring machinery constantly asks "which edge at v has
colour c" and "does {u, v} exist".
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError, ParseError

VertexId = int
EdgeId = int


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.  Immutable and safe to share between tasks."""

    n: int
    edges: tuple[tuple[int, int], ...]
    # Derived indexes, built once in __post_init__.
    _incident: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False)
    _edge_index: dict[tuple[int, int], int] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        norm = []
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {eid}: endpoint out of range: ({u}, {v})")
            if u == v:
                raise InputError(f"edge {eid}: loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InputError(f"edge {eid}: duplicate edge {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(norm))
        incident: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(self.edges):
            incident[u].append((eid, v))
            incident[v].append((eid, u))
            index[(u, v)] = eid
        object.__setattr__(self, "_incident", tuple(tuple(x) for x in incident))
        object.__setattr__(self, "_edge_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """Pairs ``(edge_id, other_endpoint)`` for every edge at ``v``."""
        return self._incident[v]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(u for _, u in self._incident[v])

    def edge_id(self, u: int, v: int) -> int | None:
        """Id of edge {u, v}, or None if absent."""
        return self._edge_index.get((u, v) if u < v else (v, u))

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise InputError(f"vertex {v} is not an endpoint of edge {eid}")


def max_degree(g: Graph) -> int:
    """Largest vertex degree; 0 for an edgeless graph."""
    return max((g.degree(v) for v in range(g.n)), default=0)


def validate_graph(g: Graph) -> None:
    """Re-check the structural invariants (used by tests as a second pair of eyes)."""
    assert g.n >= 0
    pairs = set()
    for u, v in g.edges:
        assert 0 <= u < g.n and 0 <= v < g.n, "endpoint out of range"
        assert u != v, "loop"
        assert u < v, "edge not normalized"
        assert (u, v) not in pairs, "parallel edge"
        pairs.add((u, v))
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


def induced_subgraph(g: Graph, vs: set[int] | frozenset[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vs`` plus a map from new edge ids to old ones.

    Vertices are renumbered 0..|vs|-1 in ascending order of their old ids.
    """
    for v in vs:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    order = sorted(vs)
    renum = {v: i for i, v in enumerate(order)}
    new_edges = []
    edge_map: dict[int, int] = {}
    for eid, (u, v) in enumerate(g.edges):
        if u in renum and v in renum:
            edge_map[len(new_edges)] = eid
            new_edges.append((renum[u], renum[v]))
    return Graph(len(order), tuple(new_edges)), edge_map


def generate(kind: str, *args, seed: int | None = None) -> Graph:
    """Build one of the stock graphs.

    Kinds: ``path k``, ``cycle k``, ``complete k``, ``complete_bipartite a b``,
    ``petersen``, ``random n p`` (each possible edge kept independently with
    probability p, deterministic for a fixed seed).
    """
    if kind == "path":
        (k,) = args
        if k < 1:
            raise InputError("path needs at least one vertex")
        return Graph(k, tuple((i, i + 1) for i in range(k - 1)))
    if kind == "cycle":
        (k,) = args
        if k < 3:
            raise InputError("cycle needs at least three vertices")
        return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))
    if kind == "complete":
        (k,) = args
        if k < 1:
            raise InputError("complete graph needs at least one vertex")
        return Graph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))
    if kind == "complete_bipartite":
        a, b = args
        if a < 1 or b < 1:
            raise InputError("both sides must be nonempty")
        return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph(10, tuple(outer + spokes + inner))
    if kind == "random":
        n, p = args
        if n < 0 or not (0.0 <= p <= 1.0):
            raise InputError("need n >= 0 and p in [0, 1]")
        rng = random.Random(seed)
        edges = tuple((u, v) for u in range(n) for v in range(u + 1, n)
                      if rng.random() < p)
        return Graph(n, edges)
    raise InputError(f"unknown graph kind: {kind!r}")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format.

    First non-comment line is ``n m``; then m lines ``u v`` with 0-based
    vertex ids.  Lines starting with ``#`` are comments; blank lines are
    ignored.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise ParseError(f"expected header 'n m', got {line!r}", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("n and m must be nonnegative", lineno)
            continue
        if len(edges) == m:
            raise ParseError(f"more than {m} edge lines", lineno)
        if len(parts) != 2:
            raise ParseError(f"expected edge 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in {line!r}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise ParseError(f"duplicate edge {pair}", lineno)
        seen.add(pair)
        edges.append(pair)
    if n is None:
        raise ParseError("empty input, expected header 'n m'")
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    """Canonical text form; ``parse_graph(serialize_graph(g)) == g``."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
