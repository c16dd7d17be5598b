"""Small-graph catalogues for the sweep tests.

Graphs on up to 7 vertices come from the networkx atlas; the 8-vertex
classes are pre-generated by scripts/build_catalogue.py into data/graphs8.g6.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from fancolour import Graph

DATA = Path(__file__).resolve().parent / "data"


def _convert(nxg: nx.Graph) -> Graph:
    nodes = sorted(nxg.nodes())
    renum = {v: i for i, v in enumerate(nodes)}
    edges = sorted(tuple(sorted((renum[u], renum[v]))) for u, v in nxg.edges())
    return Graph(len(nodes), tuple(edges))


@lru_cache(maxsize=None)
def atlas_graphs(n: int, connected_only: bool = True) -> tuple[Graph, ...]:
    """Every isomorphism class on exactly ``n <= 7`` vertices."""
    assert 1 <= n <= 7
    out = []
    for nxg in graph_atlas_g():
        if nxg.number_of_nodes() != n:
            continue
        if connected_only and not nx.is_connected(nxg):
            continue
        out.append(_convert(nxg))
    return tuple(out)


@lru_cache(maxsize=None)
def eight_vertex_graphs(connected_only: bool = True) -> tuple[Graph, ...]:
    """Every isomorphism class on exactly 8 vertices (pre-generated)."""
    out = []
    for line in (DATA / "graphs8.g6").read_bytes().splitlines():
        nxg = nx.from_graph6_bytes(line)
        if connected_only and not nx.is_connected(nxg):
            continue
        out.append(_convert(nxg))
    return tuple(out)


def graphs_up_to(n: int, connected_only: bool = True) -> list[Graph]:
    """All isomorphism classes with 1..n vertices (n <= 8)."""
    out: list[Graph] = []
    for k in range(1, min(n, 7) + 1):
        out.extend(atlas_graphs(k, connected_only))
    if n >= 8:
        out.extend(eight_vertex_graphs(connected_only))
    return out
