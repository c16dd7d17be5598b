#!/usr/bin/env python3
"""Search small instances for a regression fixture that forces the solver
through a long fan and an interchange path on its final edge insertion.

Scans 5-vertex connected graphs with random list assignments of size
max_degree + 2 until one insertion needs a fan of length at least 2 and at
least one interchange.  Prints the instance in a form ready to freeze into
a test, together with the solver's final colouring.
"""

from __future__ import annotations

import random

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from fancolour import (Graph, SolverConfig, check_edge_colouring, colour_edges,
                       max_degree, random_lists, serialize_graph)
from fancolour.errors import SolveFailure


def main() -> None:
    five = [g for g in graph_atlas_g()
            if g.number_of_nodes() == 5 and nx.is_connected(g)]
    print(f"candidate graphs: {len(five)}")
    rng = random.Random(0)
    for idx, nxg in enumerate(five):
        base_edges = sorted(tuple(sorted(e)) for e in nxg.edges())
        delta = max(d for _, d in nxg.degree())
        for rot in range(len(base_edges)):
            edges = tuple(base_edges[rot:] + base_edges[:rot])
            g = Graph(5, edges)
            for extra in (2, 3, 4, 5):
                for seed in range(1500):
                    lists = random_lists(g, delta + 2, delta + extra, seed)
                    try:
                        colours, report = colour_edges(g, lists)
                    except SolveFailure:
                        continue
                    assert check_edge_colouring(g, lists, colours) is None
                    best = max(report.edge_stats.values(),
                               key=lambda s: (s.fan_max, len(s.cip_lengths)))
                    if best.fan_max >= 2 and best.cip_lengths:
                        print(f"graph #{idx}, rotation {rot}, palette +{extra}, "
                              f"seed {seed}, edge {best.edge}: "
                              f"fan {best.fan_max}, cips {best.cip_lengths}")
                        print("graph text:")
                        print(serialize_graph(g))
                        print("lists:", [sorted(s) for s in lists.edge_lists])
                        print("colours:", colours)
                        return
    print("no fixture found; widen the search")


if __name__ == "__main__":
    main()
