#!/usr/bin/env python3
"""Build the 8-vertex graph catalogue used by the sweep tests.

Graphs on up to 7 vertices come straight from the networkx atlas at test
time; 8-vertex graphs are too many to regenerate per run, so this script
produces them once (every isomorphism class, connected or not) and stores
them as graph6 lines in tests/data/graphs8.g6.

Method: extend every 7-vertex graph by one vertex with every possible
neighbourhood, bucket candidates by cheap invariants, and deduplicate with
VF2 inside each bucket.  The known class counts are asserted at the end.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

EXPECTED_ALL_8 = 12346       # graphs on 8 vertices up to isomorphism
EXPECTED_CONNECTED_8 = 11117


def invariant_key(g: nx.Graph) -> tuple:
    degs = sorted(d for _, d in g.degree())
    neigh_profile = sorted(
        (d, tuple(sorted(g.degree(u) for u in g.neighbors(v))))
        for v, d in g.degree())
    triangles = sum(nx.triangles(g).values()) // 3
    return (tuple(degs), tuple(neigh_profile), triangles)


def main() -> None:
    out_path = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs8.g6"
    out_path.parent.mkdir(parents=True, exist_ok=True)

    bases = [g for g in graph_atlas_g() if g.number_of_nodes() == 7]
    print(f"7-vertex base graphs: {len(bases)}")
    assert len(bases) == 1044

    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    count = 0
    candidates = 0
    for base in bases:
        for mask in range(1 << 7):
            candidates += 1
            g = base.copy()
            g.add_node(7)
            for v in range(7):
                if (mask >> v) & 1:
                    g.add_edge(v, 7)
            key = invariant_key(g)
            bucket = buckets[key]
            if any(nx.is_isomorphic(g, rep) for rep in bucket):
                continue
            bucket.append(g)
            count += 1
            if count % 2000 == 0:
                print(f"  {count} classes from {candidates} candidates ...",
                      file=sys.stderr)
    print(f"candidates: {candidates}, classes: {count}")
    assert count == EXPECTED_ALL_8, count

    graphs = [g for bucket in buckets.values() for g in bucket]
    connected = sum(1 for g in graphs if nx.is_connected(g))
    print(f"connected classes: {connected}")
    assert connected == EXPECTED_CONNECTED_8, connected

    lines = sorted(
        nx.to_graph6_bytes(g, header=False).strip() for g in graphs)
    out_path.write_bytes(b"\n".join(lines) + b"\n")
    print(f"wrote {len(lines)} graphs to {out_path}")


if __name__ == "__main__":
    main()
