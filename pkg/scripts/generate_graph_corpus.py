#!/usr/bin/env python3
"""Generate every connected graph on 1..8 nodes, one per isomorphism class.

Builds all graphs level by level: each graph on k nodes is extended by a
new node attached to every subset of the existing nodes, and duplicates
are discarded via an invariant bucket (degree multiset + rounded adjacency
spectrum) with exact isomorphism checks inside each bucket. The per-size
class counts are verified against the known values before anything is
written, so an incomplete or over-counted corpus cannot be emitted.

Output: tests/data/connected_graphs_n1_8.txt, one graph per line in the
form `n:u-v,u-v,...` (n alone for the single-node graph).

Usage: python3 scripts/generate_graph_corpus.py
"""
from __future__ import annotations

import itertools
import pathlib
import sys
import time

import networkx as nx
import numpy as np

# numbers of graphs / connected graphs on n = 1..8 nodes up to isomorphism
ALL_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117]

MAX_N = 8


def invariant(g: nx.Graph) -> tuple:
    n = g.number_of_nodes()
    degs = tuple(sorted(d for _, d in g.degree()))
    a = nx.to_numpy_array(g, nodelist=sorted(g.nodes()))
    spectrum = tuple(np.round(np.sort(np.linalg.eigvalsh(a)), 6))
    return (n, g.number_of_edges(), degs, spectrum)


def augment(reps: list[nx.Graph], k: int) -> list[nx.Graph]:
    """All graphs on k+1 nodes, from the representatives on k nodes."""
    buckets: dict[tuple, list[nx.Graph]] = {}
    out: list[nx.Graph] = []
    for base in reps:
        for r in range(k + 1):
            for subset in itertools.combinations(range(k), r):
                h = base.copy()
                h.add_node(k)
                h.add_edges_from((k, u) for u in subset)
                key = invariant(h)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, seen) for seen in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main() -> int:
    out_path = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_graphs_n1_8.txt"
    levels: list[list[nx.Graph]] = []
    g1 = nx.Graph()
    g1.add_node(0)
    levels.append([g1])
    for k in range(1, MAX_N):
        t0 = time.time()
        levels.append(augment(levels[-1], k))
        print(f"n={k + 1}: {len(levels[-1])} graphs ({time.time() - t0:.1f}s)", flush=True)

    for n, level in enumerate(levels, start=1):
        if len(level) != ALL_COUNTS[n - 1]:
            print(f"FATAL: {len(level)} graphs on {n} nodes, expected {ALL_COUNTS[n - 1]}")
            return 1

    lines = []
    for n, level in enumerate(levels, start=1):
        connected = [g for g in level if nx.is_connected(g)]
        if len(connected) != CONNECTED_COUNTS[n - 1]:
            print(f"FATAL: {len(connected)} connected graphs on {n} nodes, "
                  f"expected {CONNECTED_COUNTS[n - 1]}")
            return 1
        for g in connected:
            edges = ",".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
            lines.append(f"{n}:{edges}")
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
