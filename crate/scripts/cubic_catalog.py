#!/usr/bin/env python3
"""Regenerate the cubic-graph fixture corpus (graph6, one graph per line).

Connected cubic graphs are collected by sampling random regular graphs and
walking an edge-switch Markov chain, deduplicated up to isomorphism, until
the known counts (OEIS A002851: 1, 2, 5, 19, 85) are reached. Disconnected
graphs are every multiset union of connected ones with total order <= 12.

Usage: python3 scripts/cubic_catalog.py crates/core/tests/fixtures
"""
import itertools
import random
import sys

import networkx as nx

KNOWN = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def canonical_key(g):
    return nx.weisfeiler_lehman_graph_hash(g, iterations=4)


def collect(n, rng):
    found = {}
    g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
    steps = 0
    while sum(len(v) for v in found.values()) < KNOWN[n]:
        steps += 1
        if steps % 500 == 0:
            g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
        else:
            try:
                nx.double_edge_swap(g, nswap=1, max_tries=100, seed=rng.randrange(1 << 30))
            except nx.NetworkXException:
                pass
        if not nx.is_connected(g):
            continue
        key = canonical_key(g)
        bucket = found.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g.copy())
    graphs = [h for b in found.values() for h in b]
    # stable order: by sorted degree-free invariant then graph6 of a BFS relabeling
    out = []
    for h in graphs:
        h = nx.convert_node_labels_to_integers(h, ordering="sorted")
        out.append(h)
    out.sort(key=lambda h: nx.to_graph6_bytes(h, header=False))
    return out


def g6(h):
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def main(outdir):
    rng = random.Random(20240601)
    connected = {n: collect(n, rng) for n in sorted(KNOWN)}
    for n, gs in connected.items():
        with open(f"{outdir}/cubic_connected_n{n:02}.g6", "w") as f:
            for h in gs:
                f.write(g6(h) + "\n")
    pool = [(n, i) for n in sorted(connected) for i in range(len(connected[n]))]
    lines = []
    for r in range(2, 4):
        for combo in itertools.combinations_with_replacement(pool, r):
            if sum(n for n, _ in combo) > 12:
                continue
            u = nx.disjoint_union_all([connected[n][i] for n, i in combo])
            lines.append(g6(u))
    with open(f"{outdir}/cubic_disconnected_le12.g6", "w") as f:
        for line in lines:
            f.write(line + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
