"""Seeded random graph generation for the verification and bench commands.

The generator contract (documented so runs are reproducible): a
`random.Random(seed)` stream drives a uniform edge-probability model,
visiting unordered pairs (i, j) with i < j in lexicographic order and
keeping each pair when `rng.random() < p`.
"""

from __future__ import annotations

import random

from nmgraph.graph import Graph, from_edges


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return from_edges(n, edges)


def corpus(trials: int, max_size: int, seed: int) -> list[Graph]:
    """Reproducible mix of sizes and densities for invariant sweeps."""
    rng = random.Random(seed)
    graphs = []
    for t in range(trials):
        n = rng.randint(0, max_size)
        p = rng.random()
        graphs.append(gnp(n, p, seed=rng.randrange(2**32)))
    return graphs
