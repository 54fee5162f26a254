"""Brute-force ground truth, kept independent of the fast matrix paths.

Everything here works from the Graph alone with naive dense products or
subset enumeration, so agreement with the matrix formulas is meaningful
evidence rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from nmgraph.errors import SizeGuardError
from nmgraph.graph import Graph
from nmgraph.nm import adjacency_matrix

ENUMERATION_LIMIT = 64


@dataclass(frozen=True)
class SubgraphCensus:
    """Counts of small subgraphs; c4_total includes non-induced 4-cycles."""

    triangle_count: int
    c4_total: int
    c4_induced: int
    k4_count: int
    k4_minus_edge_count: int

    def __post_init__(self):
        expected = self.c4_induced + self.k4_minus_edge_count + 3 * self.k4_count
        if self.c4_total != expected:
            raise ValueError(
                f"inconsistent census: c4_total={self.c4_total}, decomposition={expected}"
            )


def triangle_count_trace(g: Graph) -> int:
    """trace(A^3) / 6 with dense integer matrix powers."""
    a = adjacency_matrix(g)
    trace = int(np.trace(a @ a @ a))
    assert trace % 6 == 0
    return trace // 6


def all_pairs_common_neighbors(g: Graph) -> np.ndarray:
    """A^2: entry (i, j) counts common neighbours for i != j, degree on
    the diagonal."""
    a = adjacency_matrix(g)
    return a @ a


def subgraph_census(g: Graph, allow_large: bool = False) -> SubgraphCensus:
    """Classify every 3- and 4-vertex induced subgraph.

    A 4-set contributes to c4_total according to its induced shape: K4
    holds three 4-cycles, K4 minus an edge holds one, an induced C4 holds
    one.  Guarded at n = 64 because C(n, 4) enumeration beyond that is
    pointless for an oracle.
    """
    if g.n > ENUMERATION_LIMIT and not allow_large:
        raise SizeGuardError(
            f"n={g.n} exceeds enumeration limit {ENUMERATION_LIMIT}; "
            "pass allow_large=True to override"
        )

    triangles = sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if b in g.adj[a] and c in g.adj[a] and c in g.adj[b]
    )

    induced_c4 = 0
    k4 = 0
    k4_minus_edge = 0
    for quad in combinations(range(g.n), 4):
        edge_count = sum(
            1 for u, v in combinations(quad, 2) if v in g.adj[u]
        )
        if edge_count == 6:
            k4 += 1
        elif edge_count == 5:
            k4_minus_edge += 1
        elif edge_count == 4:
            degrees = [sum(1 for v in quad if v in g.adj[u]) for u in quad]
            if all(d == 2 for d in degrees):
                induced_c4 += 1

    return SubgraphCensus(
        triangle_count=triangles,
        c4_total=induced_c4 + k4_minus_edge + 3 * k4,
        c4_induced=induced_c4,
        k4_count=k4,
        k4_minus_edge_count=k4_minus_edge,
    )
