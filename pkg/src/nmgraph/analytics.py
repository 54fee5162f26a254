"""Structural characterizations and counts read directly off the matrix.

Every predicate here recovers adjacency from the matrix itself (entry
positive iff edge), demonstrating that the matrix alone carries the
structure; only the strong-regularity check and the decomposition
cross-check also consult the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from nmgraph.errors import InvalidMatrixError
from nmgraph.graph import Graph
from nmgraph.nm import NeighborhoodMatrix
from nmgraph.oracles import subgraph_census


def _neighbor_mask(m: NeighborhoodMatrix) -> np.ndarray:
    """Adjacency recovered from the matrix: entry > 0 iff edge."""
    return m.entries > 0


def triangle_count(m: NeighborhoodMatrix) -> int:
    """(1/6) sum over i, j in N(i) of (|m_jj| - m_ij).

    Each adjacent pair contributes its common-neighbour count, so the
    double sum counts every triangle six times.
    """
    diag = np.diag(m.entries)
    pos = _neighbor_mask(m)
    total = int((np.abs(diag)[np.newaxis, :] * pos - m.entries * pos).sum())
    if total % 6 != 0:
        raise InvalidMatrixError(f"triangle sum {total} not divisible by 6: not a valid NM")
    return total // 6


def four_cycle_count(m: NeighborhoodMatrix) -> tuple[int, Fraction, Fraction]:
    """Number of 4-cycle subgraphs, induced or not.

    Returns (total, s1, s2) where s1 sums C(|m_ij|, 2) over non-adjacent
    pairs and s2 sums C(|m_jj| - m_ij, 2) over adjacent pairs, each
    divided by 4.  The two terms are exact quarters (half-integers occur
    whenever the graph contains a K4 minus an edge); their sum is always
    an integer.
    """
    diag = np.diag(m.entries)
    pos = _neighbor_mask(m)
    n = m.n

    s1_raw = 0
    s2_raw = 0
    for i in range(n):
        row = m.entries[i]
        for j in range(n):
            if j == i:
                continue
            if pos[i, j]:
                s2_raw += comb(int(abs(diag[j])) - int(row[j]), 2)
            else:
                s1_raw += comb(int(abs(row[j])), 2)

    s1 = Fraction(s1_raw, 4)
    s2 = Fraction(s2_raw, 4)
    total = s1 + s2
    if total.denominator != 1:
        raise InvalidMatrixError(f"4-cycle total {total} is not an integer: not a valid NM")
    return int(total), s1, s2


def c4_decomposition_check(m: NeighborhoodMatrix, g: Graph) -> bool:
    """Verify the two quarter-terms against the brute-force census:
    s1 = #induced C4 + (1/2) #K4-e and s2 = 3 #K4 + (1/2) #K4-e.
    """
    census = subgraph_census(g)
    _, s1, s2 = four_cycle_count(m)
    half_k4e = Fraction(census.k4_minus_edge_count, 2)
    return (
        s1 == census.c4_induced + half_k4e
        and s2 == 3 * census.k4_count + half_k4e
    )


def is_triangle_free(m: NeighborhoodMatrix) -> bool:
    """True iff every positive entry equals the magnitude of its column's
    diagonal (edge endpoints then share no neighbour)."""
    diag = np.abs(np.diag(m.entries))
    pos = _neighbor_mask(m)
    return bool((m.entries[pos] == np.broadcast_to(diag, m.entries.shape)[pos]).all())


def has_shared_pair(m: NeighborhoodMatrix) -> bool:
    """True iff some non-adjacent pair shares at least two neighbours,
    i.e. some off-diagonal non-edge entry is <= -2.

    Sufficient for a 4-cycle through that pair, but the cycle may be
    chorded (K4 minus an edge), so this alone does not decide induced-C4
    freeness.
    """
    nonedge = ~_neighbor_mask(m)
    np.fill_diagonal(nonedge, False)
    return bool((m.entries[nonedge] <= -2).any())


def is_induced_c4_free(m: NeighborhoodMatrix) -> bool:
    """True iff the graph has no induced 4-cycle, decided from the matrix
    alone.

    An induced C4 is a non-adjacent pair (i, j) plus two of their common
    neighbours that are themselves non-adjacent.  Entry signs give all of
    it: adjacency is positivity, and a non-edge entry of -c marks c
    common neighbours.  Pairs with entry >= -1 can be skipped outright.
    """
    pos = _neighbor_mask(m)
    n = m.n
    for i in range(n):
        for j in range(i + 1, n):
            if pos[i, j] or m.entries[i, j] > -2:
                continue
            shared = np.nonzero(pos[i] & pos[j])[0]
            for a in range(len(shared)):
                for b in range(a + 1, len(shared)):
                    if not pos[shared[a], shared[b]]:
                        return False
    return True


def girth_at_least_5(m: NeighborhoodMatrix) -> bool:
    return is_triangle_free(m) and is_induced_c4_free(m)


def diameter_at_most_2(m: NeighborhoodMatrix) -> bool:
    """True iff no entry is zero."""
    return bool((m.entries != 0).all())


def some_row_has_no_zero(m: NeighborhoodMatrix) -> bool:
    """True iff some row is entirely nonzero; implies diameter <= 4
    (one-directional: the converse fails, e.g. the 3-cube)."""
    if m.n == 0:
        return False
    return bool((m.entries != 0).all(axis=1).any())


def srg_parameters(g: Graph) -> tuple[int, int, int] | None:
    """(k, mu1, mu2) when g is strongly regular, else None.

    Follows the usual convention that a strongly regular graph is
    k-regular with at least one adjacent and one non-adjacent pair, every
    adjacent pair sharing exactly mu1 neighbours and every non-adjacent
    pair exactly mu2.
    """
    if g.n < 2:
        return None
    degrees = {g.degree(v) for v in range(g.n)}
    if len(degrees) != 1:
        return None
    k = degrees.pop()

    mu1: int | None = None
    mu2: int | None = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            shared = len(g.adj[u] & g.adj[v])
            if v in g.adj[u]:
                if mu1 is None:
                    mu1 = shared
                elif mu1 != shared:
                    return None
            else:
                if mu2 is None:
                    mu2 = shared
                elif mu2 != shared:
                    return None
    if mu1 is None or mu2 is None:
        return None
    return (k, mu1, mu2)


def distinct_entry_values(m: NeighborhoodMatrix) -> tuple[int, ...]:
    return tuple(int(v) for v in np.unique(m.entries))


def strong_regularity_profile(
    m: NeighborhoodMatrix, g: Graph
) -> tuple[tuple[int, ...], bool, tuple[int, int, int] | None]:
    """Distinct entry values plus a direct strong-regularity verdict.

    When the graph is strongly regular the value set must be
    {-k, k - mu1, -mu2} (two values only when k = mu2); that containment
    is asserted here as an internal consistency check.
    """
    values = distinct_entry_values(m)
    params = srg_parameters(g)
    if params is not None:
        k, mu1, mu2 = params
        expected = tuple(sorted({-k, k - mu1, -mu2}))
        if values != expected:
            raise InvalidMatrixError(
                f"strongly regular {params} but entry values {values} != {expected}"
            )
    return values, params is not None, params


@dataclass(frozen=True)
class StructuralReport:
    """Everything the analytics layer can say about one matrix."""

    triangle_count: int
    four_cycle_count: int
    s1_term: Fraction
    s2_term: Fraction
    triangle_free: bool
    induced_c4_free: bool
    girth_at_least_5: bool
    diameter_at_most_2: bool
    diameter_upper_bound_4: bool
    distinct_entry_values: tuple[int, ...]
    srg_consistent: bool
    srg_parameters: tuple[int, int, int] | None

    def __post_init__(self):
        assert self.triangle_free == (self.triangle_count == 0)
        assert self.girth_at_least_5 == (self.triangle_free and self.induced_c4_free)
        assert self.s1_term + self.s2_term == self.four_cycle_count


def structural_report(m: NeighborhoodMatrix, g: Graph) -> StructuralReport:
    total, s1, s2 = four_cycle_count(m)
    values, srg_ok, params = strong_regularity_profile(m, g)
    return StructuralReport(
        triangle_count=triangle_count(m),
        four_cycle_count=total,
        s1_term=s1,
        s2_term=s2,
        triangle_free=is_triangle_free(m),
        induced_c4_free=is_induced_c4_free(m),
        girth_at_least_5=girth_at_least_5(m),
        diameter_at_most_2=diameter_at_most_2(m),
        diameter_upper_bound_4=some_row_has_no_zero(m),
        distinct_entry_values=values,
        srg_consistent=srg_ok,
        srg_parameters=params,
    )
