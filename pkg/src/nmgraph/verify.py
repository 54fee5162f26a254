"""Cross-checking every matrix-level claim against the brute-force oracles.

Each invariant is a named check returning None on success or a short
failure description.  The runner applies all checks to a corpus of graphs
and aggregates a per-invariant pass/fail table with the first
counterexample serialized as an edge list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from nmgraph import analytics, oracles
from nmgraph.graph import (
    Graph,
    connected_components,
    diameter,
    format_edge_list,
    girth,
)
from nmgraph.nm import (
    build_mn,
    build_nm,
    build_nm_product,
    column_sums,
    determinant_exact,
    is_symmetric,
    reconstruct_adjacency,
    row_profile,
    row_sums,
)

DETERMINANT_LIMIT = 12
CENSUS_LIMIT = 16


def _check_dual_path(g: Graph) -> str | None:
    if build_nm(g) != build_nm_product(g):
        return "set-based and product constructions disagree"
    return None


def _check_transpose(g: Graph) -> str | None:
    if not np.array_equal(build_mn(g).entries, build_nm(g).entries.T):
        return "mirrored product is not the transpose"
    return None


def _check_row_sums(g: Graph) -> str | None:
    sums = row_sums(build_nm(g))
    if any(s != 0 for s in sums):
        return f"row sums {sums}"
    return None


def _check_column_sums(g: Graph) -> str | None:
    column_sums(build_nm(g), g)  # raises on mismatch
    return None


def _check_entry_shape(g: Graph) -> str | None:
    m = build_nm(g)
    if any(int(m.entries[i, i]) != -g.degree(i) for i in range(g.n)):
        return "diagonal is not -degree"
    if g.n > 0 and int(np.abs(m.entries).max(initial=0)) > max(g.n - 1, 0):
        return "entry magnitude exceeds n - 1"
    return None


def _check_determinant(g: Graph) -> str | None:
    if g.n == 0 or g.n > DETERMINANT_LIMIT:
        return None
    det = determinant_exact(build_nm(g))
    if det != 0:
        return f"determinant {det} != 0"
    return None


def _check_symmetry_iff_regular(g: Graph) -> str | None:
    parts = connected_components(g)
    regular = all(
        len({g.degree(v) for v in parts.vertices_of(c)}) <= 1
        for c in range(parts.count)
    )
    if is_symmetric(build_nm(g)) != regular:
        return f"symmetry={not regular} but regular-components={regular}"
    return None


def _check_round_trip(g: Graph) -> str | None:
    m = build_nm(g)
    h = reconstruct_adjacency(m)
    if h.adj != g.adj:
        return "reconstructed edge set differs"
    return None


def _check_row_profiles(g: Graph) -> str | None:
    m = build_nm(g)
    for i in range(g.n):
        p = row_profile(m, i)
        out = sum(p.out_edge_count.values())
        back = sum(p.level2.values())
        if out != back:
            return f"row {i}: level1->level2 edges {out} != {back}"
        if i not in p.diagonal_candidates:
            return f"row {i}: diagonal not among argmin positions"
        if p.degree != g.degree(i):
            return f"row {i}: decoded degree {p.degree} != {g.degree(i)}"
    return None


def _check_triangles(g: Graph) -> str | None:
    fast = analytics.triangle_count(build_nm(g))
    trace = oracles.triangle_count_trace(g)
    if fast != trace:
        return f"matrix count {fast} != trace count {trace}"
    if g.n <= CENSUS_LIMIT:
        census = oracles.subgraph_census(g)
        if fast != census.triangle_count:
            return f"matrix count {fast} != enumeration {census.triangle_count}"
    return None


def _check_four_cycles(g: Graph) -> str | None:
    if g.n > CENSUS_LIMIT:
        return None
    m = build_nm(g)
    total, _, _ = analytics.four_cycle_count(m)
    census = oracles.subgraph_census(g)
    if total != census.c4_total:
        return f"matrix count {total} != enumeration {census.c4_total}"
    if not analytics.c4_decomposition_check(m, g):
        return "quarter-term decomposition mismatch"
    return None


def _check_characterizations(g: Graph) -> str | None:
    m = build_nm(g)
    gr = girth(g)
    if analytics.is_triangle_free(m) != (gr != 3):
        return "triangle-free predicate vs girth oracle"
    if g.n <= CENSUS_LIMIT:
        census = oracles.subgraph_census(g)
        if analytics.is_induced_c4_free(m) != (census.c4_induced == 0):
            return "induced-C4-free predicate vs enumeration"
    if analytics.girth_at_least_5(m) != (gr >= 5):
        return f"girth>=5 predicate vs girth oracle {gr}"
    return None


def _check_diameter(g: Graph) -> str | None:
    m = build_nm(g)
    diam = diameter(g)
    if g.n >= 2 and analytics.diameter_at_most_2(m) != (diam <= 2):
        return f"diameter<=2 predicate vs oracle diameter {diam}"
    if analytics.some_row_has_no_zero(m) and not diam <= 4:
        return f"row without zeros but diameter {diam} > 4"
    return None


INVARIANTS: list[tuple[str, Callable[[Graph], str | None]]] = [
    ("dual-path-identity", _check_dual_path),
    ("transpose-identity", _check_transpose),
    ("row-sums-zero", _check_row_sums),
    ("column-sum-formula", _check_column_sums),
    ("entry-shape", _check_entry_shape),
    ("determinant-zero", _check_determinant),
    ("symmetry-iff-regular-components", _check_symmetry_iff_regular),
    ("reconstruction-round-trip", _check_round_trip),
    ("row-profile-decoding", _check_row_profiles),
    ("triangle-count-oracles", _check_triangles),
    ("four-cycle-count-oracles", _check_four_cycles),
    ("characterization-biconditionals", _check_characterizations),
    ("diameter-predicates", _check_diameter),
]


@dataclass
class InvariantResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_failure: str | None = None
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


def run_suite(graphs: list[Graph]) -> list[InvariantResult]:
    results = [InvariantResult(name=name) for name, _ in INVARIANTS]
    for g in graphs:
        for result, (_, check) in zip(results, INVARIANTS):
            result.checked += 1
            detail = check(g)
            if detail is not None:
                result.failures += 1
                if result.first_failure is None:
                    result.first_failure = detail
                    result.counterexample = format_edge_list(g) or "(edgeless)\n"
    return results
