from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from nmgraph import analytics
from nmgraph.graph import Graph, from_edges, girth
from nmgraph.nm import (
    build_mn,
    build_nm,
    build_nm_product,
    reconstruct_adjacency,
    row_profile,
    row_sums,
)
from nmgraph.oracles import triangle_count_trace


@st.composite
def graphs(draw, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@given(graphs())
def test_dual_construction_agrees(g: Graph):
    assert build_nm(g) == build_nm_product(g)


@given(graphs())
def test_mirrored_product_is_transpose(g: Graph):
    assert np.array_equal(build_mn(g).entries, build_nm(g).entries.T)


@given(graphs())
def test_row_sums_zero(g: Graph):
    assert row_sums(build_nm(g)) == [0] * g.n


@given(graphs())
def test_reconstruction_round_trip(g: Graph):
    assert reconstruct_adjacency(build_nm(g)).adj == g.adj


@given(graphs())
def test_row_profile_balance_and_diagonal(g: Graph):
    m = build_nm(g)
    for i in range(g.n):
        p = row_profile(m, i)
        assert sum(p.out_edge_count.values()) == sum(p.level2.values())
        assert i in p.diagonal_candidates
        assert p.degree == g.degree(i)


@settings(max_examples=50)
@given(graphs(max_n=10))
def test_triangle_formula_matches_trace(g: Graph):
    assert analytics.triangle_count(build_nm(g)) == triangle_count_trace(g)


@settings(max_examples=50)
@given(graphs(max_n=10))
def test_girth_predicates(g: Graph):
    m = build_nm(g)
    gr = girth(g)
    assert analytics.is_triangle_free(m) == (gr != 3)
    assert analytics.girth_at_least_5(m) == (gr >= 5)
