import random

import pytest
from hypothesis import given, settings, strategies as st

from fancolour import (Graph, GuardExceeded, OracleBudget, chromatic_index,
                       check_edge_colouring, generate, improper2_chromatic_index,
                       list_edge_colourable, matching_number, max_degree,
                       total_independence_number, uniform_lists)
from fancolour.exact import IndependenceSolver

from _oracles import matching_by_enumeration


def test_triangle_two_colours_impossible_three_possible():
    g = generate("complete", 3)
    assert list_edge_colourable(g, uniform_lists(g, 2)).status == "no"
    out = list_edge_colourable(g, uniform_lists(g, 3))
    assert out.status == "yes"
    assert check_edge_colouring(g, uniform_lists(g, 3), out.witness) is None


def test_budget_exceeded_is_a_result_not_an_exception():
    g = generate("complete", 5)
    out = list_edge_colourable(g, uniform_lists(g, 4), OracleBudget(node_limit=3))
    assert out.status == "budget_exceeded"
    assert out.witness is None
    assert out.nodes >= 3


def test_bipartite_graphs_colourable_with_max_degree_colours():
    for a, b in ((2, 3), (3, 3), (1, 4)):
        g = generate("complete_bipartite", a, b)
        out = list_edge_colourable(g, uniform_lists(g, max_degree(g)))
        assert out.status == "yes"


def test_chromatic_index_examples():
    assert chromatic_index(generate("cycle", 5)) == 3
    assert chromatic_index(generate("cycle", 6)) == 2
    assert chromatic_index(generate("complete", 4)) == 3
    assert chromatic_index(Graph(3, ())) == 0
    with pytest.raises(GuardExceeded):
        chromatic_index(generate("complete", 8))


def test_improper2_chromatic_index_examples():
    assert improper2_chromatic_index(generate("complete", 4)) == 2
    assert improper2_chromatic_index(generate("cycle", 5)) == 1
    assert improper2_chromatic_index(Graph(2, ((0, 1),))) == 1


def test_matching_number_examples():
    assert matching_number(generate("complete", 4)) == 2
    assert matching_number(generate("cycle", 5)) == 2
    assert matching_number(generate("complete_bipartite", 1, 4)) == 1
    assert matching_number(Graph(3, ())) == 0


def test_matching_number_agrees_with_subset_enumeration():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(2, 8)
        g = generate("random", n, rng.choice([0.3, 0.5, 0.8]),
                     seed=rng.getrandbits(32))
        if g.m > 12:
            continue
        assert matching_number(g) == matching_by_enumeration(g)


def test_total_independence_examples():
    assert total_independence_number(Graph(2, ((0, 1),))) == 1
    assert total_independence_number(generate("complete", 3)) == 2
    assert total_independence_number(Graph(5, ())) == 5
    with pytest.raises(GuardExceeded):
        total_independence_number(generate("complete", 8))


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, tuple(p for i, p in enumerate(pairs) if (mask >> i) & 1))


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_matching_bounds_and_edge_deletion(g):
    alpha = matching_number(g)
    assert 0 <= alpha <= g.n // 2
    if g.m:
        trimmed = Graph(g.n, g.edges[:-1])
        smaller = matching_number(trimmed)
        assert smaller in (alpha, alpha - 1)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6))
def test_total_independence_bounds(g):
    alpha_t = total_independence_number(g)
    vertex_conflicts = [0] * g.n
    for u, v in g.edges:
        vertex_conflicts[u] |= 1 << v
        vertex_conflicts[v] |= 1 << u
    independent_set = IndependenceSolver(vertex_conflicts).mis((1 << g.n) - 1)
    alpha_m = matching_number(g)
    assert alpha_t >= max(independent_set, alpha_m)
    assert alpha_t <= independent_set + alpha_m


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_chromatic_index_is_max_degree_or_one_more(g):
    if g.m == 0:
        assert chromatic_index(g) == 0
    else:
        assert chromatic_index(g) in (max_degree(g), max_degree(g) + 1)
