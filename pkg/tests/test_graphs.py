import pytest
from hypothesis import given, strategies as st

from fancolour import (Graph, InputError, ParseError, generate,
                       induced_subgraph, max_degree, parse_graph,
                       serialize_graph, validate_graph)


def test_parse_k3_round_trip():
    text = "3 3\n0 1\n1 2\n0 2\n"
    g = parse_graph(text)
    assert g.n == 3 and g.m == 3
    assert serialize_graph(g) == text
    assert parse_graph(serialize_graph(g)) == g


def test_parse_normalizes_endpoint_order_and_comments():
    g = parse_graph("# a comment\n4 2\n3 1\n\n0 2\n")
    assert g.edges == ((1, 3), (0, 2))
    assert serialize_graph(g) == "4 2\n1 3\n0 2\n"


def test_parse_loop_rejected_with_line_number():
    with pytest.raises(ParseError, match="line 2.*loop"):
        parse_graph("2 1\n0 0\n")


def test_parse_duplicate_edge_rejected():
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("3 2\n0 1\n1 0\n")


def test_parse_out_of_range_rejected():
    with pytest.raises(ParseError, match="out of range"):
        parse_graph("2 1\n0 5\n")


def test_parse_header_and_count_errors():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError, match="promised"):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError, match="more than"):
        parse_graph("3 1\n0 1\n1 2\n")


def test_graph_invariants_enforced_on_construction():
    with pytest.raises(InputError):
        Graph(2, ((0, 0),))
    with pytest.raises(InputError):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(InputError):
        Graph(2, ((0, 2),))


def test_max_degree_examples():
    assert max_degree(generate("complete", 3)) == 2
    assert max_degree(Graph(2, ((0, 1),))) == 1
    assert max_degree(generate("complete_bipartite", 1, 4)) == 4
    assert max_degree(Graph(3, ())) == 0


def test_generate_stock_graphs():
    c5 = generate("cycle", 5)
    assert c5.n == 5 and c5.m == 5 and max_degree(c5) == 2
    assert generate("complete", 4).m == 6
    pet = generate("petersen")
    assert pet.n == 10 and pet.m == 15 and max_degree(pet) == 3
    p1 = generate("path", 1)
    assert p1.n == 1 and p1.m == 0


def test_generate_random_is_seed_deterministic():
    a = generate("random", 10, 0.5, seed=1)
    b = generate("random", 10, 0.5, seed=1)
    assert a == b
    c = generate("random", 10, 0.5, seed=2)
    assert a != c  # overwhelmingly likely


def test_generate_rejects_bad_parameters():
    with pytest.raises(InputError):
        generate("cycle", 2)
    with pytest.raises(InputError):
        generate("random", 5, 1.5, seed=0)
    with pytest.raises(InputError):
        generate("no-such-kind")


def test_induced_subgraph_examples():
    k3 = generate("complete", 3)
    sub, emap = induced_subgraph(k3, {0, 1})
    assert sub.n == 2 and sub.m == 1
    assert emap == {0: k3.edge_id(0, 1)}

    empty, emap = induced_subgraph(k3, set())
    assert empty.n == 0 and empty.m == 0 and emap == {}

    c5 = generate("cycle", 5)
    sub, emap = induced_subgraph(c5, {0, 1, 2})
    expected = [eid for eid, (u, v) in enumerate(c5.edges)
                if u in {0, 1, 2} and v in {0, 1, 2}]
    assert sub.m == 2 and sorted(emap.values()) == sorted(expected)

    with pytest.raises(InputError):
        induced_subgraph(k3, {0, 9})


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = tuple(p for i, p in enumerate(pairs) if (mask >> i) & 1)
    return Graph(n, edges)


@given(graphs())
def test_generated_graphs_satisfy_invariants(g):
    validate_graph(g)
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    for v in range(g.n):
        assert g.degree(v) <= max_degree(g)


@given(graphs())
def test_serialize_parse_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@given(graphs(max_n=7), st.data())
def test_induced_subgraph_monotone(g, data):
    big = data.draw(st.sets(st.integers(min_value=0, max_value=max(g.n - 1, 0)))
                    if g.n else st.just(set()))
    small = data.draw(st.sets(st.sampled_from(sorted(big))) if big else st.just(set()))
    _, map_small = induced_subgraph(g, small)
    _, map_big = induced_subgraph(g, big)
    assert set(map_small.values()) <= set(map_big.values())
