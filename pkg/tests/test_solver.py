import pytest
from hypothesis import given, settings, strategies as st

from fancolour import (Graph, InputError, ListAssignment, SolverConfig,
                       TotalListAssignment, check_edge_colouring,
                       check_total_colouring, colour_edges, extend_one_edge,
                       generate, max_degree, random_lists, random_total_lists,
                       total_colour, total_colour_lists, uniform_lists,
                       uniform_total_lists)
from fancolour.colouring import PartialEdgeColoring, TotalColoring
from fancolour.exact import chromatic_index

from _oracles import sweep_colour_low_degree


def _lists(g, *sets):
    return ListAssignment(tuple(frozenset(s) for s in sets))


def test_path_is_coloured_without_interchanges():
    g = generate("path", 4)
    lists = uniform_lists(g, 4)
    colours, report = colour_edges(g, lists)
    assert check_edge_colouring(g, lists, colours) is None
    assert report.totals()["interchanges"] == 0
    assert all(s.direct for s in report.edge_stats.values())


def test_complete_four_with_five_colour_lists():
    g = generate("complete", 4)
    assert chromatic_index(g) == 3  # a proper colouring certainly exists
    lists = uniform_lists(g, 5)
    colours, _ = colour_edges(g, lists)
    assert check_edge_colouring(g, lists, colours) is None


def test_petersen_with_random_lists():
    g = generate("petersen")
    lists = random_lists(g, 5, 9, seed=11)
    colours, _ = colour_edges(g, lists)
    assert check_edge_colouring(g, lists, colours) is None


def test_insertion_colours_directly_when_a_colour_is_free():
    # Triangle with two edges coloured: the third takes the first free colour.
    g = generate("complete", 3)
    lists = _lists(g, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4})
    col = PartialEdgeColoring(g, lists)
    col.assign(0, 0)
    col.assign(1, 1)
    f = 2
    new = extend_one_edge(g, lists, col, f)
    assert new.colour_of(f) == 2
    assert not col.is_coloured(f)  # the input colouring is untouched


def test_insertion_on_star():
    g = generate("complete_bipartite", 1, 3)
    lists = uniform_lists(g, 5)
    col = PartialEdgeColoring(g, lists)
    col.assign(0, 0)
    col.assign(1, 1)
    new = extend_one_edge(g, lists, col, 2)
    assert new.colour_of(2) == 2


def test_extend_one_edge_adds_exactly_one():
    g = generate("complete", 5)
    lists = uniform_lists(g, 6)
    col = PartialEdgeColoring(g, lists)
    for eid in range(g.m):
        before = len(col.uncoloured_edges())
        col = extend_one_edge(g, lists, col, eid)
        assert len(col.uncoloured_edges()) == before - 1
    assert check_edge_colouring(g, lists, col.complete_list()) is None


# A complete graph on five vertices whose edge order saves the star of
# vertex 0 for last: inserting the final edge needs a four-leaf fan and one
# interchange (found by scripts/find_fan_fixture.py, frozen here).
FAN_FIXTURE_TEXT = "5 10\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n0 1\n0 2\n0 3\n0 4\n"
FAN_FIXTURE_COLOURS = [0, 1, 2, 2, 1, 4, 4, 5, 0, 3]


def test_fan_and_interchange_regression_fixture():
    from fancolour import parse_graph
    g = parse_graph(FAN_FIXTURE_TEXT)
    lists = uniform_lists(g, 6)
    colours, report = colour_edges(g, lists)
    assert colours == FAN_FIXTURE_COLOURS
    assert check_edge_colouring(g, lists, colours) is None
    last = report.edge_stats[9]
    assert last.fan_max >= 2
    assert len(last.cip_lengths) >= 1


def test_degenerate_no_edges_and_matchings():
    g = Graph(4, ())
    colours, _ = colour_edges(g, uniform_lists(g, 2))
    assert colours == []

    matching = Graph(4, ((0, 1), (2, 3)))
    lists = _lists(matching, {4, 7}, {2, 9})
    colours, _ = colour_edges(matching, lists, SolverConfig(force=True))
    assert colours == [4, 2]  # lowest colour of each list


def test_low_degree_graphs_match_the_direct_sweep():
    for kind, k in (("path", 6), ("cycle", 5), ("cycle", 6)):
        g = generate(kind, k)
        lists = uniform_lists(g, 4)
        colours, _ = colour_edges(g, lists)
        assert check_edge_colouring(g, lists, colours) is None
        swept = sweep_colour_low_degree(g, lists)
        assert swept is not None
        assert check_edge_colouring(g, lists, swept) is None


def test_list_size_precondition():
    g = generate("complete", 4)
    lists = uniform_lists(g, 4)  # needs 5
    with pytest.raises(InputError, match="needs at least 5"):
        colour_edges(g, lists)
    colours, _ = colour_edges(g, lists, SolverConfig(force=True))
    assert check_edge_colouring(g, lists, colours) is None


def test_solver_is_deterministic():
    g = generate("random", 12, 0.6, seed=5)
    lists = random_lists(g, max_degree(g) + 2, 2 * max_degree(g), seed=6)
    a, _ = colour_edges(g, lists)
    b, _ = colour_edges(g, lists)
    assert a == b


def test_total_colour_triangle():
    g = generate("complete", 3)
    tc = total_colour(g, 6)
    assert check_total_colouring(g, uniform_total_lists(g, 6), tc) is None
    used = set(tc.vertex_colours) | set(tc.edge_colours)
    assert len(used) <= 6


def test_total_colour_single_edge():
    g = Graph(2, ((0, 1),))
    tc = total_colour(g, 5)
    assert tc.vertex_colours == (0, 1)
    assert tc.edge_colours == (2,)


def test_total_colour_k4_and_palette_guard():
    g = generate("complete", 4)
    tc = total_colour(g, 7)
    assert check_total_colouring(g, uniform_total_lists(g, 7), tc) is None
    with pytest.raises(InputError, match="too small"):
        total_colour(g, 6)


def test_total_colour_lists_reduces_to_uniform_case():
    g = generate("complete", 3)
    assert total_colour_lists(g, uniform_total_lists(g, 6)) == total_colour(g, 6)


def test_total_colour_lists_single_edge_disjoint_lists():
    g = Graph(2, ((0, 1),))
    total = TotalListAssignment((frozenset(range(0, 5)),),
                                (frozenset(range(0, 5)), frozenset(range(5, 10))))
    tc = total_colour_lists(g, total)
    assert tc.vertex_colours == (0, 5)
    assert tc.edge_colours == (1,)


def test_total_colour_lists_random_graph():
    g = generate("random", 12, 0.4, seed=3)
    delta = max_degree(g)
    total = random_total_lists(g, delta + 4, 3 * delta, seed=3)
    tc = total_colour_lists(g, total)
    assert check_total_colouring(g, total, tc) is None


def test_checkers_catch_tampering():
    g = generate("complete", 3)
    lists = uniform_lists(g, 4)
    colours, _ = colour_edges(g, lists)
    tampered = list(colours)
    tampered[1] = tampered[0]
    bad = check_edge_colouring(g, lists, tampered)
    assert bad is not None and bad.clause == "incident-edges"

    tc = total_colour(g, 6)
    twisted = TotalColoring(
        (tc.edge_colours[0],) + tc.vertex_colours[1:], tc.edge_colours)
    bad = check_total_colouring(g, None, twisted)
    assert bad is not None
    assert bad.clause in ("vertex-incident-edge", "adjacent-vertices")


def test_check_edge_colouring_reports_list_and_totality():
    g = generate("complete", 3)
    lists = uniform_lists(g, 4)
    assert check_edge_colouring(g, lists, [0, 1]).clause == "totality"
    assert check_edge_colouring(g, lists, [0, 1, 9]).clause == "list-membership"


@st.composite
def solvable_instances(draw):
    n = draw(st.integers(min_value=2, max_value=9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    g = Graph(n, tuple(p for i, p in enumerate(pairs) if (mask >> i) & 1))
    delta = max_degree(g)
    seed = draw(st.integers(min_value=0, max_value=10 ** 6))
    extra = draw(st.integers(min_value=0, max_value=3))
    lists = random_lists(g, delta + 2, delta + 2 + extra, seed) if g.m else \
        ListAssignment(())
    return g, lists


@settings(max_examples=60, deadline=None)
@given(solvable_instances())
def test_solver_always_passes_the_independent_checker(inst):
    g, lists = inst
    colours, _ = colour_edges(g, lists)
    assert check_edge_colouring(g, lists, colours) is None
