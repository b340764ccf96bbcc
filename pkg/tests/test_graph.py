import pytest
from hypothesis import given, settings

from conftest import cycle, graph_from_letters, graphs
from omimwidth.graph import (
    Graph, GraphFormatError, MatchingMode, NotCrossingMatching, connected_components,
    format_graph, is_forest, is_independent, is_induced_matching, parse_graph, to_mask,
)


def test_components_of_path():
    p3 = graph_from_letters("ab bc")
    assert connected_components(p3, 0b111) == [0b111]
    assert connected_components(p3, 0b101) == [0b001, 0b100]
    assert connected_components(p3, 0) == []


def test_independence_and_forests_on_c4():
    c4 = cycle(4)
    assert is_independent(c4, to_mask([0, 2]))
    assert not is_independent(c4, to_mask([0, 1]))
    assert is_independent(c4, 0)
    assert not is_forest(c4, 0b1111)
    for drop in range(4):
        assert is_forest(c4, 0b1111 & ~(1 << drop))
    assert is_forest(c4, 0)


def test_induced_matching_modes():
    p4 = graph_from_letters("ab bc cd")
    for mode in MatchingMode:
        assert is_induced_matching(p4, [(1, 2)], 0b0011, mode)

    # K_{2,2} with sides {a1, a2} = {0, 1} and {b1, b2} = {2, 3}
    k22 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert not is_induced_matching(k22, [(0, 2), (1, 3)], 0b0011, MatchingMode.BIPARTITE)

    # a1=0, a2=1, b1=2, b2=3
    inside_a = Graph.from_edges(4, [(0, 2), (1, 3), (0, 1)])
    m = [(0, 2), (1, 3)]
    assert not is_induced_matching(inside_a, m, 0b0011, MatchingMode.TWO_SIDED)
    assert not is_induced_matching(inside_a, m, 0b0011, MatchingMode.ONE_SIDED_A)
    assert is_induced_matching(inside_a, m, 0b0011, MatchingMode.BIPARTITE)
    inside_abar = Graph.from_edges(4, [(0, 2), (1, 3), (2, 3)])
    assert is_induced_matching(inside_abar, m, 0b0011, MatchingMode.ONE_SIDED_A)
    assert not is_induced_matching(inside_abar, m, 0b0011, MatchingMode.TWO_SIDED)


def test_non_crossing_matching_is_rejected():
    p4 = graph_from_letters("ab bc cd")
    with pytest.raises(NotCrossingMatching):
        is_induced_matching(p4, [(0, 1)], 0b0011, MatchingMode.TWO_SIDED)
    with pytest.raises(NotCrossingMatching):
        is_induced_matching(p4, [(1, 2), (2, 3)], 0b0101, MatchingMode.TWO_SIDED)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_predicate_hierarchy(g):
    for x in range(1 << g.n):
        if is_independent(g, x):
            assert is_forest(g, x)
    comps = connected_components(g, g.all)
    union = 0
    for c in comps:
        assert not union & c
        union |= c
    assert union == g.all


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_mode_monotonicity(g):
    import itertools
    for a in range(1, (1 << g.n) - 1):
        crossing = [(u, v) for u, v in g.edges() if (a >> u & 1) != (a >> v & 1)]
        for r in (1, 2):
            for m in itertools.combinations(crossing, r):
                ends = [x for e in m for x in e]
                if len(set(ends)) < len(ends):
                    continue
                two = is_induced_matching(g, m, a, MatchingMode.TWO_SIDED)
                one = is_induced_matching(g, m, a, MatchingMode.ONE_SIDED_A)
                bip = is_induced_matching(g, m, a, MatchingMode.BIPARTITE)
                assert (not two or one) and (not one or bip)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # not symmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph(1, [0], [-1])
    g = Graph(2, [0b10, 0b01])
    with pytest.raises(AttributeError):
        g.n = 3
    assert hash(g) == hash(Graph.from_edges(2, [(1, 0)]))


def test_parse_formats_and_roundtrip():
    g = parse_graph("c comment\n4 3\n0 1\n1 2\n2 3\nw 2 7\n")
    assert g.edges() == [(0, 1), (1, 2), (2, 3)] and g.weights == (1, 1, 7, 1)
    dimacs = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n")
    assert dimacs.edges() == [(0, 1), (1, 2)]
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text, fragment", [
    ("", "empty"),
    ("3 1\n0 0\n", "self-loop"),
    ("3 1\n0 5\n", "out of range"),
    ("3 2\n0 1\n", "declares 2 edges"),
    ("3 2\n0 1\n1 0\n", "repeated"),
    ("2 1\n0 x\n", "non-integer"),
    ("2 0\nw 0 -3\n", "negative"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_graph(text)
