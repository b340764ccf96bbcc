import pytest

from conftest import complete, cycle, graph_from_letters
from omimwidth.graph import Graph
from omimwidth.oracles import (
    best_completion, brute_beta, brute_fvs, brute_is, brute_nd, brute_representative_check,
)
from omimwidth.repdp import SolutionCollection

EMPTY = Graph(0, [])
K1 = Graph(1, [0])


def test_is_examples():
    assert brute_is(cycle(5))[0] == 2
    assert brute_is(Graph(3, [0] * 3)) == (3, 0b111)
    assert brute_is(complete(4))[0] == 1
    assert brute_is(EMPTY) == (0, 0)


def test_fvs_examples():
    assert brute_fvs(cycle(4))[0] == 1
    assert brute_fvs(graph_from_letters("ab bc bd"))[0] == 0
    weight, fvs = brute_fvs(complete(4))
    assert weight == 2 and fvs.bit_count() == 2


def test_nd_examples():
    assert brute_nd(EMPTY) == 0
    assert brute_nd(K1) == 1
    assert brute_nd(graph_from_letters("ab bc")) == 1


def test_beta_examples():
    assert brute_beta(EMPTY) == 1
    assert brute_beta(K1) == 3
    assert brute_beta(Graph(2, [0, 0])) == 7


def test_size_caps():
    big = Graph(13, [0] * 13)
    with pytest.raises(ValueError, match="at most 12"):
        brute_nd(big)
    with pytest.raises(ValueError, match="at most 8"):
        brute_beta(Graph(9, [0] * 9))
    assert brute_nd(big, limit=13) == 1


def test_representative_check_examples():
    p4 = graph_from_letters("ab bc cd")
    coll = SolutionCollection.of(p4, 0b0011, [0, 0b01, 0b10])
    assert brute_representative_check(p4, 0b0011, coll, coll, "IS")
    assert not brute_representative_check(p4, 0b0011, [0], [], "IS")
    assert not brute_representative_check(p4, 0b0011, [0], [0b01], "IS")
    assert best_completion(p4, [0b01, 0b10], 0b0100, "IS") == 1
    assert best_completion(p4, [0b10], 0b0100, "IS") is None
    with pytest.raises(ValueError):
        brute_representative_check(p4, 0b0011, coll, coll, "XYZ")
