import itertools
import math

import pytest

from circlekit.chord_diagram import ChordDiagram, intersection_graph
from circlekit.generate import clique, cycle, obstruction, path, star
from circlekit.graph import Graph
from circlekit.oracle import (
    CapExceeded,
    OracleCaps,
    all_diagrams,
    brute_recognize,
    brute_splits,
    check_good_vertex,
    diagram_count,
    enumerate_diagrams,
    is_prime,
    labelled_class,
    representing_classes,
)

from conftest import represents


@pytest.mark.parametrize("n", range(0, 6))
def test_enumeration_count(n):
    words = list(enumerate_diagrams(n))
    assert len(words) == len(set(words)) == diagram_count(n)
    assert diagram_count(3) == math.factorial(5) // 4


def test_small_counts_by_hand():
    assert sorted(enumerate_diagrams(1)) == [(0, 0)]
    assert sorted(enumerate_diagrams(2)) == [(0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0)]


@pytest.mark.parametrize("n", range(1, 5))
def test_all_diagrams_equals_filtered_enumeration(n):
    pairs = list(itertools.combinations(range(n), 2))
    by_graph = {}
    for w in enumerate_diagrams(n):
        by_graph.setdefault(intersection_graph(ChordDiagram(w)).edge_set(), set()).add(w)
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        got = set(all_diagrams(g))
        assert got == by_graph.get(g.edge_set(), set())


def test_brute_recognize_known():
    assert brute_recognize(cycle(6)) is not None
    for name in ("W5", "F7", "W7"):
        assert brute_recognize(obstruction(name)) is None
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    d = brute_recognize(g)
    assert d is not None and represents(d, g)


def test_house_has_one_class(house):
    classes = representing_classes(house)
    assert len(classes) == 1
    assert is_prime(house)
    assert len(representing_classes(cycle(5))) == 1


def test_star_has_many_classes():
    # the leaves of a star can be ordered freely
    assert len(representing_classes(star(4))) == 3
    assert not is_prime(star(4)) and not is_prime(path(4))


def test_splits_of_k4_and_p4():
    k4 = brute_splits(clique(4))
    assert len(k4) == 3
    assert all(s.frontier_a == s.a and s.frontier_b == s.b for s in k4)
    (p4,) = brute_splits(path(4))
    assert p4.a == {0, 1} and p4.frontier_a == {1} and p4.frontier_b == {2}


def test_labelled_class_symmetric():
    w = (0, 1, 2, 0, 1, 2)
    assert labelled_class(w) == labelled_class(w[::-1]) == labelled_class(w[2:] + w[:2])


def test_good_vertex():
    # pendant vertices are always good; in the house every vertex is
    p = path(5)
    assert check_good_vertex(p, 0)
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 4), (2, 3), (3, 4)])
    assert all(check_good_vertex(g, x) for x in range(5))


def test_caps(monkeypatch):
    with pytest.raises(CapExceeded):
        list(enumerate_diagrams(4, OracleCaps(3, 3)))
    with pytest.raises(CapExceeded):
        brute_recognize(cycle(8), OracleCaps(7, 7))
    monkeypatch.setenv("CIRCLEKIT_ORACLE_CAP", "5")
    assert OracleCaps.from_env() == OracleCaps(5, 5)
    with pytest.raises(CapExceeded):
        brute_splits(cycle(6))
    monkeypatch.setenv("CIRCLEKIT_ORACLE_CAP", "6,20")
    assert OracleCaps.from_env() == OracleCaps(6, 20)
    assert brute_recognize(cycle(14)) is not None
