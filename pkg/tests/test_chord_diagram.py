import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlekit.chord_diagram import (
    ChordDiagram,
    DiagramError,
    canonical_form,
    circle_join,
    clique_diagram,
    crossing_pairs,
    equivalent,
    intersection_graph,
    is_consecutive,
    reverse,
    same_up_to_rotation_reversal,
    star_diagram,
)
from circlekit.graph import join_graphs


def edges_by_label(d):
    return {frozenset(p) for p in crossing_pairs(d)}


def word(n, seed):
    w = list(range(n)) * 2
    random.Random(seed).shuffle(w)
    return ChordDiagram(w)


def test_parse_and_occurrences():
    d = ChordDiagram.parse("a b a b")
    assert d.labels == ["a", "b"]
    assert d.occ["a"] == (0, 2)
    assert str(d) == "a b a b"


@pytest.mark.parametrize("text", ["a b a", "a a a a", "a b c a b"])
def test_malformed_words(text):
    with pytest.raises(DiagramError):
        ChordDiagram.parse(text)


def test_house_diagram(house, house_word):
    names = "abcde"
    got = {frozenset(names.index(x) for x in p) for p in crossing_pairs(house_word)}
    assert got == {frozenset(e) for e in house.edges()}


def test_clique_form_is_a_a():
    d = clique_diagram(["a", "b", "c"])
    assert d.word == ("a", "b", "c", "a", "b", "c")
    assert intersection_graph(d).m == 3
    # the mirrored form nests every pair
    assert intersection_graph(ChordDiagram.parse("a b c c b a")).m == 0


def test_star_form_reverses_leaves():
    d = star_diagram("x", ["y", "z"])
    assert d.word == ("x", "y", "z", "x", "z", "y")
    assert edges_by_label(d) == {frozenset("xy"), frozenset("xz")}
    # without the reversal the leaves cross: a triangle
    assert intersection_graph(ChordDiagram.parse("x y z x y z")).m == 3


def test_inner_outer_split_the_word():
    d = ChordDiagram.parse("x a b x b a")
    assert d.inner("x") == ("a", "b")
    assert d.outer("x") == ("b", "a")


def test_consecutive_in_house(house_word):
    assert is_consecutive(house_word, {"a", "b"}) == ("b", "a")
    assert is_consecutive(house_word, {"a", "d", "e"}) is None
    with pytest.raises(DiagramError):
        is_consecutive(house_word, set())


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6), st.integers(0, 40))
def test_canonical_invariant_under_symmetries(n, seed, k):
    d = word(n, seed)
    rot = d.rotate(k % (2 * n))
    assert canonical_form(rot) == canonical_form(d)
    assert equivalent(reverse(d), d)
    assert same_up_to_rotation_reversal(reverse(rot).word, d.word)
    mapping = {v: f"v{v}" for v in d.labels}
    assert equivalent(d.relabel(mapping), d)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6))
def test_crossings_match_interleaving(n, seed):
    d = word(n, seed)
    for a in d.labels:
        for b in d.labels:
            if a == b:
                continue
            (a1, a2), (b1, b2) = d.occ[a], d.occ[b]
            crosses = (a1 < b1 < a2) != (a1 < b2 < a2)
            assert (frozenset((a, b)) in edges_by_label(d)) == crosses


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.integers(0, 10**6))
def test_circle_join_realises_graph_join(n1, n2, seed):
    rng = random.Random(seed)
    d1 = word(n1, rng.random())
    d2 = ChordDiagram([v + 100 for v in word(n2, rng.random()).word])
    x1, x2 = rng.choice(d1.labels), rng.choice(d2.labels)
    j = circle_join(d1, x1, d2, x2)
    g1, g2 = intersection_graph(d1), intersection_graph(d2)
    i1 = {lab: i for i, lab in enumerate(d1.labels)}
    i2 = {lab: i for i, lab in enumerate(d2.labels)}
    ref, left, right = join_graphs(g1, i1[x1], g2, i2[x2])
    back = {left[i1[lab]]: lab for lab in d1.labels if lab != x1}
    back.update({right[i2[lab]]: lab for lab in d2.labels if lab != x2})
    want = {frozenset((back[u], back[v])) for u, v in ref.edges()}
    assert edges_by_label(j) == want


def test_circle_join_rejects_overlap():
    with pytest.raises(DiagramError):
        circle_join(ChordDiagram.parse("a b a b"), "a", ChordDiagram.parse("c b c b"), "c")


def test_canonical_forms_distinguish():
    assert not equivalent(ChordDiagram.parse("a a b b"), ChordDiagram.parse("a b a b"))
    assert not same_up_to_rotation_reversal(("a", "b", "a", "b"), ("b", "a", "a", "b"))
