import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlekit.chord_diagram import (
    ChordDiagram,
    DiagramError,
    circle_join,
    equivalent,
    intersection_graph,
    is_consecutive,
    same_up_to_rotation_reversal,
)
from circlekit.csc import Csc


def edge_labels(d):
    lab = d.labels
    return {frozenset((lab[u], lab[v])) for u, v in intersection_graph(d).edges()}


@st.composite
def diagrams(draw, prefix="a", lo=1, hi=7):
    n = draw(st.integers(lo, hi))
    w = [f"{prefix}{i}" for i in range(n)] * 2
    seed = draw(st.integers(0, 2**32 - 1))
    random.Random(seed).shuffle(w)
    return ChordDiagram(w)


@settings(max_examples=300, deadline=None)
@given(diagrams())
def test_round_trip_keeps_the_word(d):
    c = Csc.from_diagram(d)
    c.validate()
    back = c.to_diagram()
    assert equivalent(back, d)
    assert same_up_to_rotation_reversal(back.word, d.word)


@settings(max_examples=400, deadline=None)
@given(diagrams(), st.data())
def test_consecutive_test_matches_word_scan(d, data):
    s = set(data.draw(st.lists(st.sampled_from(d.labels), min_size=1, unique=True)))
    c = Csc.from_diagram(d)
    assert (c.consecutive_test(s) is None) == (is_consecutive(d, s) is None)


@settings(max_examples=300, deadline=None)
@given(diagrams(lo=2), st.data())
def test_insert_chord_crosses_exactly_s(d, data):
    s = set(data.draw(st.lists(st.sampled_from(d.labels), min_size=1, unique=True)))
    c = Csc.from_diagram(d)
    if c.consecutive_test(s) is None:
        return
    c.insert_chord("new", s)
    c.validate()
    pairs = edge_labels(c.to_diagram())
    touching = {p for p in pairs if "new" in p}
    assert {next(iter(p - {"new"})) for p in touching} == s
    assert pairs - touching == edge_labels(d)


@settings(max_examples=300, deadline=None)
@given(diagrams("a", 2, 6), diagrams("b", 2, 6), st.data())
def test_join_matches_word_join(d1, d2, data):
    x1 = data.draw(st.sampled_from(d1.labels))
    x2 = data.draw(st.sampled_from(d2.labels))
    ref = circle_join(d1, x1, d2, x2)
    c = Csc.from_diagram(d1).join(x1, Csc.from_diagram(d2), x2)
    c.validate()
    assert edge_labels(c.to_diagram()) == edge_labels(ref)


def test_join_keeps_sets_consecutive():
    rng = random.Random(1)
    hits = 0
    for _ in range(1500):
        n1, n2 = rng.randint(2, 6), rng.randint(2, 6)
        w1 = [f"a{i}" for i in range(n1)] * 2
        w2 = [f"b{i}" for i in range(n2)] * 2
        rng.shuffle(w1)
        rng.shuffle(w2)
        d1, d2 = ChordDiagram(w1), ChordDiagram(w2)
        x1, x2 = rng.choice(d1.labels), rng.choice(d2.labels)
        s1 = set(rng.sample(d1.labels, rng.randint(1, n1))) | {x1}
        s2 = set(rng.sample(d2.labels, rng.randint(1, n2))) | {x2}
        c1, c2 = Csc.from_diagram(d1), Csc.from_diagram(d2)
        if not (c1.consecutive_test(s1, bookends=[x1]) and c2.consecutive_test(s2, bookends=[x2])):
            continue
        hits += 1
        c = c1.join(x1, c2, x2, s1, s2)
        c.validate()
        assert edge_labels(c.to_diagram()) == edge_labels(circle_join(d1, x1, d2, x2))
        t = (s1 - {x1}) | (s2 - {x2})
        if t:
            assert c.consecutive_test(t) is not None
    assert hits > 100


def test_join_rejects_non_consecutive_set(house_word):
    c1 = Csc.from_diagram(house_word)
    c2 = Csc.from_diagram(ChordDiagram.parse("y r y r"))
    with pytest.raises(DiagramError):
        c1.join("a", c2, "y", {"a", "d", "e"}, {"y", "r"})


def test_house_factor(house_word):
    c = Csc.from_diagram(house_word)
    assert c.consecutive_test({"a", "b"}) is not None
    assert c.consecutive_test({"a", "c", "e"}) is not None
    for bad in ({"a", "d", "e"}, {"b", "c", "d"}, {"b", "c", "e"}):
        assert c.consecutive_test(bad) is None


@settings(max_examples=400, deadline=None)
@given(diagrams(hi=11), st.data())
def test_consecutive_test_reads_at_most_2s_plus_2(d, data):
    s = data.draw(st.lists(st.sampled_from(d.labels), min_size=1, unique=True))
    entry = data.draw(st.sampled_from(s))
    c = Csc.from_diagram(d)
    before = c.arena.reads
    c.consecutive_test(set(s), entry=entry)
    assert c.arena.reads - before <= 2 * len(s) + 2


def test_join_and_insert_touch_constant_records():
    rng = random.Random(3)
    for n in (5, 50, 500):
        w = [f"a{i}" for i in range(n)] * 2
        rng.shuffle(w)
        c = Csc.from_diagram(ChordDiagram(w))
        f = c.factor({"a0"})
        before = c.arena.work
        c.arena.insert_chord(c.ids.get("a0") + n + 10, f)
        assert c.arena.work - before == 6
        before = c.arena.work
        c2 = Csc.from_diagram(ChordDiagram.parse("y r y r"))
        c.join("a1", c2, "y")
        assert c.arena.work - before == 8
