import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlekit.chord_diagram import ChordDiagram, canonical_form
from circlekit.generate import GenConfig, generate, obstruction
from circlekit.graph import Graph, induced_subgraph, is_connected
from circlekit.lexbfs import lexbfs
from circlekit.oracle import brute_recognize
from circlekit.recognizer import Recognizer, recognize

from conftest import HOUSE_WORD, NINE_DRAWN_MISSING, NINE_EDGES_1, graph_1based, represents


def test_house_certificate(house):
    v = recognize(house)
    assert v.accepted
    assert represents(v.certificate, house)
    assert canonical_form(v.certificate) == canonical_form(ChordDiagram(HOUSE_WORD.split()))


@pytest.mark.parametrize("name", ["W5", "F7", "W7"])
def test_obstructions_rejected(name):
    g = obstruction(name)
    v = recognize(g)
    assert not v.accepted
    assert v.certificate is None
    assert v.stage in ("consecutivity", "subtree")
    assert 0 <= v.witness < g.n


def test_nine_vertex_tree(nine):
    v = recognize(nine, keep_trees=True)
    assert v.accepted and represents(v.certificate, nine)
    t = v.trees[0].tree
    primes = [u for u in t.nodes() if u.kind == "prime"]
    assert [len(u.markers) for u in primes] == [5]
    assert v.phi == 5
    assert sorted(len(u.markers) for u in t.nodes() if u.kind != "prime") == [3, 3, 4]


def test_nine_vertex_drawing_variant():
    # the 19-edge variant (one edge fewer) has a bigger prime and lower potential
    edges = [e for e in NINE_EDGES_1 if e != NINE_DRAWN_MISSING]
    g = graph_1based(9, edges)
    v = recognize(g, keep_trees=True)
    assert v.accepted and represents(v.certificate, g)
    primes = [u for u in v.trees[0].tree.nodes() if u.kind == "prime"]
    assert [len(u.markers) for u in primes] == [6]
    assert v.phi == 4


def test_vertex_ten_goes_through_case_four():
    g = graph_1based(10, NINE_EDGES_1 + [(10, 3), (10, 5), (10, 7), (10, 9)])
    r = Recognizer(g, list(range(10)), check=True)
    r.order = list(range(9))
    r.run()
    assert r.tree.phi == 5
    r.insert(9, [2, 4, 6, 8])
    r.tree.validate()
    last = r.stats[-1]
    assert last.case == "4"
    assert (last.phi_before, last.phi_after) == (5, 3)
    acc, _ = r.tree.accessibility_graph()
    assert acc.edge_set() == g.edge_set()
    assert recognize(g).accepted


def test_small_components():
    g = Graph.from_edges(6, [(1, 2), (3, 4), (4, 5), (3, 5)])
    v = recognize(g)
    assert v.accepted and represents(v.certificate, g)
    assert recognize(Graph.from_edges(0, [])).accepted


def test_disconnected_rejection_reports_global_witness():
    w5 = obstruction("W5")
    g = Graph.from_edges(9, [(0, 1), (1, 2)] + [(a + 3, b + 3) for a, b in w5.edges()])
    v = recognize(g)
    assert not v.accepted and v.witness >= 3


def random_graph(n, p, rng):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 8), st.sampled_from([0.3, 0.5, 0.7]), st.integers(0, 10**9))
def test_agrees_with_oracle(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    v = recognize(g, check=True)
    assert v.accepted == (brute_recognize(g) is not None)
    if v.accepted:
        assert represents(v.certificate, g)


@settings(max_examples=150, deadline=None)
@given(st.integers(5, 9), st.integers(0, 10**9))
def test_witness_is_first_failing_prefix(n, seed):
    rng = random.Random(seed)
    g = random_graph(n, 0.55, rng)
    if not is_connected(g):
        return
    v = recognize(g)
    if v.accepted:
        return
    order = list(lexbfs(g, 0).order)
    i = order.index(v.witness)
    with_x, _ = induced_subgraph(g, order[: i + 1])
    without, _ = induced_subgraph(g, order[:i])
    assert brute_recognize(with_x) is None
    assert brute_recognize(without) is not None


@pytest.mark.parametrize("seed", range(6))
def test_generated_instances_with_checks(seed):
    for cfg in (GenConfig("sparse-circle", 150, seed), GenConfig("random-diagram", 30, seed)):
        g = generate(cfg)
        v = recognize(g, check=True)
        assert v.accepted and represents(v.certificate, g)


def test_every_case_is_exercised():
    seen = set()
    stages = set()
    for seed in range(300):
        rng = random.Random(seed)
        g = generate(GenConfig("random-diagram", rng.randint(6, 20), seed))
        seen.update(s.case for s in recognize(g).insertions)
        h = random_graph(9, 0.5, rng)
        if is_connected(h):
            v = recognize(h)
            if not v.accepted:
                stages.add(v.stage)
    assert {"1a", "1b", "1c", "2pp", "2pe", "3", "4"} <= seen
    assert stages == {"consecutivity", "subtree"}


def test_work_and_stats_recorded(house):
    v = recognize(generate(GenConfig("sparse-circle", 500, 3)))
    assert v.work > 0 and len(v.insertions) == 500 - 3
    assert all(s.work > 0 and s.phi_after >= 0 for s in v.insertions)
    assert "status=circle" in v.report() and "work_units=" in v.report()
