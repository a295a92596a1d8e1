import pytest
from hypothesis import given
from hypothesis import strategies as st

from circlekit.graph import (
    Graph,
    InputError,
    connected_components,
    induced_subgraph,
    is_connected,
    join_graphs,
    parse_edge_list,
    relabel,
    serialize_edge_list,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@given(graphs())
def test_serialize_round_trip(g):
    h = parse_edge_list(serialize_edge_list(g))
    assert h.n == g.n and h.edge_set() == g.edge_set()


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# a path\n3 2\n\n0 1\n  # mid\n2 1\n")
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]
    assert g.degree(1) == 2 and g.has_edge(2, 1)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2\n", 2),
        ("-1 0\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(InputError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


@pytest.mark.parametrize("text", ["", "# only a comment\n", "3 2\n0 1\n", b"\xff\xfe"])
def test_parse_errors_without_line(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_components_sorted_by_smallest():
    g = Graph.from_edges(6, [(4, 1), (3, 5), (0, 5)])
    assert connected_components(g) == [[0, 3, 5], [1, 4], [2]]
    assert not is_connected(g)
    assert is_connected(Graph.from_edges(1, []))


def test_induced_subgraph_keeps_sorted_order():
    g = Graph.from_edges(5, [(0, 4), (4, 2), (2, 1), (1, 3)])
    h, remap = induced_subgraph(g, [4, 2, 0])
    assert remap == {0: 0, 2: 1, 4: 2}
    assert h.edges() == [(0, 2), (1, 2)]


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_is_isomorphism(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert sorted(h.degree(perm[v]) for v in range(g.n)) == sorted(g.degree(v) for v in range(g.n))
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_join_connects_neighbourhoods():
    # two triangles joined at one vertex each give K4 minus an edge... plus
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    j, left, right = join_graphs(g, 0, g, 0)
    assert j.n == 4
    # both sides keep their edge and all cross pairs appear
    assert j.m == 1 + 1 + 4
    assert set(left) == {1, 2} and set(right) == {1, 2}
