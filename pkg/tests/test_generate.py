import pytest

from circlekit.generate import KINDS, OBSTRUCTIONS, GenConfig, generate, obstruction, wheel
from circlekit.graph import is_connected
from circlekit.recognizer import recognize


@pytest.mark.parametrize("kind", [k for k in KINDS if k != "obstruction"])
def test_kinds_have_n_vertices_and_are_circle(kind):
    g = generate(GenConfig(kind, 40, 5))
    assert g.n == 40
    assert recognize(g).accepted


def test_seed_determinism():
    a = generate(GenConfig("sparse-circle", 300, 11))
    b = generate(GenConfig("sparse-circle", 300, 11))
    c = generate(GenConfig("sparse-circle", 300, 12))
    assert a.edge_set() == b.edge_set() != c.edge_set()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 50, 2000])
def test_sparse_circle_is_connected_and_sparse(n):
    g = generate(GenConfig("sparse-circle", n, n))
    assert g.n == n and is_connected(g)
    assert g.m <= 4 * n


def test_sparse_circle_max_degree_bounded():
    g = generate(GenConfig("sparse-circle", 5000, 1))
    assert max(g.degree(v) for v in range(g.n)) <= 30


@pytest.mark.parametrize("name", OBSTRUCTIONS)
def test_obstruction_shapes(name):
    g = obstruction(name)
    assert is_connected(g)
    if name == "F7":
        assert (g.n, g.m) == (7, 9)
        assert sorted(g.adj[0]) == [2, 4, 6]
    else:
        k = int(name[1])
        assert (g.n, g.m) == (k + 1, 2 * k)
        assert g.edge_set() == wheel(k).edge_set()


def test_unknown_kind():
    with pytest.raises(ValueError):
        generate(GenConfig("nope", 5, 0))
