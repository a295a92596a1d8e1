from __future__ import annotations

import pytest

from circlekit.chord_diagram import ChordDiagram, intersection_graph
from circlekit.graph import Graph

# house: a=0 b=1 c=2 d=3 e=4
HOUSE_EDGES = [(0, 1), (0, 2), (1, 2), (1, 4), (2, 3), (3, 4)]
HOUSE_WORD = "c b a d c e d b e a"

# nine vertices 1..9 around a house-labelled prime node; stored 0-based
NINE_EDGES_1 = [
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (2, 8), (3, 6), (3, 7), (3, 8),
    (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9),
]
NINE_DRAWN_MISSING = (5, 8)  # the drawing lacks this edge


def graph_1based(n: int, edges) -> Graph:
    return Graph.from_edges(n, [(a - 1, b - 1) for a, b in edges])


@pytest.fixture
def house() -> Graph:
    return Graph.from_edges(5, HOUSE_EDGES)


@pytest.fixture
def house_word() -> ChordDiagram:
    return ChordDiagram(HOUSE_WORD.split())


@pytest.fixture
def nine() -> Graph:
    return graph_1based(9, NINE_EDGES_1)


def labelled_edges(d: ChordDiagram) -> set[tuple]:
    """Crossing pairs of ``d`` as sorted label pairs."""
    lab = d.labels
    return {tuple(sorted((lab[u], lab[v]), key=str)) for u, v in intersection_graph(d).edges()}


def represents(d: ChordDiagram, g: Graph) -> bool:
    if sorted(d.labels) != list(range(g.n)):
        return False
    return {tuple(sorted(e)) for e in labelled_edges(d)} == set(g.edges())


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
