"""Instance generators. All randomness goes through a seeded ``random.Random``."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chord_diagram import ChordDiagram, intersection_graph
from .graph import Graph, relabel

KINDS = ("random-diagram", "sparse-circle", "clique", "star", "cycle", "path", "obstruction")
OBSTRUCTIONS = ("W5", "F7", "W7")


@dataclass(frozen=True)
class GenConfig:
    kind: str = "sparse-circle"
    n: int = 100
    seed: int = 0
    obstruction: str = "W5"
    shuffle: bool = True


def clique(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Centre 0 with n-1 leaves."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel(k: int) -> Graph:
    """Hub 0 over the cycle 1..k."""
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, edges)


def obstruction(name: str) -> Graph:
    if name == "W5":
        return wheel(5)
    if name == "W7":
        return wheel(7)
    if name == "F7":
        # hexagon 1..6 with a hub on every other vertex
        edges = [(i, i % 6 + 1) for i in range(1, 7)] + [(0, 2), (0, 4), (0, 6)]
        return Graph.from_edges(7, edges)
    raise ValueError(f"unknown obstruction {name!r}")


def random_word(n: int, rng: random.Random) -> ChordDiagram:
    w = [i for i in range(n) for _ in range(2)]
    rng.shuffle(w)
    return ChordDiagram(w)


def random_diagram(n: int, rng: random.Random) -> Graph:
    """Intersection graph of a uniform double occurrence word. Dense: about
    n^2 / 6 edges."""
    return intersection_graph(random_word(n, rng))


def sparse_circle(n: int, rng: random.Random) -> Graph:
    """Connected circle graph with m = O(n), from a random split tree.

    Nodes are stars (centre on a leaf), C5 primes and small cliques. Every
    inner tree-edge ends at an opaque marker, one whose label neighbours all
    face leaves, which caps every neighbourhood at a constant.
    """
    if n < 3:
        return path(n)
    # markers are ints; opp pairs inner tree-edges, leaf_vert marks leaf markers
    opp: list[int] = []
    label_nb: list[list[int]] = []
    leaf_vert: dict[int, int] = {}
    slots: list[int] = []
    count = 0

    def new_node(kind: str, size: int) -> list[int]:
        base = len(opp)
        ms = list(range(base, base + size))
        for _ in ms:
            opp.append(-1)
            label_nb.append([])
        if kind == "clique":
            for a in ms:
                label_nb[a] = [b for b in ms if b != a]
        elif kind == "star":
            c = ms[0]
            label_nb[c] = ms[1:]
            for a in ms[1:]:
                label_nb[a] = [c]
        else:  # C5 on a b c d e, cycle order
            for i, a in enumerate(ms):
                label_nb[a] = [ms[(i - 1) % 5], ms[(i + 1) % 5]]
        return ms

    def leaf(m: int) -> None:
        nonlocal count
        leaf_vert[m] = count
        count += 1

    # the first node is a star with its centre on a leaf; every other marker is a slot
    d0 = min(n, rng.randint(3, 5))
    ms = new_node("star", d0)
    leaf(ms[0])
    slots.extend(ms[1:])
    total = d0  # leaves if every open slot became a leaf
    while total < n:
        r = n - total
        # a clique closes its slot for good, so keep at least one open
        choice = rng.random() if len(slots) > 1 else 0.9
        i = rng.randrange(len(slots))
        slots[i], slots[-1] = slots[-1], slots[i]
        host = slots.pop()
        if choice < 0.4 and r >= 3:
            ms = new_node("prime", 5)
            opp[host], opp[ms[0]] = ms[0], host
            for m in (ms[1], ms[3], ms[4]):
                leaf(m)
            slots.append(ms[2])
            total += 3
        elif choice < 0.55:
            k = min(r + 2, rng.randint(3, 4))
            ms = new_node("clique", k)
            opp[host], opp[ms[0]] = ms[0], host
            for m in ms[1:]:
                leaf(m)
            total += k - 2
        else:
            k = min(r + 2, rng.randint(3, 5))
            ms = new_node("star", k)
            # enter through a non-centre marker, centre on a leaf
            opp[host], opp[ms[1]] = ms[1], host
            leaf(ms[0])
            slots.extend(ms[2:])
            total += k - 2
    for m in slots:
        leaf(m)

    def reach(m: int) -> list[int]:
        """Leaves at the end of alternating paths leaving through marker m."""
        if m in leaf_vert:
            return [leaf_vert[m]]
        o = opp[m]
        out = []
        for y in label_nb[o]:
            out.extend(reach(y))
        return out

    edges = []
    for m, v in leaf_vert.items():
        for y in label_nb[m]:
            for w in reach(y):
                if v < w:
                    edges.append((v, w))
    return Graph.from_edges(count, edges)


def generate(cfg: GenConfig) -> Graph:
    rng = random.Random(cfg.seed)
    if cfg.kind == "random-diagram":
        g = random_diagram(cfg.n, rng)
    elif cfg.kind == "sparse-circle":
        g = sparse_circle(cfg.n, rng)
    elif cfg.kind == "clique":
        g = clique(cfg.n)
    elif cfg.kind == "star":
        g = star(cfg.n)
    elif cfg.kind == "cycle":
        g = cycle(cfg.n)
    elif cfg.kind == "path":
        g = path(cfg.n)
    elif cfg.kind == "obstruction":
        return obstruction(cfg.obstruction)
    else:
        raise ValueError(f"unknown generator kind {cfg.kind!r}")
    if cfg.shuffle and cfg.kind in ("random-diagram", "sparse-circle"):
        perm = list(range(g.n))
        rng.shuffle(perm)
        g = relabel(g, perm)
    return g
