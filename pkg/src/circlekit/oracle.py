"""Brute-force references. Exponential; guarded by size caps.

Nothing here shares code with the incremental recognizer beyond
:mod:`circlekit.graph` and :mod:`circlekit.chord_diagram`.
"""

from __future__ import annotations

import itertools
import math
import os
from collections.abc import Iterator
from dataclasses import dataclass

from .chord_diagram import ChordDiagram, is_consecutive
from .graph import Graph, connected_components, induced_subgraph, is_connected
from .lexbfs import lexbfs


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleCaps:
    enumerate_max: int = 7
    recognize_max: int = 12

    @classmethod
    def from_env(cls) -> "OracleCaps":
        """``CIRCLEKIT_ORACLE_CAP`` is either one integer (both caps) or ``a,b``."""
        raw = os.environ.get("CIRCLEKIT_ORACLE_CAP", "").strip()
        if not raw:
            return cls()
        parts = [int(p) for p in raw.split(",")]
        if len(parts) == 1:
            return cls(parts[0], parts[0])
        return cls(parts[0], parts[1])


def _check(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(f"{what} capped at n={cap} (got {n}); set CIRCLEKIT_ORACLE_CAP")


def diagram_count(n: int) -> int:
    """Words up to rotation with labelled chords: (2n-1)! / 2^(n-1)."""
    if n == 0:
        return 1
    return math.factorial(2 * n - 1) // 2 ** (n - 1)


def enumerate_diagrams(n: int, caps: OracleCaps | None = None) -> Iterator[tuple[int, ...]]:
    """Every chord diagram on chords 0..n-1, one word per rotation class
    (the word starts with chord 0)."""
    caps = caps or OracleCaps.from_env()
    _check(n, caps.enumerate_max, "enumerate_diagrams")
    if n == 0:
        yield ()
        return
    L = 2 * n
    word = [0] * L
    left = [2] * n
    left[0] = 1

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == L:
            yield tuple(word)
            return
        for c in range(n):
            if left[c]:
                left[c] -= 1
                word[i] = c
                yield from rec(i + 1)
                left[c] += 1

    yield from rec(1)


def all_diagrams(g: Graph, caps: OracleCaps | None = None) -> Iterator[tuple[int, ...]]:
    """Every word starting with vertex 0 whose intersection graph is ``g``.

    Depth-first over words starting with vertex 0. Closing chord v fixes its
    crossing set: the chords opened after v and still open, plus those
    opened before v and closed since v opened. It must equal N(v). A chord
    with a closed neighbour can no longer be opened, and the closing order
    forced on the open chords has to stay acyclic.
    """
    caps = caps or OracleCaps.from_env()
    _check(g.n, caps.recognize_max, "brute_recognize")
    n = g.n
    if n == 0:
        yield ()
        return
    nb = [frozenset(a) for a in g.adj]
    L = 2 * n
    word: list[int] = []
    opened_at = [-1] * n
    closed_at = [-1] * n
    open_set: list[int] = []

    def crossers(v: int) -> set[int]:
        o = opened_at[v]
        out = {w for w in open_set if w != v and opened_at[w] > o}
        for w in range(n):
            if closed_at[w] > o and opened_at[w] < o:
                out.add(w)
        return out

    def closes_first(u: int, v: int) -> bool:
        # two open chords: they cross iff the earlier opened closes first
        if opened_at[u] < opened_at[v]:
            return v in nb[u]
        return v not in nb[u]

    def closing_order_ok(w: int) -> bool:
        # with w opened now, the forced closing order on the open chords
        # must stay a transitive tournament: no u, v with u < v < w < u
        for u in open_set:
            uw = u in nb[w]  # u closes before w
            for v in open_set:
                if v == u:
                    continue
                if uw and w not in nb[v] and closes_first(v, u):
                    return False
        return True

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == L:
            yield tuple(word)
            return
        # close an open chord
        for v in list(open_set):
            if crossers(v) != nb[v]:
                continue
            open_set.remove(v)
            closed_at[v] = i
            word.append(v)
            yield from rec(i + 1)
            word.pop()
            closed_at[v] = -1
            open_set.append(v)
        # or open a fresh one
        fresh = [w for w in range(n) if opened_at[w] < 0]
        if 2 * len(fresh) + len(open_set) > L - i:
            return
        for w in fresh:
            # a chord opened now cannot cross one that already closed
            if any(closed_at[u] >= 0 for u in nb[w]):
                continue
            if not closing_order_ok(w):
                continue
            opened_at[w] = i
            open_set.append(w)
            word.append(w)
            yield from rec(i + 1)
            word.pop()
            open_set.remove(w)
            opened_at[w] = -1

    opened_at[0] = 0
    open_set.append(0)
    word.append(0)
    yield from rec(1)


def brute_diagram(g: Graph, caps: OracleCaps | None = None) -> ChordDiagram | None:
    """A chord diagram whose intersection graph is ``g``, or None."""
    w = next(all_diagrams(g, caps), None)
    return None if w is None else ChordDiagram(w)


def brute_recognize(g: Graph, caps: OracleCaps | None = None) -> ChordDiagram | None:
    """Exhaustive circle-graph test, component by component.

    Returns a representing diagram (components side by side) or None.
    """
    caps = caps or OracleCaps.from_env()
    _check(g.n, caps.recognize_max, "brute_recognize")
    word: list[int] = []
    for comp in connected_components(g):
        h, _ = induced_subgraph(g, comp)
        d = brute_diagram(h, caps)
        if d is None:
            return None
        word.extend(comp[a] for a in d.word)
    return ChordDiagram(word)


def labelled_class(word: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation of the word or its reversal; labels kept."""
    best: tuple[int, ...] | None = None
    for w in (tuple(word), tuple(word)[::-1]):
        for k in range(len(w)):
            c = w[k:] + w[:k]
            if best is None or c < best:
                best = c
    return best if best is not None else ()


def representing_classes(g: Graph, caps: OracleCaps | None = None) -> set[tuple[int, ...]]:
    """All diagrams of ``g`` up to rotation and reversal, labels kept."""
    return {labelled_class(w) for w in all_diagrams(g, caps)}


@dataclass(frozen=True)
class Split:
    a: frozenset[int]
    b: frozenset[int]
    frontier_a: frozenset[int]
    frontier_b: frozenset[int]


def brute_splits(g: Graph, caps: OracleCaps | None = None) -> list[Split]:
    """All splits: bipartitions (A, B), |A|, |B| >= 2, whose crossing edges are
    exactly frontier_a x frontier_b. Each listed once (A holds vertex 0)."""
    caps = caps or OracleCaps.from_env()
    _check(g.n, caps.recognize_max, "brute_splits")
    n = g.n
    nb = [set(a) for a in g.adj]
    out = []
    rest = list(range(1, n))
    for r in range(1, n - 1):
        for extra in itertools.combinations(rest, r):
            a = frozenset((0, *extra))
            b = frozenset(range(n)) - a
            if len(b) < 2:
                continue
            fa = frozenset(u for u in a if nb[u] & b)
            fb = frozenset(w for w in b if nb[w] & a)
            if all(fb <= nb[u] for u in fa):
                out.append(Split(a, b, fa, fb))
    return out


def is_prime(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not brute_splits(g)


def check_good_vertex(g: Graph, x: int, caps: OracleCaps | None = None) -> bool:
    """Does some diagram of ``g`` have N(x) consecutive?"""
    nx = list(g.adj[x])
    for w in all_diagrams(g, caps):
        if not nx or is_consecutive(ChordDiagram(w), nx) is not None:
            return True
    return False


def lexbfs_last(g: Graph) -> int:
    return lexbfs(g, 0).order[-1]
