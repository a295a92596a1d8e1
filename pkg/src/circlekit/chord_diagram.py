"""Chord diagrams as double occurrence circular words.

A diagram is stored as a linear word with an arbitrary anchor; every
operation here is invariant under rotation. This module is the readable
reference implementation: the quadratic-ish routines double as oracles for
the linked-cycle structure in :mod:`circlekit.csc`.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .graph import Graph

Label = Hashable


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class ChordDiagram:
    word: tuple[Label, ...]
    occ: dict[Label, tuple[int, int]] = field(compare=False, repr=False, hash=False)

    def __init__(self, word: Iterable[Label]) -> None:
        w = tuple(word)
        occ: dict[Label, list[int]] = {}
        for i, a in enumerate(w):
            occ.setdefault(a, []).append(i)
        for a, pos in occ.items():
            if len(pos) != 2:
                raise DiagramError(f"label {a!r} occurs {len(pos)} times")
        object.__setattr__(self, "word", w)
        object.__setattr__(self, "occ", {a: (p[0], p[1]) for a, p in occ.items()})

    @classmethod
    def parse(cls, text: str) -> "ChordDiagram":
        toks = text.split()
        conv = [int(t) if t.lstrip("-").isdigit() else t for t in toks]
        return cls(conv)

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.word)

    def __len__(self) -> int:
        return len(self.occ)

    @property
    def labels(self) -> list[Label]:
        return sorted(self.occ, key=_sort_key)

    def inner(self, x: Label) -> tuple[Label, ...]:
        """D(x1, x2): the letters strictly between the two occurrences of x."""
        i, j = self.occ[x]
        return self.word[i + 1 : j]

    def outer(self, x: Label) -> tuple[Label, ...]:
        """D(x2, x1): the letters after the second occurrence, wrapping round."""
        i, j = self.occ[x]
        return self.word[j + 1 :] + self.word[:i]

    def rotate(self, k: int) -> "ChordDiagram":
        k %= max(1, len(self.word))
        return ChordDiagram(self.word[k:] + self.word[:k])

    def relabel(self, mapping: dict[Label, Label]) -> "ChordDiagram":
        return ChordDiagram(mapping[a] for a in self.word)


def _sort_key(a: Label) -> tuple[int, object]:
    return (0, a) if isinstance(a, int) else (1, str(a))


def crossing_pairs(d: ChordDiagram) -> set[frozenset[Label]]:
    """Pairs of chords whose occurrences alternate. Output-sensitive O(n + m)."""
    # open chords kept in opening order as a linked list
    nxt: dict[Label, Label | None] = {}
    prv: dict[Label, Label | None] = {}
    tail: Label | None = None
    out: set[frozenset[Label]] = set()
    seen: set[Label] = set()
    for a in d.word:
        if a not in seen:
            seen.add(a)
            prv[a] = tail
            nxt[a] = None
            if tail is not None:
                nxt[tail] = a
            tail = a
            continue
        b = nxt[a]
        while b is not None:
            out.add(frozenset((a, b)))
            b = nxt[b]
        p, q = prv.pop(a), nxt.pop(a)
        if p is not None:
            nxt[p] = q
        if q is not None:
            prv[q] = p
        else:
            tail = p
    return out


def intersection_graph(d: ChordDiagram) -> Graph:
    """Circle graph of ``d``; vertex i is ``d.labels[i]``."""
    labels = d.labels
    idx = {a: i for i, a in enumerate(labels)}
    edges = []
    for pair in crossing_pairs(d):
        a, b = tuple(pair)
        edges.append((idx[a], idx[b]))
    return Graph.from_edges(len(labels), edges)


def is_consecutive(d: ChordDiagram, s: Iterable[Label]) -> tuple[Label, Label] | None:
    """Bookends of a factor holding exactly one endpoint of each chord in ``s``
    and nothing else, or None. Brute force over all |s|-long circular factors."""
    target = set(s)
    if not target:
        raise DiagramError("empty chord set")
    w = d.word
    L, k = len(w), len(target)
    for start in range(L):
        seen = set()
        for t in range(k):
            a = w[(start + t) % L]
            if a not in target or a in seen:
                break
            seen.add(a)
        else:
            return (w[start], w[(start + k - 1) % L])
    return None


def circle_join(d: ChordDiagram, x: Label, d2: ChordDiagram, x2: Label) -> ChordDiagram:
    """(d, x) ⊙ (d2, x2) = D(x1,x2) D'(x1',x2') D(x2,x1) D'(x2',x1')."""
    rest1 = set(d.occ) - {x}
    rest2 = set(d2.occ) - {x2}
    if rest1 & rest2:
        raise DiagramError(f"label sets overlap: {sorted(rest1 & rest2, key=_sort_key)}")
    if x not in d.occ or x2 not in d2.occ:
        raise DiagramError("join chord missing")
    return ChordDiagram(d.inner(x) + d2.inner(x2) + d.outer(x) + d2.outer(x2))


def reverse(d: ChordDiagram) -> ChordDiagram:
    return ChordDiagram(d.word[::-1])


def canonical_form(d: ChordDiagram) -> tuple[int, ...]:
    """Least first-occurrence relabelling over all rotations and reflections."""
    best: tuple[int, ...] | None = None
    for w in (d.word, d.word[::-1]):
        L = len(w)
        for k in range(L):
            names: dict[Label, int] = {}
            cand = []
            for t in range(L):
                a = w[(k + t) % L]
                if a not in names:
                    names[a] = len(names)
                cand.append(names[a])
            c = tuple(cand)
            if best is None or c < best:
                best = c
    return best if best is not None else ()


def equivalent(a: ChordDiagram, b: ChordDiagram) -> bool:
    return canonical_form(a) == canonical_form(b)


def same_up_to_rotation_reversal(a: Sequence[Label], b: Sequence[Label]) -> bool:
    """Exact (label-preserving) equality of circular words up to reversal."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    aa = tuple(a) * 2
    for cand in (tuple(b), tuple(b)[::-1]):
        for k in range(len(a)):
            if aa[k : k + len(a)] == cand:
                return True
    return False


def clique_diagram(labels: Sequence[Label]) -> ChordDiagram:
    """A A: every pair of chords crosses. (A A^r would nest them instead.)"""
    return ChordDiagram(tuple(labels) * 2)


def star_diagram(center: Label, leaves: Sequence[Label]) -> ChordDiagram:
    """x A x A^r: the centre crosses every leaf, leaves are pairwise disjoint.

    (x A x A with |A| >= 2 would make the leaves cross each other.)
    """
    return ChordDiagram((center, *leaves, center, *reversed(leaves)))
