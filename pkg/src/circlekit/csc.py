"""Consistent symmetric cycles.

A chord diagram stored as a cycle over chord endpoints with no anchor and no
direction. Chord ``c`` owns endpoints ``2c`` and ``2c + 1``; every endpoint
has two neighbour slots, ``link[2e]`` (plus) and ``link[2e + 1]`` (minus).

Orientation invariant: for every chord, plus of one endpoint and plus of the
other endpoint lie on the same side of the chord. This is what lets a join
know, in O(1), which neighbour of the far endpoint continues a given side.

Many cycles may share one :class:`CycleArena`; the split tree keeps every
prime node in a single arena indexed by marker id.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass

from .chord_diagram import ChordDiagram, DiagramError

PLUS, MINUS = 0, 1


@dataclass
class Factor:
    """A run of endpoints holding one endpoint of each chord of a set.

    ``first``/``last`` are the end endpoints; ``out_first``/``out_last`` the
    slots of those ends that point out of the run. For a one-endpoint run the
    two out slots differ.
    """

    first: int
    out_first: int
    last: int
    out_last: int
    size: int

    def end_for(self, chord: int) -> tuple[int, int]:
        """(endpoint, inward slot) of the bookend belonging to ``chord``."""
        if self.first >> 1 == chord:
            return self.first, 1 - self.out_first
        if self.last >> 1 == chord:
            return self.last, 1 - self.out_last
        raise KeyError(chord)


class CycleArena:
    """Grow-only endpoint storage shared by any number of cycles."""

    def __init__(self) -> None:
        self.link: list[int] = []
        self.work = 0
        self.reads = 0  # endpoint records read by find_factor

    def ensure(self, chord: int) -> None:
        need = 4 * (chord + 1)
        if len(self.link) < need:
            self.link.extend([-1] * (need - len(self.link)))

    def copy(self) -> "CycleArena":
        c = CycleArena()
        c.link = list(self.link)
        return c

    # -- basic navigation -------------------------------------------------

    def slot_to(self, e: int, target: int) -> int:
        if self.link[2 * e] == target:
            return PLUS
        if self.link[2 * e + 1] == target:
            return MINUS
        raise ValueError(f"endpoint {e} is not next to {target}")

    def step(self, prev: int, cur: int) -> int:
        a = self.link[2 * cur]
        return self.link[2 * cur + 1] if a == prev else a

    def _relink(self, e: int, old: int, new: int) -> None:
        self.link[2 * e + self.slot_to(e, old)] = new

    def walk(self, start: int) -> list[int]:
        """All endpoints of the cycle through ``start``, leaving via plus."""
        out = [start]
        prev, cur = start, self.link[2 * start]
        while cur != start:
            out.append(cur)
            prev, cur = cur, self.step(prev, cur)
        self.work += len(out)
        return out

    def chords_of(self, start_chord: int) -> list[int]:
        seen = []
        mark = set()
        for e in self.walk(2 * start_chord):
            if e >> 1 not in mark:
                mark.add(e >> 1)
                seen.append(e >> 1)
        return seen

    # -- construction -----------------------------------------------------

    def load(self, word: list[int]) -> None:
        """Lay out a cyclic word of chord ids (each exactly twice).

        First occurrence gets plus = next position, second gets plus =
        previous position, so both plus slots point into the inner arc.
        """
        L = len(word)
        seen: dict[int, int] = {}
        ends = [0] * L
        for i, c in enumerate(word):
            self.ensure(c)
            if c in seen:
                ends[i] = 2 * c + 1
            else:
                seen[c] = i
                ends[i] = 2 * c
        for i, e in enumerate(ends):
            nxt, prv = ends[(i + 1) % L], ends[(i - 1) % L]
            if e & 1 == 0:
                self.link[2 * e], self.link[2 * e + 1] = nxt, prv
            else:
                self.link[2 * e], self.link[2 * e + 1] = prv, nxt
        self.work += L

    def word(self, start_chord: int) -> list[int]:
        return [e >> 1 for e in self.walk(2 * start_chord)]

    # -- consecutivity ----------------------------------------------------

    def _run(
        self,
        e: int,
        slot: int,
        members: set[int],
        limit: int,
        known: dict[int, int] | None = None,
        first: int = -1,
    ) -> list[int]:
        """Member endpoints after ``e`` on side ``slot``, at most ``limit``.

        ``known`` maps the endpoints of an earlier run (``self._seq``) to
        their index. Reaching one, the walk copies that run instead of
        reading it again, stops before its centre, and resumes reading past
        its far end if it walks off. The id after the last endpoint is left
        in ``self._stop``. ``first``, when given, is the neighbour to start
        from, already known without reading ``e``.
        """
        out: list[int] = []
        if first >= 0:
            prev, cur, reads = e, first, 0
        else:
            prev, cur, reads = e, self.link[2 * e + slot], 1
        while len(out) < limit and cur != e and (cur >> 1) in members:
            if known is not None and cur in known:
                seq, centre = self._seq, self._centre
                i = known[cur]
                j = known.get(prev, i)
                d = i - j if abs(i - j) == 1 else (1 if i < centre else -1)
                while len(out) < limit and 0 <= i < len(seq) and i != centre:
                    out.append(seq[i])
                    i += d
                if len(out) >= limit or i == centre:
                    cur = -1
                    break
                prev, cur = seq[i - d], self._ends[0 if i < 0 else 1]
                continue
            out.append(cur)
            prev, cur = cur, self.step(prev, cur)
            reads += 1
        self._stop = cur
        self.reads += reads
        self.work += reads
        return out

    def find_factor(
        self,
        members: set[int],
        entry: int,
        bookends: Iterable[int] = (),
    ) -> Factor | None:
        """Factor holding one endpoint of each chord in ``members`` and
        nothing else, whose end chords include every chord of ``bookends``.

        ``entry`` is a chord of ``members``. Looks only at the runs of member
        endpoints around the two endpoints of ``entry``: O(|members|).
        """
        k = len(members)
        need = set(bookends)
        if len(need) > 2 or not need <= members or entry not in members:
            return None
        known: dict[int, int] | None = None
        for e in (2 * entry, 2 * entry + 1):
            if known is not None and e in known:
                # e was read by the first runs: its neighbours are known
                j, seq0, ends = known[e], self._seq, self._ends
                lo = seq0[j - 1] if j > 0 else ends[0]
                hi = seq0[j + 1] if j + 1 < len(seq0) else ends[1]
                left = self._run(e, MINUS, members, k - 1, known, first=lo)
                right = self._run(e, PLUS, members, k - 1, known, first=hi)
            else:
                left = self._run(e, MINUS, members, k - 1, known)
                lstop = self._stop
                right = self._run(e, PLUS, members, k - 1, known)
            seq = left[::-1] + [e] + right
            pos_e = len(left)
            if known is None:
                # the second endpoint's runs reuse this one; windows holding
                # both endpoints of the entry chord are never valid
                self._seq, self._centre = seq, pos_e
                self._ends = (lstop, self._stop)
                known = {x: i for i, x in enumerate(seq)}
            lo = max(0, pos_e - k + 1)
            hi = min(pos_e, len(seq) - k)
            if lo > hi:
                continue
            count: dict[int, int] = {}
            dup = 0
            for t in range(lo, lo + k):
                c = seq[t] >> 1
                count[c] = count.get(c, 0) + 1
                if count[c] == 2:
                    dup += 1
            s = lo
            while True:
                self.work += 1
                if dup == 0:
                    a, b = seq[s], seq[s + k - 1]
                    if need <= {a >> 1, b >> 1}:
                        return self._factor(seq, s, k, e, pos_e)
                if s == hi:
                    break
                c_out, c_in = seq[s] >> 1, seq[s + k] >> 1
                count[c_out] -= 1
                if count[c_out] == 1:
                    dup -= 1
                count[c_in] = count.get(c_in, 0) + 1
                if count[c_in] == 2:
                    dup += 1
                s += 1
        return None

    def _factor(self, seq: list[int], s: int, k: int, e: int, pos_e: int) -> Factor:
        first, last = seq[s], seq[s + k - 1]
        if k == 1:
            return Factor(first, PLUS, last, MINUS, 1)
        out_first = 1 - self.slot_to(first, seq[s + 1])
        out_last = 1 - self.slot_to(last, seq[s + k - 2])
        return Factor(first, out_first, last, out_last, k)

    # -- surgery ------------------------------------------------------------

    def join(self, ma: int, sa: int, mb: int, sb: int) -> None:
        """Splice two cycles, dropping the chords of ``ma`` and ``mb``.

        ``sa`` is the slot of ``ma`` facing its factor, ``sb`` likewise for
        ``mb``; the neighbours behind those slots end up next to each other,
        so the two factors fuse. Eight slot rewrites.
        """
        L = self.link
        mo, mbo = ma ^ 1, mb ^ 1
        a_in, a_out = L[2 * ma + sa], L[2 * ma + 1 - sa]
        c1, c2 = L[2 * mo + sa], L[2 * mo + 1 - sa]
        b_in, b_out = L[2 * mb + sb], L[2 * mb + 1 - sb]
        d1, d2 = L[2 * mbo + sb], L[2 * mbo + 1 - sb]
        # Arcs as (head, old neighbour of head, tail, old neighbour of tail),
        # in result order: X side one forward, Y side two backward, X side
        # two forward, Y side one backward. An arc is empty when it would
        # start on the partner of the removed endpoint.
        arcs = []
        if a_in != mo:
            arcs.append((a_in, ma, c1, mo))
        if b_out != mbo:
            arcs.append((b_out, mb, d2, mbo))
        if c2 != ma:
            arcs.append((c2, mo, a_out, ma))
        if d1 != mb:
            arcs.append((d1, mbo, b_in, mb))
        for i, (_, _, t, t_old) in enumerate(arcs):
            h, h_old = arcs[(i + 1) % len(arcs)][:2]
            self._relink(t, t_old, h)
            self._relink(h, h_old, t)
        for e in (ma, mo, mb, mbo):
            L[2 * e] = L[2 * e + 1] = -1
        self.work += 8

    def insert_chord(self, x: int, f: Factor) -> None:
        """Add chord ``x`` with one endpoint just outside each end of ``f``;
        it then crosses exactly the chords of the factor."""
        self.ensure(x)
        L = self.link
        x1, x2 = 2 * x, 2 * x + 1
        o1 = L[2 * f.first + f.out_first]
        o2 = L[2 * f.last + f.out_last]
        L[2 * f.first + f.out_first] = x1
        self._relink(o1, f.first, x1)
        L[2 * x1], L[2 * x1 + 1] = f.first, o1
        L[2 * f.last + f.out_last] = x2
        self._relink(o2, f.last, x2)
        L[2 * x2], L[2 * x2 + 1] = f.last, o2
        self.work += 6

    # -- checking -------------------------------------------------------------

    def validate(self, start_chord: int) -> None:
        """Full check of symmetry and the orientation invariant. O(n^2)."""
        ends = self.walk(2 * start_chord)
        pos = {e: i for i, e in enumerate(ends)}
        L = self.link
        for e in ends:
            for s in (PLUS, MINUS):
                nb = L[2 * e + s]
                if nb not in pos:
                    raise AssertionError(f"endpoint {e} links outside the cycle")
                if e not in (L[2 * nb], L[2 * nb + 1]):
                    raise AssertionError(f"link {e}->{nb} not symmetric")
            if (e ^ 1) not in pos:
                raise AssertionError(f"partner of {e} missing")
        n = len(ends)
        for e in ends:
            if e & 1:
                continue
            i, j = sorted((pos[e], pos[e ^ 1]))
            if j - i == 1 or (i == 0 and j == n - 1):
                continue
            inside = lambda p: i < p < j  # noqa: E731
            if inside(pos[L[2 * e]]) != inside(pos[L[2 * (e ^ 1)]]):
                raise AssertionError(f"chord {e >> 1} breaks orientation")


class Csc:
    """A single cycle with external labels, over a private arena."""

    def __init__(self, arena: CycleArena, anchor: int, labels: dict[int, Hashable]) -> None:
        self.arena = arena
        self.anchor = anchor
        self.labels = labels
        self.ids = {lab: c for c, lab in labels.items()}

    @classmethod
    def from_diagram(cls, d: ChordDiagram) -> "Csc":
        if len(d) == 0:
            raise DiagramError("empty diagram")
        ids = {lab: i for i, lab in enumerate(d.labels)}
        arena = CycleArena()
        arena.load([ids[a] for a in d.word])
        return cls(arena, 0, {i: lab for lab, i in ids.items()})

    def to_diagram(self) -> ChordDiagram:
        return ChordDiagram(self.labels[c] for c in self.arena.word(self.anchor))

    def __len__(self) -> int:
        return len(self.labels)

    def consecutive_test(
        self, s: Iterable[Hashable], entry: Hashable | None = None, bookends: Iterable[Hashable] = ()
    ) -> tuple[Hashable, Hashable] | None:
        members = {self.ids[a] for a in s}
        if not members:
            raise DiagramError("empty chord set")
        e = self.ids[entry] if entry is not None else next(iter(members))
        f = self.arena.find_factor(members, e, [self.ids[b] for b in bookends])
        if f is None:
            return None
        return self.labels[f.first >> 1], self.labels[f.last >> 1]

    def factor(self, s: Iterable[Hashable], bookends: Iterable[Hashable] = ()) -> Factor | None:
        members = {self.ids[a] for a in s}
        return self.arena.find_factor(members, next(iter(members)), [self.ids[b] for b in bookends])

    def join(
        self,
        x: Hashable,
        other: "Csc",
        x2: Hashable,
        s: Iterable[Hashable] | None = None,
        s2: Iterable[Hashable] | None = None,
    ) -> "Csc":
        """Circle-join on chords ``x`` and ``x2``; both inputs are consumed.

        With ``s``/``s2`` (sets having ``x``/``x2`` as a bookend) the splice
        keeps ``(s - x) | (s2 - x2)`` consecutive; raises if a set is not
        consecutive with the required bookend.
        """
        clash = (set(self.ids) - {x}) & (set(other.ids) - {x2})
        if clash:
            raise DiagramError(f"label sets overlap: {sorted(map(str, clash))}")
        # move the other cycle into this arena under fresh ids
        off = len(self.arena.link) // 4
        arena = self.arena
        arena.ensure(off + len(other.arena.link) // 4 - 1)
        for i, v in enumerate(other.arena.link):
            arena.link[4 * off + i] = -1 if v < 0 else v + 2 * off
        labels = dict(self.labels)
        for c, lab in other.labels.items():
            labels[c + off] = lab
        cx, cx2 = self.ids[x], other.ids[x2] + off
        sa = sb = PLUS
        ma, mb = 2 * cx, 2 * cx2
        if s is not None:
            f = arena.find_factor({self.ids[a] for a in s}, cx, [cx])
            if f is None:
                raise DiagramError("first set not consecutive with the join chord as bookend")
            ma, sa = f.end_for(cx)
        if s2 is not None:
            f2 = arena.find_factor({other.ids[a] + off for a in s2}, cx2, [cx2])
            if f2 is None:
                raise DiagramError("second set not consecutive with the join chord as bookend")
            mb, sb = f2.end_for(cx2)
        arena.join(ma, sa, mb, sb)
        del labels[cx], labels[cx2]
        anchor = next(iter(labels))
        return Csc(arena, anchor, labels)

    def insert_chord(self, label: Hashable, s: Iterable[Hashable]) -> "Csc":
        members = {self.ids[a] for a in s}
        f = self.arena.find_factor(members, next(iter(members)))
        if f is None:
            raise DiagramError("neighbourhood is not consecutive")
        c = len(self.arena.link) // 4
        self.arena.insert_chord(c, f)
        self.labels[c] = label
        self.ids[label] = c
        return self

    def validate(self) -> None:
        self.arena.validate(self.anchor)
