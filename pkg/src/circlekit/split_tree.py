"""Split PC-trees.

Every tree-edge is a pair of markers (``opp`` is an involution). A marker is
held by a leaf (``LEAF``), by a degenerate node object (``DEG``), or is a
chord of a prime node (``CHORD``). Prime nodes have no object: a prime is
the cycle its chords live on in the shared :class:`~circlekit.csc.CycleArena`,
with chord id equal to marker id. One chord per prime carries ``rootflag``:
the one whose tree-edge leads to the root leaf. Degenerate nodes carry the
same information as ``root``.

Potential: 1 per prime node plus ``deg - 2`` per degenerate node, kept up to
date by every primitive.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .chord_diagram import ChordDiagram, crossing_pairs
from .csc import PLUS, CycleArena, Factor
from .graph import Graph

LEAF, DEG, CHORD, DEAD = 0, 1, 2, 3
CLIQUE, STAR = "clique", "star"


class DegNode:
    __slots__ = ("uid", "kind", "markers", "root", "center")

    def __init__(self, uid: int, kind: str, markers: set[int], root: int, center: int) -> None:
        self.uid = uid
        self.kind = kind
        self.markers = markers
        self.root = root
        self.center = center

    def __repr__(self) -> str:
        return f"DegNode({self.uid}, {self.kind}, n={len(self.markers)})"

    def adjacent(self, a: int, b: int) -> bool:
        if self.kind == CLIQUE:
            return a != b
        return a != b and self.center in (a, b)


@dataclass
class NodeView:
    """Materialised node for tests and dumps."""

    kind: str
    markers: list[int]
    root: int
    center: int = -1


class SplitTree:
    def __init__(self) -> None:
        self.opp: list[int] = []
        self.kind: list[int] = []
        self.node: list[DegNode | None] = []
        self.vert: list[int] = []
        self.rootflag: list[bool] = []
        self.arena = CycleArena()
        self.leaf_of: dict[int, int] = {}
        self.root_leaf = -1
        self.chords: set[int] = set()
        self.degs: dict[int, DegNode] = {}
        self.n_prime = 0
        self.phi = 0
        self.work = 0
        self._uid = 0

    # -- records ---------------------------------------------------------------

    def new_marker(self, kind: int, node: DegNode | None = None, vert: int = -1) -> int:
        m = len(self.opp)
        self.opp.append(-1)
        self.kind.append(kind)
        self.node.append(node)
        self.vert.append(vert)
        self.rootflag.append(False)
        self.work += 1
        return m

    def pair(self, a: int, b: int) -> None:
        self.opp[a] = b
        self.opp[b] = a

    def new_leaf(self, v: int) -> int:
        m = self.new_marker(LEAF, vert=v)
        self.leaf_of[v] = m
        return m

    def new_deg(self, kind: str, markers: Iterable[int], root: int, center: int = -1) -> DegNode:
        u = DegNode(self._uid, kind, set(), root, center)
        self._uid += 1
        for m in markers:
            self.kind[m] = DEG
            self.node[m] = u
            u.markers.add(m)
        self.degs[u.uid] = u
        self.phi += len(u.markers) - 2
        self.work += len(u.markers)
        return u

    def drop_deg(self, u: DegNode) -> None:
        self.phi -= len(u.markers) - 2
        del self.degs[u.uid]

    def is_up(self, m: int) -> bool:
        """Does the tree-edge at marker ``m`` lead from its holder towards the root?"""
        k = self.kind[m]
        if k == LEAF:
            return m != self.root_leaf
        if k == DEG:
            return self.node[m].root == m  # type: ignore[union-attr]
        return self.rootflag[m]

    # -- construction ----------------------------------------------------------

    def bootstrap(self, g: Graph, first3: list[int]) -> None:
        """Split tree of the 3-vertex connected graph on ``first3``; the first
        vertex's leaf is the root."""
        a, b, c = first3
        leaves = [self.new_leaf(v) for v in first3]
        self.root_leaf = leaves[0]
        ms = [self.new_marker(DEG) for _ in range(3)]
        for lf, m in zip(leaves, ms):
            self.pair(lf, m)
        ab, bc, ac = g.has_edge(a, b), g.has_edge(b, c), g.has_edge(a, c)
        if ab and bc and ac:
            self.new_deg(CLIQUE, ms, ms[0])
        else:
            mid = [i for i, (x, y) in enumerate([(ab, ac), (ab, bc), (ac, bc)]) if x and y][0]
            self.new_deg(STAR, ms, ms[0], center=ms[mid])

    # -- degenerate surgery ----------------------------------------------------

    def add_to_deg(self, u: DegNode, v: int) -> int:
        """New leaf for vertex ``v`` hung on ``u`` (a star gets a new non-centre marker)."""
        lf = self.new_leaf(v)
        q = self.new_marker(DEG, u)
        u.markers.add(q)
        self.pair(lf, q)
        self.phi += 1
        return lf

    def node_split(self, u: DegNode, part: Iterable[int]) -> tuple[DegNode, int, int]:
        """Move the markers ``part`` of ``u`` into a new node ``w``.

        Returns ``(w, qa, qb)`` where ``qa`` is w's new marker and ``qb``
        u's, opposite each other. Cost O(|part|). Stars keep the centre on
        its side; the other side becomes a star centred on its new marker.
        """
        part = list(part)
        if not (2 <= len(part) <= len(u.markers) - 2):
            raise ValueError(f"bad node-split size {len(part)} of {len(u.markers)}")
        qa = self.new_marker(DEG)
        qb = self.new_marker(DEG, u)
        self.pair(qa, qb)
        for m in part:
            u.markers.discard(m)
        u.markers.add(qb)
        moved_root = u.root in part
        center = -1
        if u.kind == STAR:
            if u.center in part:
                center = u.center
                u.center = qb
            else:
                center = qa
        w = DegNode(self._uid, u.kind, set(part), u.root if moved_root else qa, center)
        self._uid += 1
        w.markers.add(qa)
        for m in w.markers:
            self.node[m] = w
        self.degs[w.uid] = w
        if moved_root:
            u.root = qb
        self.work += len(part) + 2
        return w, qa, qb

    def subdivide(self, q: int, kind: str, center_on_q: bool, v: int) -> DegNode:
        """Put a new 3-marker node on the tree-edge at ``q`` with a leaf for ``v``.

        For a star, the centre is the new marker paired with ``q`` when
        ``center_on_q``, otherwise the one paired with ``opp(q)``.
        """
        q2 = self.opp[q]
        m1 = self.new_marker(DEG)
        m2 = self.new_marker(DEG)
        mx = self.new_marker(DEG)
        self.pair(q, m1)
        self.pair(q2, m2)
        lf = self.new_leaf(v)
        self.pair(lf, mx)
        # the new node's root marker faces whichever side held the root
        root = m2 if self.is_up(q) else m1
        center = -1
        if kind == STAR:
            center = m1 if center_on_q else m2
        self.new_deg(kind, (m1, m2, mx), root, center)
        return self.node[m1]  # type: ignore[return-value]

    # -- prime surgery ------------------------------------------------------------

    def deg_to_chords(self, u: DegNode, word: list[int]) -> None:
        """Turn degenerate ``u`` into a prime-style cycle laid out as ``word``."""
        self.arena.load(word)
        for m in u.markers:
            self.kind[m] = CHORD
            self.node[m] = None
            self.chords.add(m)
        self.rootflag[u.root] = True
        self.drop_deg(u)
        self.phi += 1
        self.n_prime += 1

    def join_chords(self, ma: int, sa: int, mb: int, sb: int) -> None:
        """Node-join two prime cycles along the tree-edge ``ma>>1 -- mb>>1``."""
        a, b = ma >> 1, mb >> 1
        self.arena.join(ma, sa, mb, sb)
        for c in (a, b):
            self.kind[c] = DEAD
            self.rootflag[c] = False
            self.chords.discard(c)
        self.phi -= 1
        self.n_prime -= 1
        self.work += 4

    def add_chord(self, f: Factor, v: int) -> int:
        """Insert a chord crossing exactly the factor ``f`` with a leaf for ``v``."""
        lf = self.new_leaf(v)
        c = self.new_marker(CHORD)
        self.pair(lf, c)
        self.arena.insert_chord(c, f)
        self.chords.add(c)
        return lf

    # -- whole-tree views (test and reporting helpers) ----------------------------

    def prime_cycles(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for c in sorted(self.chords):
            if c in seen:
                continue
            cyc = self.arena.chords_of(c)
            seen.update(cyc)
            out.append(cyc)
        return out

    def nodes(self) -> list[NodeView]:
        out = [
            NodeView(u.kind, sorted(u.markers), u.root, u.center)
            for u in sorted(self.degs.values(), key=lambda u: u.uid)
        ]
        for cyc in self.prime_cycles():
            root = [c for c in cyc if self.rootflag[c]]
            out.append(NodeView("prime", sorted(cyc), root[0] if len(root) == 1 else -1))
        return out

    def potential(self) -> int:
        """Recomputed from scratch; ``self.phi`` is the incremental copy."""
        return sum(1 if v.kind == "prime" else len(v.markers) - 2 for v in self.nodes())

    def stats(self) -> dict[str, int]:
        views = self.nodes()
        return {
            "leaves": len(self.leaf_of),
            "clique": sum(v.kind == CLIQUE for v in views),
            "star": sum(v.kind == STAR for v in views),
            "prime": sum(v.kind == "prime" for v in views),
            "phi": self.phi,
        }

    def label_neighbours(self) -> dict[int, set[int]]:
        """Label-graph adjacency of every inner marker (test helper)."""
        nb: dict[int, set[int]] = {}
        for u in self.degs.values():
            for m in u.markers:
                nb[m] = {y for y in u.markers if u.adjacent(m, y)}
        for cyc in self.prime_cycles():
            d = ChordDiagram(self.arena.word(cyc[0]))
            for c in cyc:
                nb[c] = set()
            for pair in crossing_pairs(d):
                a, b = tuple(pair)
                nb[a].add(b)  # type: ignore[index]
                nb[b].add(a)  # type: ignore[index]
        return nb

    def accessibility_graph(self) -> tuple[Graph, list[int]]:
        """Graph on the leaves: adjacent iff joined by an alternating path.

        Returns the graph on dense ids and the vertex behind each id.
        """
        verts = sorted(self.leaf_of)
        idx = {v: i for i, v in enumerate(verts)}
        nb = self.label_neighbours()
        edges = set()
        for v in verts:
            start = self.opp[self.leaf_of[v]]
            stack = [start]
            while stack:
                q = stack.pop()
                for y in nb[q]:
                    z = self.opp[y]
                    if self.kind[z] == LEAF:
                        w = self.vert[z]
                        if w != v:
                            a, b = sorted((idx[v], idx[w]))
                            edges.add((a, b))
                    else:
                        stack.append(z)
        return Graph.from_edges(len(verts), sorted(edges)), verts

    def holder_key(self, m: int) -> tuple:
        k = self.kind[m]
        if k == LEAF:
            return ("L", m)
        if k == DEG:
            return ("D", self.node[m].uid)  # type: ignore[union-attr]
        return ("P", min(self.arena.chords_of(m)))

    def spanning_subtree(self, verts: Iterable[int]) -> tuple[int, int]:
        """(nodes, leaves) of the minimal subtree spanning the leaves of
        ``verts``, leaves included in the node count. Whole-tree pass."""
        keys: dict[int, tuple] = {}
        cache: dict[int, tuple] = {}
        for cyc in self.prime_cycles():
            key = ("P", min(cyc))
            for c in cyc:
                cache[c] = key
        adj: dict[tuple, list[tuple]] = {}
        for m, k in enumerate(self.kind):
            if k == DEAD:
                continue
            a = cache.get(m) or self.holder_key(m)
            o = self.opp[m]
            b = cache.get(o) or self.holder_key(o)
            keys[m] = a
            adj.setdefault(a, []).append(b)
        want = {("L", self.leaf_of[v]) for v in verts}
        deg = {u: len(v) for u, v in adj.items()}
        removed: set[tuple] = set()
        stack = [u for u, d in deg.items() if d <= 1 and u not in want]
        while stack:
            u = stack.pop()
            if u in removed:
                continue
            removed.add(u)
            for w in adj[u]:
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] <= 1 and w not in want:
                        stack.append(w)
        return len(adj) - len(removed), len(want)

    def extract_diagram(self) -> ChordDiagram:
        """Chord diagram of the accessibility graph, labels = vertices.

        Lays out every degenerate node (clique ``A A``, star ``c A c A^r``)
        in a scratch copy of the arena, then splices along every inner
        tree-edge. Linear in the size of the tree.
        """
        arena = self.arena.copy()
        for u in self.degs.values():
            ms = sorted(u.markers)
            if u.kind == CLIQUE:
                arena.load(ms + ms)
            else:
                rest = [m for m in ms if m != u.center]
                arena.load([u.center] + rest + [u.center] + rest[::-1])
        inner = [m for m, k in enumerate(self.kind) if k in (DEG, CHORD)]
        anchor = -1
        for m in inner:
            o = self.opp[m]
            if self.kind[o] == LEAF:
                anchor = m
            elif m < o:
                arena.join(2 * m, PLUS, 2 * o, PLUS)
        if anchor < 0:
            raise ValueError("tree has no inner marker next to a leaf")
        return ChordDiagram(self.vert[self.opp[c]] for c in arena.word(anchor))

    # -- validation ---------------------------------------------------------------

    def validate(self) -> None:
        """Structural invariants (O(n^2) in places; test use only)."""
        live = [m for m, k in enumerate(self.kind) if k != DEAD]
        for m in live:
            o = self.opp[m]
            if o < 0 or self.opp[o] != m or o == m:
                raise AssertionError(f"opp broken at {m}")
            if self.kind[o] == DEAD:
                raise AssertionError(f"marker {m} paired with dead {o}")
            if self.kind[m] == LEAF and self.kind[o] == LEAF:
                raise AssertionError("leaf paired with leaf")
        for u in self.degs.values():
            if len(u.markers) < 3:
                raise AssertionError(f"{u} has degree < 3")
            if u.root not in u.markers:
                raise AssertionError(f"{u} root not among markers")
            if (u.kind == STAR) != (u.center in u.markers):
                raise AssertionError(f"{u} centre inconsistent")
            for m in u.markers:
                if self.node[m] is not u or self.kind[m] != DEG:
                    raise AssertionError(f"marker {m} does not point back to {u}")
        for cyc in self.prime_cycles():
            self.arena.validate(cyc[0])
            if sum(self.rootflag[c] for c in cyc) != 1:
                raise AssertionError(f"prime {cyc} has {sum(self.rootflag[c] for c in cyc)} root flags")
            if len(cyc) < 5:
                raise AssertionError(f"prime with {len(cyc)} markers")
        # orientation: walking away from the root leaf, each holder is entered
        # through its root marker
        seen_deg: set[int] = set()
        seen_chord: set[int] = set()
        stack = [self.opp[self.root_leaf]]
        count_leaves = 1
        while stack:
            q = stack.pop()
            if self.kind[q] == LEAF:
                count_leaves += 1
                continue
            if not self.is_up(q):
                raise AssertionError(f"marker {q} entered from above is not its holder's root")
            if self.kind[q] == DEG:
                u = self.node[q]
                seen_deg.add(u.uid)  # type: ignore[union-attr]
                others = [m for m in u.markers if m != q]  # type: ignore[union-attr]
            else:
                cyc = self.arena.chords_of(q)
                seen_chord.update(cyc)
                others = [c for c in cyc if c != q]
            stack.extend(self.opp[m] for m in others)
        if count_leaves != len(self.leaf_of) or seen_deg != set(self.degs) or seen_chord != self.chords:
            raise AssertionError("tree not connected / not a tree")
        # minimality
        for u in self.degs.values():
            for m in u.markers:
                o = self.opp[m]
                if self.kind[o] != DEG:
                    continue
                w = self.node[o]
                if u.kind == CLIQUE and w.kind == CLIQUE:  # type: ignore[union-attr]
                    raise AssertionError("adjacent cliques")
                if u.kind == STAR and w.kind == STAR and m == u.center and o != w.center:  # type: ignore[union-attr]
                    raise AssertionError("star centre facing star leaf")
        if self.phi != self.potential():
            raise AssertionError(f"phi drift: {self.phi} vs {self.potential()}")

    def dump(self) -> str:
        lines = [f"root leaf {self.vert[self.root_leaf]}"]
        for v in self.nodes():
            desc = []
            for m in v.markers:
                o = self.opp[m]
                tag = f"v{self.vert[o]}" if self.kind[o] == LEAF else f"m{o}"
                flag = "*" if m == v.root else ""
                flag += "c" if m == v.center else ""
                desc.append(f"{m}{flag}->{tag}")
            lines.append(f"{v.kind}: " + " ".join(desc))
        return "\n".join(lines)
