"""Incremental circle graph recognition over a split PC-tree.

Vertices are inserted in LexBFS order. Each insertion

1. finds T(S), the minimal subtree spanning the leaves of the new vertex's
   earlier neighbours S, by round-robin upward searches that discover a
   prime node's parent only through the root-flagged chord next to a visited
   chord (``fake`` edges link chords of one prime);
2. marks every extremity of T(S) perfect / empty / mixed;
3. applies one of the four update cases.

Work units count records touched (markers, endpoints, queue entries).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .chord_diagram import ChordDiagram
from .csc import Factor
from .graph import Graph, connected_components, induced_subgraph
from .lexbfs import lexbfs
from .split_tree import CHORD, CLIQUE, DEG, LEAF, STAR, DegNode, SplitTree

P, E, M = "P", "E", "M"


class Rejection(Exception):
    def __init__(self, stage: str, detail: str = "") -> None:
        super().__init__(f"{stage}: {detail}" if detail else stage)
        self.stage = stage
        self.detail = detail


class InternalError(RuntimeError):
    """Marks that match no update case. Indicates a bug, never a verdict."""


@dataclass
class InsertStats:
    vertex: int
    degree: int
    case: str
    work: int
    phi_before: int
    phi_after: int
    subtree_nodes: int
    frontier_edges: int
    mixed_degenerate: int = 0
    mixed_prime: int = 0


@dataclass
class Verdict:
    accepted: bool
    certificate: ChordDiagram | None = None
    witness: int | None = None
    stage: str | None = None
    detail: str = ""
    n: int = 0
    m: int = 0
    work: int = 0
    phi: int = 0
    nodes_by_kind: dict[str, int] = field(default_factory=dict)
    trees: list["Component"] = field(default_factory=list)
    insertions: list[InsertStats] = field(default_factory=list)

    def report(self, certificate: bool = False, canonical: bool = False) -> str:
        from .chord_diagram import canonical_form

        lines = [f"status={'circle' if self.accepted else 'not-circle'}"]
        if not self.accepted:
            lines.append(f"witness_vertex={self.witness}")
            lines.append(f"stage={self.stage}")
        elif self.certificate is not None:
            if canonical:
                lines.append("certificate=" + " ".join(map(str, canonical_form(self.certificate))))
            elif certificate:
                lines.append(f"certificate={self.certificate}")
        lines.append(f"n={self.n}")
        lines.append(f"m={self.m}")
        for k in ("clique", "star", "prime"):
            lines.append(f"nodes_{k}={self.nodes_by_kind.get(k, 0)}")
        lines.append(f"phi={self.phi}")
        lines.append(f"work_units={self.work}")
        return "\n".join(lines)


@dataclass
class Component:
    vertices: list[int]
    tree: SplitTree | None


# ---------------------------------------------------------------------------
# small diagrams for cleaned degenerate nodes


def _window_ok(word: tuple[int, ...], members: frozenset[int], ends: frozenset[int]) -> bool:
    L, k = len(word), len(members)
    for s in range(L):
        win = [word[(s + t) % L] for t in range(k)]
        if set(win) == members and len(win) == k and ends <= {win[0], win[-1]}:
            return True
    return False


@lru_cache(maxsize=None)
def _small_layout(kind: str, states: tuple[str, ...], center: int) -> tuple[int, ...] | None:
    """Word over marker indices for a degenerate node of at most a handful of
    markers, in which the P/M markers form a factor bookended by the M ones."""
    idx = tuple(range(len(states)))
    members = frozenset(i for i in idx if states[i] != E)
    ends = frozenset(i for i in idx if states[i] == M)
    if kind == CLIQUE:
        for perm in itertools.permutations(idx):
            w = perm + perm
            if _window_ok(w, members, ends):
                return w
    else:
        leaves = [i for i in idx if i != center]
        for perm in itertools.permutations(leaves):
            w = (center,) + perm + (center,) + perm[::-1]
            if _window_ok(w, members, ends):
                return w
    return None


# ---------------------------------------------------------------------------


class _Sub:
    """T(S) made explicit: nodes, their T(S) markers and adjacency."""

    def __init__(self) -> None:
        self.adj: dict[tuple, list[tuple[int, tuple, int]]] = {}
        self.chords_of: dict[tuple, set[int]] = {}

    def add_edge(self, a: tuple, ma: int, b: tuple, mb: int) -> None:
        self.adj.setdefault(a, []).append((ma, b, mb))
        self.adj.setdefault(b, []).append((mb, a, ma))


def _crossers(seq: list[int], ys: set[int], candidates: list[int]) -> set[int]:
    """Candidates z whose chord crosses exactly ``ys - {z}``.

    ``seq`` is one walk of the cycle as chord ids. O(k log k) with two
    Fenwick trees (all chords / chords of ``ys``) counting nested chords.
    """
    n = len(seq)
    first: dict[int, int] = {}
    span: dict[int, tuple[int, int]] = {}
    for i, c in enumerate(seq):
        if c in first:
            span[c] = (first[c], i)
        else:
            first[c] = i
    ypref = [0] * (n + 1)
    for i, c in enumerate(seq):
        ypref[i + 1] = ypref[i] + (c in ys)
    bit_all = [0] * (n + 1)
    bit_y = [0] * (n + 1)

    def add(bit: list[int], i: int) -> None:
        i += 1
        while i <= n:
            bit[i] += 1
            i += i & -i

    def pref(bit: list[int], i: int) -> int:
        s = 0
        i += 1
        while i > 0:
            s += bit[i]
            i -= i & -i
        return s

    want = set(candidates)
    nested_all: dict[int, int] = {}
    nested_y: dict[int, int] = {}
    for c, (lo, hi) in sorted(span.items(), key=lambda kv: -kv[1][0]):
        if c in want:
            nested_all[c] = pref(bit_all, hi - 1)
            nested_y[c] = pref(bit_y, hi - 1)
        add(bit_all, hi)
        if c in ys:
            add(bit_y, hi)
    out = set()
    for z in candidates:
        lo, hi = span[z]
        cross_all = (hi - lo - 1) - 2 * nested_all[z]
        y_inside = ypref[hi] - ypref[lo + 1]
        cross_y = y_inside - 2 * nested_y[z]
        target = len(ys) - (z in ys)
        if cross_all == target and cross_y == target:
            out.add(z)
    return out


class Recognizer:
    """Maintains the split PC-tree of a growing connected circle graph."""

    def __init__(self, g: Graph, order: list[int], *, check: bool = False) -> None:
        self.g = g
        self.order = order
        self.pos = {v: i for i, v in enumerate(order)}
        self.tree = SplitTree()
        self.check = check
        self.work = 0
        self.current = -1
        self.stats: list[InsertStats] = []

    # -- driver ---------------------------------------------------------------

    def total_work(self) -> int:
        return self.work + self.tree.work + self.tree.arena.work

    def run(self) -> None:
        g, order = self.g, self.order
        self.tree.bootstrap(g, order[:3])
        self.work += 3
        for i in range(3, len(order)):
            x = order[i]
            s = [w for w in g.adj[x] if self.pos[w] < i]
            self.work += len(g.adj[x])
            self.insert(x, s)
            if self.check:
                self.tree.validate()

    def insert(self, x: int, s: list[int]) -> None:
        t = self.tree
        self.current = x
        w0, phi0 = self.total_work(), t.phi
        if not s:
            raise ValueError(f"vertex {x} has no earlier neighbour")
        leaves = [t.leaf_of[v] for v in s]
        info: dict = {"case": "", "nodes": 1, "frontier": 0, "d": 0, "p": 0, "dsum": 0}
        if len(leaves) == 1:
            self._insert_pendant(leaves[0], x, info)
        else:
            sub, nfront = self._spanning_subtree(leaves)
            info["frontier"] = nfront
            info["nodes"] = len(sub.adj)
            self._update(sub, set(leaves), x, info)
        if self.check and info["case"] == "4":
            # each cleaned degenerate node gives deg - 2, usually 1
            want = 1 - info["p"] - info["dsum"]
            if t.phi - phi0 != want:
                raise InternalError(f"case 4 potential change {t.phi - phi0}, expected {want}")
        self.stats.append(
            InsertStats(x, len(s), info["case"], self.total_work() - w0, phi0, t.phi,
                        info["nodes"], info["frontier"], info["d"], info["p"])
        )

    def _insert_pendant(self, leaf: int, x: int, info: dict) -> None:
        t = self.tree
        q = t.opp[leaf]
        if t.kind[q] == DEG and t.node[q].kind == STAR and t.node[q].center == q:  # type: ignore[union-attr]
            info["case"] = "1b"
            t.add_to_deg(t.node[q], x)  # type: ignore[arg-type]
        else:
            info["case"] = "2pe"
            t.subdivide(leaf, STAR, True, x)

    # -- step 1: T(S) -------------------------------------------------------

    def _elem(self, m: int):
        t = self.tree
        if t.kind[m] == DEG:
            return -1 - t.node[m].uid  # type: ignore[union-attr]
        return m

    def _spanning_subtree(self, leaves: list[int]) -> tuple[_Sub, int]:
        t = self.tree
        link = t.arena.link
        kind, opp = t.kind, t.opp
        active = deque(leaves)
        queued = set(leaves)
        visited: set[int] = set()
        climbed: set[int] = set()
        tree_edges: list[tuple[int, int]] = []
        fake: list[tuple[int, int]] = []
        r_seen = False
        deg_by_key: dict[int, DegNode] = {}

        def climb(up: int) -> None:
            nonlocal r_seen
            q = opp[up]
            tree_edges.append((up, q))
            k = kind[q]
            if k == LEAF:
                r_seen = True
                visited.add(q)
                return
            key = self._elem(q)
            if k == DEG:
                deg_by_key[key] = t.node[q]  # type: ignore[assignment]
            if key not in queued and key not in visited:
                queued.add(key)
                active.append(key)

        def process(a: int) -> None:
            nonlocal r_seen
            self.work += 1
            if a < 0:
                climb(deg_by_key[a].root)
                return
            if kind[a] == LEAF:
                if a == t.root_leaf:
                    r_seen = True
                else:
                    climb(a)
                return
            # a chord: look at the four endpoints next to it
            for e in (2 * a, 2 * a + 1):
                for sl in (0, 1):
                    b = link[2 * e + sl] >> 1
                    self.work += 1
                    if b == a:
                        continue
                    if t.rootflag[b]:
                        fake.append((a, b))
                        if b not in climbed:
                            climbed.add(b)
                            climb(b)
                    elif b in visited:
                        fake.append((a, b))

        def step() -> None:
            a = active.popleft()
            queued.discard(a)
            visited.add(a)
            process(a)

        while active and (r_seen or len(active) >= 2):
            step()
        targets = set(leaves)
        budget = len(tree_edges) + len(fake) + 1
        while not self._connected(leaves, targets, tree_edges, fake):
            if not active:
                raise Rejection("subtree", "upward searches do not meet")
            # a lone search may still be needed: resume it in doubling batches
            for _ in range(budget):
                if not active:
                    break
                step()
            budget *= 2
        return self._build_sub(set(leaves), tree_edges, fake), len(tree_edges) + len(fake)

    def _connected(self, leaves, targets, tree_edges, fake) -> bool:
        adj: dict[int, list[int]] = {}
        for a, b in tree_edges:
            ea, eb = self._elem(a), self._elem(b)
            adj.setdefault(ea, []).append(eb)
            adj.setdefault(eb, []).append(ea)
        for a, b in fake:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        seen = {leaves[0]}
        stack = [leaves[0]]
        while stack:
            u = stack.pop()
            for w in adj.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        self.work += len(seen) + len(tree_edges) + len(fake)
        return targets <= seen

    def _build_sub(self, sleaves: set[int], tree_edges, fake) -> _Sub:
        t = self.tree
        # group chords of one prime through the fake links
        group: dict[int, int] = {}
        fadj: dict[int, list[int]] = {}
        for a, b in fake:
            fadj.setdefault(a, []).append(b)
            fadj.setdefault(b, []).append(a)

        def key(m: int) -> tuple:
            k = t.kind[m]
            if k == LEAF:
                return ("L", m)
            if k == DEG:
                return ("D", t.node[m].uid)  # type: ignore[union-attr]
            if m not in group:
                stack = [m]
                group[m] = m
                while stack:
                    c = stack.pop()
                    for d in fadj.get(c, ()):
                        if d not in group:
                            group[d] = m
                            stack.append(d)
            return ("P", group[m])

        sub = _Sub()
        seen_pairs = set()
        for a, b in tree_edges:
            if (a, b) in seen_pairs:
                continue
            seen_pairs.add((a, b))
            sub.add_edge(key(a), a, key(b), b)
        # prune non-S leaves of the node tree
        deg = {u: len(v) for u, v in sub.adj.items()}
        queue = [u for u, d in deg.items() if d == 1 and not (u[0] == "L" and u[1] in sleaves)]
        removed = set()
        while queue:
            u = queue.pop()
            removed.add(u)
            for _, w, _ in sub.adj[u]:
                if w in removed:
                    continue
                deg[w] -= 1
                if deg[w] == 1 and not (w[0] == "L" and w[1] in sleaves):
                    queue.append(w)
        out = _Sub()
        for u, lst in sub.adj.items():
            if u in removed:
                continue
            out.adj[u] = [(mu, w, mw) for mu, w, mw in lst if w not in removed]
        self.work += len(sub.adj)
        for u in out.adj:
            if u[0] == "P":
                out.chords_of[u] = {mu for mu, _, _ in out.adj[u]}
        return out

    # -- step 2: marking ----------------------------------------------------

    def _mark(self, sub: _Sub, sleaves: set[int]):
        """away[m]: state of extremity m (it describes the far side of m's edge).

        Also returns per-node T(S) marker lists, non-perfect counts, and the
        boundary markers (outside T(S)) whose opposite extremity is perfect.
        """
        t = self.tree
        inner = [u for u in sub.adj if u[0] != "L"]
        rho = inner[0]
        parent: dict[tuple, int] = {rho: -1}
        order = [rho]
        for u in order:
            for mu, w, mw in sub.adj[u]:
                if w not in parent:
                    parent[w] = mw
                    order.append(w)
        Y = {u: [mu for mu, _, _ in sub.adj[u]] for u in sub.adj}
        self.work += sum(len(v) for v in Y.values())
        away: dict[int, str] = {}
        cycles: dict[tuple, list[int]] = {}

        def cycle(u: tuple) -> list[int]:
            if u not in cycles:
                cycles[u] = t.arena.word(next(iter(sub.chords_of[u])))
            return cycles[u]

        def toward_deg(u: DegNode, ys: list[int], z: int, others_ok: bool) -> str:
            if not others_ok:
                return M
            if u.kind == CLIQUE:
                return P if len(ys) == len(u.markers) else M
            if z == u.center:
                return P if len(ys) == len(u.markers) else M
            return P if len(ys) == 2 and u.center in ys else M

        # bottom-up: the parent-side extremity of every non-root node
        for u in reversed(order):
            if u == rho:
                continue
            z = parent[u]
            if u[0] == "L":
                away[t.opp[z]] = P
                continue
            ys = Y[u]
            others_ok = all(away[y] == P for y in ys if y != z)
            if u[0] == "D":
                st = toward_deg(t.node[z], ys, z, others_ok)  # type: ignore[arg-type]
            else:
                st = M
                if others_ok and z in _crossers(cycle(u), set(ys), [z]):
                    st = P
            away[t.opp[z]] = st
        # top-down: the child-side extremities
        boundary: dict[tuple, list[int]] = {}
        nonp: dict[tuple, int] = {}
        for u in order:
            if u[0] == "L":
                continue
            ys = Y[u]
            bad = [y for y in ys if away[y] != P]
            nonp[u] = len(bad)
            kids = [y for y in ys if y != parent[u]]
            if len(bad) >= 2:
                for y in kids:
                    away[t.opp[y]] = M
                continue
            if u[0] == "D":
                node = t.node[ys[0]]
                for y in kids:
                    ok = not bad or bad == [y]
                    away[t.opp[y]] = toward_deg(node, ys, y, ok)  # type: ignore[arg-type]
                if not bad and len(node.markers) == len(ys) + 1:  # type: ignore[union-attr]
                    if node.kind == CLIQUE or node.center not in ys:  # type: ignore[union-attr]
                        for m in node.markers:  # type: ignore[union-attr]
                            self.work += 1
                            if m not in set(ys):
                                boundary[u] = [m]
                                break
            else:
                cands = [y for y in kids if not bad or bad == [y]]
                yset = set(ys)
                if not bad:
                    cands += [c for c in set(cycle(u)) if c not in yset]
                hits = _crossers(cycle(u), yset, cands) if cands else set()
                self.work += len(cycle(u)) if cands else 0
                for y in kids:
                    away[t.opp[y]] = P if y in hits else M
                if not bad:
                    bnd = [c for c in hits if c not in yset]
                    if bnd:
                        boundary[u] = bnd
        return away, Y, nonp, boundary, parent

    # -- step 3: update ------------------------------------------------------

    def _update(self, sub: _Sub, sleaves: set[int], x: int, info: dict) -> None:
        t = self.tree
        away, Y, nonp, boundary, parent = self._mark(sub, sleaves)
        edges = []
        for u, lst in sub.adj.items():
            for mu, w, mw in lst:
                if mu < mw:
                    edges.append((mu, mw))
        mixed = [(a, b) for a, b in edges if away[a] == M and away[b] == M]
        if mixed:
            info["case"] = "4"
            self._case4(sub, away, Y, mixed, x, info)
            return
        inner = [u for u in sub.adj if u[0] != "L"]
        # case 1a: all-perfect clique
        for u in inner:
            if u[0] == "D":
                node = t.node[Y[u][0]]
                if node.kind == CLIQUE and nonp[u] == 0 and len(node.markers) == len(Y[u]):  # type: ignore[union-attr]
                    info["case"] = "1a"
                    t.add_to_deg(node, x)  # type: ignore[arg-type]
                    return
        # case 1b: a star outside T(S) whose perfect centre faces it
        pe = [(u, z) for u, zs in boundary.items() for z in zs]
        for u, z in pe:
            o = t.opp[z]
            if t.kind[o] == DEG and t.node[o].kind == STAR and t.node[o].center == o:  # type: ignore[union-attr]
                info["case"] = "1b"
                t.add_to_deg(t.node[o], x)  # type: ignore[arg-type]
                return
        hybrid = [
            u for u in inner
            if nonp[u] == 0 and u not in boundary and all(away[t.opp[y]] == M for y in Y[u])
        ]
        for u in hybrid:
            if u[0] == "P":
                info["case"] = "1c"
                ys = set(Y[u])
                f = t.arena.find_factor(ys, Y[u][0])
                if f is None:
                    raise Rejection("consecutivity", "perfect chords of a prime node not consecutive")
                t.add_chord(f, x)
                return
        pp = [(a, b) for a, b in edges if away[a] == P and away[b] == P]
        if pp or pe:
            if self.check and len(pp) + len(pe) != 1:
                raise InternalError(f"case 2 edge not unique: pp={pp} pe={pe}")
            if pp:
                info["case"] = "2pp"
                t.subdivide(pp[0][0], CLIQUE, False, x)
            else:
                info["case"] = "2pe"
                t.subdivide(pe[0][1], STAR, True, x)
            return
        for u in hybrid:
            info["case"] = "3"
            node = t.node[Y[u][0]]
            pstar = [y for y in Y[u] if y != node.center]  # type: ignore[union-attr]
            w, qa, qb = t.node_split(node, pstar)  # type: ignore[arg-type]
            center_perfect = node.kind == STAR and node.center in set(Y[u])  # type: ignore[union-attr]
            if center_perfect:
                t.subdivide(qa, CLIQUE, False, x)
            else:
                t.subdivide(qa, STAR, True, x)
            return
        raise InternalError("marks match no update case")

    def _case4(self, sub: _Sub, away, Y, mixed, x: int, info: dict) -> None:
        t = self.tree
        # nodes of the fully mixed subtree
        mnodes: dict[tuple, list[int]] = {}
        holder = {}
        for u, lst in sub.adj.items():
            for mu, _, _ in lst:
                holder[mu] = u
        for a, b in mixed:
            mnodes.setdefault(holder[a], []).append(a)
            mnodes.setdefault(holder[b], []).append(b)
        info["d"] = sum(u[0] == "D" for u in mnodes)
        info["p"] = sum(u[0] == "P" for u in mnodes)
        for u, mx in mnodes.items():
            if len(mx) > 2:
                raise Rejection("consecutivity", f"node with {len(mx)} mixed markers")
        # clean and lay out the degenerate ones, collect every node's factor
        members: dict[tuple, set[int]] = {}
        mixed_of: dict[tuple, list[int]] = {}
        state: dict[int, str] = dict(away)
        for u, mx in mnodes.items():
            mixed_of[u] = mx
            if u[0] == "P":
                members[u] = set(Y[u])
                continue
            node = t.node[mx[0]]
            ys = Y[u]
            pstar = [y for y in ys if away[y] == P and y != node.center]  # type: ignore[union-attr]
            if len(pstar) >= 2 and len(node.markers) - len(pstar) >= 2:  # type: ignore[union-attr]
                _, _, qb = t.node_split(node, pstar)  # type: ignore[arg-type]
                state[qb] = P
                ys = [y for y in ys if y not in set(pstar)] + [qb]
            nonE = [y for y in ys if not (state[y] == P and y == node.center)]  # type: ignore[union-attr]
            n_estar = len(node.markers) - len(nonE)  # type: ignore[union-attr]
            if n_estar >= 2 and len(nonE) >= 2:
                center = node.center  # type: ignore[union-attr]
                cstate = state.get(center, E) if node.kind == STAR else E  # type: ignore[union-attr]
                center_stays = node.kind == STAR and center not in set(nonE)  # type: ignore[union-attr]
                node, qa, _ = t.node_split(node, nonE)  # type: ignore[arg-type]
                state[qa] = cstate if center_stays else E
            ms = sorted(node.markers)  # type: ignore[union-attr]
            st = tuple(state.get(m, E) for m in ms)
            ci = ms.index(node.center) if node.kind == STAR else -1  # type: ignore[union-attr]
            lay = _small_layout(node.kind, st, ci)  # type: ignore[union-attr]
            self.work += len(ms)
            if lay is None:
                raise Rejection("consecutivity", "degenerate node admits no layout")
            info["dsum"] += len(ms) - 2
            t.deg_to_chords(node, [ms[i] for i in lay])  # type: ignore[arg-type]
            members[u] = {m for m, s in zip(ms, st) if s != E}
        # factors with the mixed chords as bookends
        ends: dict[int, tuple[int, int]] = {}
        perfect: set[int] = set()
        for u, mem in members.items():
            mx = mixed_of[u]
            f = t.arena.find_factor(mem, mx[0], mx)
            if f is None:
                raise Rejection("consecutivity", "mixed subtree node not consecutive")
            for m in mx:
                ends[m] = f.end_for(m)
            perfect.update(mem - set(mx))
        for a, b in mixed:
            ea, sa = ends[a]
            eb, sb = ends[b]
            t.join_chords(ea, sa, eb, sb)
        if not perfect:
            raise InternalError("contracted node has no perfect marker")
        f = t.arena.find_factor(perfect, next(iter(perfect)))
        if f is None:
            raise Rejection("join", "joined node lost consecutivity")
        t.add_chord(f, x)


# ---------------------------------------------------------------------------


def recognize(g: Graph, *, check: bool = False, keep_trees: bool = False) -> Verdict:
    """Decide whether ``g`` is a circle graph; certificate on success.

    Components are handled independently and their diagrams concatenated.
    ``check`` runs the structural validator after every insertion.
    """
    v = Verdict(accepted=True, n=g.n, m=g.m)
    words: list[int] = []
    kinds = {"clique": 0, "star": 0, "prime": 0}
    for comp in connected_components(g):
        if len(comp) == 1:
            words += [comp[0], comp[0]]
            continue
        if len(comp) == 2:
            a, b = comp
            words += [a, b, a, b]
            continue
        h, remap = induced_subgraph(g, comp)
        back = comp  # remap is sorted order, so new id i is comp[i]
        order = list(lexbfs(h, 0, check_connected=False).order)
        rec = Recognizer(h, order, check=check)
        try:
            rec.run()
        except Rejection as exc:
            v.accepted = False
            v.stage = exc.stage
            v.detail = exc.detail
            v.witness = back[rec.current]
            v.work += rec.total_work()
            v.insertions += rec.stats
            return v
        v.work += rec.total_work()
        v.phi += rec.tree.phi
        for k, c in rec.tree.stats().items():
            if k in kinds:
                kinds[k] += c
        d = rec.tree.extract_diagram()
        words += [back[a] for a in d.word]
        v.work += 2 * len(comp)
        v.insertions += rec.stats
        if keep_trees:
            v.trees.append(Component(comp, rec.tree))
    v.nodes_by_kind = kinds
    v.certificate = ChordDiagram(words)
    return v


def is_circle(g: Graph) -> bool:
    return recognize(g).accepted
