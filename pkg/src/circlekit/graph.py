"""Simple undirected graphs on dense integer ids, plus edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class InputError(ValueError):
    """Malformed graph input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(default=0)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop on {u}")
            if v in nbrs[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), m)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format.

    Lines starting with ``#`` and blank lines are ignored. Errors carry the
    offending line number.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"not UTF-8: {exc}") from None
    header: tuple[int, int] | None = None
    n = m = 0
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise InputError("negative header value", lineno)
            header = (a, b)
            n, m = header
            continue
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"vertex id out of range [0, {n})", lineno)
        if a == b:
            raise InputError(f"self-loop on {a}", lineno)
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise InputError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise InputError("missing 'n m' header")
    if len(edges) != m:
        raise InputError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest member."""
    comp = [-1] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if comp[s] != -1:
            continue
        cid = len(out)
        comp[s] = cid
        stack = [s]
        members = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    stack.append(w)
                    members.append(w)
        members.sort()
        out.append(members)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``; new ids follow the sorted order of ``s``.

    Returns the graph and the old -> new id map.
    """
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise InputError(f"unknown vertex {v}")
    remap = {v: i for i, v in enumerate(verts)}
    edges = [
        (remap[u], remap[w])
        for u in verts
        for w in g.adj[u]
        if u < w and w in remap
    ]
    return Graph.from_edges(len(verts), edges), remap


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def join_graphs(
    g: Graph, x: int, h: Graph, y: int
) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Graph join ``(g, x) ⊗ (h, y)``.

    Vertices of ``g`` minus ``x`` come first (in order), then those of ``h``
    minus ``y``. Returns the joined graph and the id maps of both sides.
    """
    left = {v: i for i, v in enumerate(v for v in range(g.n) if v != x)}
    off = len(left)
    right = {v: off + i for i, v in enumerate(v for v in range(h.n) if v != y)}
    edges = [(left[u], left[v]) for u, v in g.edges() if x not in (u, v)]
    edges += [(right[u], right[v]) for u, v in h.edges() if y not in (u, v)]
    edges += [(left[u], right[v]) for u in g.adj[x] for v in h.adj[y]]
    return Graph.from_edges(off + len(right), edges), left, right
