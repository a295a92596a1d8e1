"""Lexicographic breadth-first search by partition refinement."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_connected


@dataclass(frozen=True)
class VertexOrder:
    order: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_order(cls, order: list[int] | tuple[int, ...]) -> "VertexOrder":
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        return cls(tuple(order), tuple(pos))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


class _Cell:
    __slots__ = ("head", "tail", "prev", "next", "stamp", "child")

    def __init__(self) -> None:
        self.head = -1
        self.tail = -1
        self.prev: _Cell | None = None
        self.next: _Cell | None = None
        self.stamp = -1
        self.child: _Cell | None = None


def lexbfs(g: Graph, start: int = 0, *, check_connected: bool = True) -> VertexOrder:
    """LexBFS ordering of a connected graph, starting at ``start``.

    Ties between vertices with equal labels go to the smallest id. Runs in
    O(n + m): each class keeps its vertices as a sorted linked list, and
    refinement moves neighbours (scanned in sorted order) into a fresh class
    placed right before the class they leave.
    """
    n = g.n
    if not (0 <= start < n):
        raise ValueError(f"start vertex {start} not in graph")
    if check_connected and not is_connected(g):
        raise ValueError("lexbfs requires a connected graph")
    adj = g.adj
    nxt = [-1] * n
    prv = [-1] * n
    cell_of: list[_Cell] = [None] * n  # type: ignore[list-item]
    first = _Cell()
    for v in range(n):
        prv[v] = v - 1
        nxt[v] = v + 1 if v + 1 < n else -1
        cell_of[v] = first
    first.head, first.tail = 0, n - 1
    front: _Cell | None = first
    visited = [False] * n
    order: list[int] = []

    def unlink_vertex(v: int, c: _Cell) -> None:
        p, q = prv[v], nxt[v]
        if p != -1:
            nxt[p] = q
        else:
            c.head = q
        if q != -1:
            prv[q] = p
        else:
            c.tail = p

    def drop_cell(c: _Cell) -> None:
        nonlocal front
        if c.prev is not None:
            c.prev.next = c.next
        else:
            front = c.next
        if c.next is not None:
            c.next.prev = c.prev

    pivot = start
    step = 0
    while True:
        c = cell_of[pivot]
        unlink_vertex(pivot, c)
        if c.head == -1:
            drop_cell(c)
        visited[pivot] = True
        order.append(pivot)
        for w in adj[pivot]:
            if visited[w]:
                continue
            old = cell_of[w]
            if old.stamp != step:
                old.stamp = step
                fresh = _Cell()
                fresh.stamp = step
                fresh.prev = old.prev
                fresh.next = old
                if old.prev is not None:
                    old.prev.next = fresh
                else:
                    front = fresh
                old.prev = fresh
                old.child = fresh
            fresh = old.child  # type: ignore[assignment]
            unlink_vertex(w, old)
            if old.head == -1:
                drop_cell(old)
            prv[w] = fresh.tail
            nxt[w] = -1
            if fresh.tail != -1:
                nxt[fresh.tail] = w
            else:
                fresh.head = w
            fresh.tail = w
            cell_of[w] = fresh
        step += 1
        if front is None:
            break
        pivot = front.head
    return VertexOrder.from_order(order)


def is_lexbfs_order(g: Graph, order: list[int] | tuple[int, ...]) -> bool:
    """Four-point check: for a < b < c with a ~ c and a !~ b there is
    d < a with d ~ b and d !~ c. Test-suite helper, O(n^3)."""
    n = len(order)
    if sorted(order) != list(range(g.n)):
        return False
    nb = [set(a) for a in g.adj]
    for ia in range(n):
        a = order[ia]
        for ib in range(ia + 1, n):
            b = order[ib]
            for ic in range(ib + 1, n):
                c = order[ic]
                if a in nb[c] and b not in nb[a]:
                    if not any(
                        order[idd] in nb[b] and order[idd] not in nb[c]
                        for idd in range(ia)
                    ):
                        return False
    return True


def slice_of(g: Graph, sigma: VertexOrder, y: int) -> list[int]:
    """The slice S(y): the longest factor of sigma starting at y such that
    every earlier vertex is adjacent to y iff adjacent to all of the factor."""
    order = sigma.order
    i = sigma.position[y]
    nb = [set(a) for a in g.adj]
    earlier = order[:i]
    best = i
    for j in range(i, len(order)):
        factor = order[i : j + 1]
        if all((y in nb[x]) == all(z in nb[x] for z in factor) for x in earlier):
            best = j
    return list(order[i : best + 1])
