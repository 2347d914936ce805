"""Exact graph structures: simple graphs, multigraphs and their arcs.

Vertices are dense integers ``0..n-1``.  Edges of a :class:`SimpleGraph` are
enumerated canonically as sorted ``(u, v)`` pairs with ``u < v``; the edge id
is the position in that enumeration.  Arcs use the encoding
``arc = 2 * edge_id + direction`` where direction 0 begins at the first
endpoint of the edge and direction 1 at the second.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import LoopRejected, VertexOutOfRange

Edge = tuple[int, int]


class Arc(NamedTuple):
    edge: int
    direction: int

    @property
    def id(self) -> int:
        return 2 * self.edge + self.direction

    @classmethod
    def from_id(cls, arc_id: int) -> "Arc":
        return cls(arc_id >> 1, arc_id & 1)


@dataclass(frozen=True, eq=True)
class SimpleGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def incident_edges(self, v: int) -> list[int]:
        return [self.edge_id(v, u) for u in self.adjacency[v]]

    # arcs
    def arc_begin(self, arc_id: int) -> int:
        return self.edges[arc_id >> 1][arc_id & 1]

    def arc_end(self, arc_id: int) -> int:
        return self.edges[arc_id >> 1][1 - (arc_id & 1)]

    def arcs(self) -> range:
        return range(2 * self.m)

    def arc_id(self, u: int, v: int) -> int:
        """Id of the arc beginning at ``u`` and ending at ``v``."""
        return 2 * self.edge_id(u, v) + (0 if u < v else 1)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph whose edges are ``(perm[u], perm[v])``."""
        return new_graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


def new_graph(n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
    """Build a simple graph; repeated pairs collapse to a single edge."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return SimpleGraph(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class MultiGraph:
    """Loopless multigraph; edge ``i`` is ``edges[i]``."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if u == v:
                raise LoopRejected(f"loop at vertex {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def arcs_at(self) -> tuple[tuple[int, ...], ...]:
        """Arc ids beginning at each vertex, in increasing order."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            out[u].append(2 * i)
            out[v].append(2 * i + 1)
        return tuple(tuple(a) for a in out)

    def degree(self, v: int) -> int:
        return len(self.arcs_at[v])

    def arc_begin(self, arc_id: int) -> int:
        return self.edges[arc_id >> 1][arc_id & 1]

    def arc_end(self, arc_id: int) -> int:
        return self.edges[arc_id >> 1][1 - (arc_id & 1)]

    @classmethod
    def from_simple(cls, g: SimpleGraph) -> "MultiGraph":
        return cls(g.n, g.edges)


def degree_sequence(g: SimpleGraph | MultiGraph) -> list[int]:
    return sorted(g.degree(v) for v in range(g.n))


def is_regular(g: SimpleGraph | MultiGraph, k: int) -> bool:
    return all(g.degree(v) == k for v in range(g.n))


def components(g: SimpleGraph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def bfs_distances(g: SimpleGraph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return new_graph(offset, edges)


def cycle_graph(n: int) -> SimpleGraph:
    return new_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return new_graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> SimpleGraph:
    return new_graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
