"""Girth, girth cycles and the counting invariants built on them.

A cycle is stored as a tuple of vertices in canonical form: it starts at its
least vertex and, of the two directions, uses the one whose second vertex is
smaller.  That is the lexicographically least rotation/reflection.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    AcyclicGraph,
    BudgetExceeded,
    EdgeOutOfRange,
    GirthNot7,
    NonCubicVertex,
    NonHomogeneous,
    NonUniformOrbit,
    TooSmall,
)
from .graph import SimpleGraph, bfs_distances

Cycle = tuple[int, ...]
Signature = tuple[int, ...]

DEFAULT_BUDGET = 10**8


def canonical_cycle(vertices: Sequence[int]) -> Cycle:
    k = len(vertices)
    i = min(range(k), key=vertices.__getitem__)
    fwd = tuple(vertices[(i + j) % k] for j in range(k))
    bwd = (fwd[0],) + fwd[:0:-1]
    return min(fwd, bwd)


def cycle_edges(cycle: Cycle) -> Iterator[tuple[int, int]]:
    k = len(cycle)
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        yield (u, v) if u < v else (v, u)


def girth(g: SimpleGraph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    adj = g.adjacency
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best is not None and 2 * du >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def girth_cycles(g: SimpleGraph) -> tuple[Cycle, ...]:
    """All shortest cycles of ``g``, canonicalized and sorted."""
    length = girth(g)
    if length is None:
        raise AcyclicGraph("graph has no cycles")
    return cycles_of_length(g, length)


def cycles_of_length(g: SimpleGraph, length: int) -> tuple[Cycle, ...]:
    adj = g.adjacency
    found: list[Cycle] = []
    for root in range(g.n):
        path = [root]
        on_path = {root}

        def extend(u: int) -> None:
            if len(path) == length:
                if root in adj[u] and path[1] < path[-1]:
                    found.append(tuple(path))
                return
            for w in adj[u]:
                if w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(root)
    return tuple(sorted(found))


def edge_epsilons(g: SimpleGraph, cycles: Iterable[Cycle]) -> list[int]:
    """Number of given cycles through each edge, indexed by edge id."""
    eps = [0] * g.m
    index = g.edge_index
    for c in cycles:
        for e in cycle_edges(c):
            eps[index[e]] += 1
    return eps


def epsilon(g: SimpleGraph, cycles: Iterable[Cycle], e: int) -> int:
    if not 0 <= e < g.m:
        raise EdgeOutOfRange(f"edge id {e} outside 0..{g.m - 1}")
    u, v = g.edges[e]
    return sum(1 for c in cycles if (u, v) in set(cycle_edges(c)))


def vertex_signature(g: SimpleGraph, cycles: Sequence[Cycle], v: int, eps: list[int] | None = None) -> Signature:
    if g.degree(v) != 3:
        raise NonCubicVertex(f"vertex {v} has degree {g.degree(v)}")
    if eps is None:
        eps = edge_epsilons(g, cycles)
    return tuple(sorted(eps[e] for e in g.incident_edges(v)))


def signatures(g: SimpleGraph, cycles: Sequence[Cycle] | None = None) -> list[Signature]:
    if cycles is None:
        cycles = girth_cycles(g)
    eps = edge_epsilons(g, cycles)
    return [vertex_signature(g, cycles, v, eps) for v in range(g.n)]


def girth_regular_signature(g: SimpleGraph, cycles: Sequence[Cycle] | None = None) -> Signature:
    """The common vertex signature; raises NotGirthRegular with a witness pair otherwise."""
    from .errors import NotGirthRegular

    sigs = signatures(g, cycles)
    for v, s in enumerate(sigs):
        if s != sigs[0]:
            raise NotGirthRegular(0, v, sigs[0], s)
    return sigs[0]


def is_girth_regular(g: SimpleGraph) -> bool:
    sigs = signatures(g)
    return all(s == sigs[0] for s in sigs)


def cycles_through(cycles: Sequence[Cycle], n: int) -> list[list[int]]:
    """Indices of the cycles containing each vertex."""
    through: list[list[int]] = [[] for _ in range(n)]
    for i, c in enumerate(cycles):
        for v in c:
            through[v].append(i)
    return through


def r_multiset(g: SimpleGraph, cycles: Sequence[Cycle], edge_subset: Iterable[int], v: int) -> tuple[int, ...]:
    """Sorted multiset, over cycles through ``v``, of how many of their edges lie in ``edge_subset``."""
    subset = {g.edges[e] for e in edge_subset}
    counts = [sum(1 for e in cycle_edges(c) if e in subset) for c in cycles if v in c]
    return tuple(sorted(counts))


def orbit_sum_identity(g: SimpleGraph, cycles: Sequence[Cycle], orbit: Iterable[int]) -> tuple[int, Fraction]:
    """Both sides of ``sum r(O) = |O| * eps(O) * girth / |V|`` for an edge set ``O``.

    The edge set must have a single epsilon value and every vertex must see the
    same r-multiset; both are checked.
    """
    orbit = sorted(set(orbit))
    eps = edge_epsilons(g, cycles)
    values = {eps[e] for e in orbit}
    if len(values) != 1:
        raise NonUniformOrbit(f"epsilon takes values {sorted(values)} on the edge set")
    subset = {g.edges[e] for e in orbit}
    per_cycle = [sum(1 for e in cycle_edges(c) if e in subset) for c in cycles]
    through = cycles_through(cycles, g.n)
    multisets = {tuple(sorted(per_cycle[i] for i in through[v])) for v in range(g.n)}
    if len(multisets) != 1:
        raise NonHomogeneous(f"{len(multisets)} distinct r-multisets across vertices")
    lhs = sum(next(iter(multisets)))
    rhs = Fraction(len(orbit) * values.pop() * len(cycles[0]), g.n)
    return lhs, rhs


class BallCut(NamedTuple):
    size: int  # |U|, vertices within distance 3
    boundary: int  # |delta(U)|
    sphere_edges: int  # edges with both ends at distance exactly 3
    signature_sum: int  # a + b + c at the centre

    @property
    def holds(self) -> bool:
        return 36 == self.boundary + self.signature_sum + 12 and 2 * self.sphere_edges == self.signature_sum


def ball_cut_identity(g: SimpleGraph, v: int, cycles: Sequence[Cycle] | None = None) -> BallCut:
    if any(g.degree(u) != 3 for u in range(g.n)):
        raise NonCubicVertex("graph is not cubic")
    gi = girth(g)
    if gi != 7:
        raise GirthNot7(gi)
    if g.n < 28:
        raise TooSmall(f"{g.n} vertices, need at least 28")
    dist = bfs_distances(g, v)
    ball = {u for u in range(g.n) if 0 <= dist[u] <= 3}
    boundary = sum(1 for a, b in g.edges if (a in ball) != (b in ball))
    sphere = sum(1 for a, b in g.edges if dist[a] == 3 and dist[b] == 3)
    if cycles is None:
        cycles = girth_cycles(g)
    sig = vertex_signature(g, cycles, v)
    return BallCut(len(ball), boundary, sphere, sum(sig))


# ---------------------------------------------------------------------------
# cycle-separating edge cuts


def _colex(m: int, j: int) -> Iterator[tuple[int, ...]]:
    """j-subsets of range(m) in colexicographic order."""
    if j == 0:
        yield ()
        return
    if j > m:
        return
    c = list(range(j))
    while True:
        yield tuple(c)
        i = 0
        while i < j - 1 and c[i] + 1 == c[i + 1]:
            i += 1
        if i == j - 1 and c[i] + 1 == m:
            return
        c[i] += 1
        for t in range(i):
            c[t] = t


def _separates_cycles(n: int, nbr: list[list[tuple[int, int]]], removed: bytearray) -> bool:
    comp = [-1] * n
    label = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = label
        stack = [s]
        while stack:
            u = stack.pop()
            for w, e in nbr[u]:
                if not removed[e] and comp[w] < 0:
                    comp[w] = label
                    stack.append(w)
        label += 1
        if label == 1 and s == 0:
            if all(c >= 0 for c in comp):
                return False
    # a component is cyclic iff it has at least as many edges as vertices
    verts = [0] * label
    halfedges = [0] * label
    for u in range(n):
        verts[comp[u]] += 1
        halfedges[comp[u]] += sum(1 for _, e in nbr[u] if not removed[e])
    cyclic = sum(1 for c in range(label) if halfedges[c] >= 2 * verts[c])
    return cyclic >= 2


def _scan(g: SimpleGraph, size: int, tops: Sequence[int]) -> tuple[int, ...] | None:
    """Colex-first cycle-separating set of ``size`` edges whose largest id is in ``tops``."""
    nbr = [[(w, g.edge_id(u, w)) for w in g.adjacency[u]] for u in range(g.n)]
    removed = bytearray(g.m)
    if size == 0:
        return () if _separates_cycles(g.n, nbr, removed) else None
    for top in sorted(tops):
        removed[top] = 1
        for rest in _colex(top, size - 1):
            for e in rest:
                removed[e] = 1
            hit = _separates_cycles(g.n, nbr, removed)
            for e in rest:
                removed[e] = 0
            if hit:
                return rest + (top,)
        removed[top] = 0
    return None


def cut_budget() -> int:
    raw = os.environ.get("G7_BUDGET")
    return int(float(raw)) if raw else DEFAULT_BUDGET


def has_cycle_separating_cut_below(
    g: SimpleGraph, k: int, budget: int | None = None, threads: int = 1
) -> tuple[int, ...] | None:
    """Smallest, then colex-first, edge set of size < k whose removal leaves two cyclic components.

    Returns the edge ids of the witness, or ``None`` when every cycle-separating
    set has at least ``k`` edges.
    """
    if budget is None:
        budget = cut_budget()
    total = sum(comb(g.m, j) for j in range(max(k, 0)))
    if total > budget:
        raise BudgetExceeded(f"{total} subsets to scan exceeds budget {budget}")
    for size in range(k):
        if size == 0 or threads <= 1:
            hit = _scan(g, size, range(size - 1, g.m) if size else ())
        else:
            parts = [range(size - 1 + r, g.m, threads) for r in range(threads)]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                hits = [h for h in pool.map(_scan, [g] * threads, [size] * threads, parts) if h]
            hit = min(hits, key=lambda c: c[::-1]) if hits else None
        if hit is not None:
            return hit
    return None


def is_cycle_separating(g: SimpleGraph, edge_ids: Iterable[int]) -> bool:
    removed = bytearray(g.m)
    for e in edge_ids:
        removed[e] = 1
    nbr = [[(w, g.edge_id(u, w)) for w in g.adjacency[u]] for u in range(g.n)]
    return _separates_cycles(g.n, nbr, removed)
