"""Independent reference implementations used to cross-check the package.

Nothing here reuses the package's algorithms: cycles and girth come from
networkx, automorphisms from plain backtracking without refinement, group
orders from closing the generators under multiplication.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

import networkx as nx

from girth7.graph import SimpleGraph


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_girth(g: SimpleGraph) -> float:
    return nx.girth(to_nx(g))


def nx_cycles(g: SimpleGraph, length: int) -> set[frozenset]:
    """Edge sets of all cycles of exactly ``length``, found by networkx."""
    out = set()
    for cyc in nx.simple_cycles(to_nx(g), length_bound=length):
        if len(cyc) == length:
            out.add(frozenset(frozenset((cyc[i], cyc[(i + 1) % length])) for i in range(length)))
    return out


def brute_automorphism_count(g: SimpleGraph) -> int:
    """Count automorphisms by extending partial maps vertex by vertex (BFS order)."""
    order = list(nx.bfs_tree(to_nx(g), 0)) if g.n else []
    order += [v for v in range(g.n) if v not in set(order)]
    adj = [set(a) for a in g.adjacency]
    image: dict[int, int] = {}
    used: set[int] = set()
    count = 0

    def extend(i: int) -> None:
        nonlocal count
        if i == len(order):
            count += 1
            return
        v = order[i]
        for w in range(g.n):
            if w in used or len(adj[w]) != len(adj[v]):
                continue
            if all((image[u] in adj[w]) == (u in adj[v]) for u in image):
                image[v] = w
                used.add(w)
                extend(i + 1)
                del image[v]
                used.discard(w)

    extend(0)
    return count


def closure_order(generators, degree: int) -> int:
    """Size of the group generated by permutations, by breadth-first closure."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in generators:
                q = tuple(s[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def condition_witnesses(ell: int, eps: int) -> list[tuple[int, ...]]:
    """All multisets satisfying the r-number condition, by direct enumeration."""
    out = []
    for ms in combinations_with_replacement(range(4), ell):
        if 2 * sum(ms) != 7 * eps:
            continue
        if ms.count(0) > 1:
            continue
        if any(0 < ms.count(v) < 4 for v in (1, 2, 3)):
            continue
        out.append(ms)
    return out


def brute_min_cycle_cut(g: SimpleGraph, below: int) -> int | None:
    """Size of the smallest cycle-separating edge cut with fewer than ``below`` edges."""
    h = to_nx(g)
    edges = list(h.edges)
    for size in range(below):
        for cut in combinations(edges, size):
            r = h.copy()
            r.remove_edges_from(cut)
            cyclic = 0
            for comp in nx.connected_components(r):
                sub = r.subgraph(comp)
                if sub.number_of_edges() >= sub.number_of_nodes():
                    cyclic += 1
            if cyclic >= 2:
                return size
    return None


def ball(g: SimpleGraph, v: int, radius: int) -> set[int]:
    return set(nx.single_source_shortest_path_length(to_nx(g), v, cutoff=radius))
