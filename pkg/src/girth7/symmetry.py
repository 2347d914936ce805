"""Automorphism groups, orbits, canonical labeling and isomorphism.

Everything rests on one individualization-refinement engine.  Colour
refinement replaces each vertex colour by the rank of the key
``(colour, sorted multiset of (edge colour, neighbour colour))`` among all
keys, so colours are canonical and comparable between graphs.  The search
always individualizes the least vertex of the first largest non-trivial cell.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Mapping, Sequence

from .graph import SimpleGraph
from .perms import Perm, PermutationGroup, compose, identity, inverse, orbit_of, orbit_partition

Colors = list[int]


def _ranks(values: Sequence[Hashable]) -> list[int]:
    index = {v: i for i, v in enumerate(sorted(set(values)))}
    return [index[v] for v in values]


class _Engine:
    def __init__(self, g: SimpleGraph, vertex_colors: Sequence[int] | None, edge_colors: Sequence[int] | None):
        self.g = g
        self.n = g.n
        if edge_colors is None:
            self.ecol = None
            self.adj = [tuple((w, 0) for w in g.adjacency[v]) for v in range(g.n)]
        else:
            self.ecol = tuple(edge_colors)
            self.adj = [tuple((w, self.ecol[g.edge_id(v, w)]) for w in g.adjacency[v]) for v in range(g.n)]
        self.vcol = tuple(vertex_colors) if vertex_colors is not None else (0,) * g.n

    def refine(self, colors: Colors) -> tuple[Colors, tuple]:
        adj = self.adj
        trace = []
        k = len(set(colors))
        while True:
            keys = [(colors[v], tuple(sorted((ec, colors[w]) for w, ec in adj[v]))) for v in range(self.n)]
            counts = Counter(keys)
            distinct = sorted(counts)
            rank = {key: i for i, key in enumerate(distinct)}
            trace.append(tuple((key, counts[key]) for key in distinct))
            new = [rank[key] for key in keys]
            if len(distinct) == k:
                return new, tuple(trace)
            colors, k = new, len(distinct)

    def root(self) -> tuple[Colors, tuple]:
        return self.refine(_ranks(self.vcol))

    def individualize(self, colors: Colors, v: int) -> tuple[Colors, tuple]:
        return self.refine(_ranks([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]))

    def target_cell(self, colors: Colors) -> tuple[int, list[int]] | None:
        sizes = Counter(colors)
        best = max(sizes.values(), default=1)
        if best <= 1:
            return None
        color = min(c for c, s in sizes.items() if s == best)
        return color, [v for v in range(self.n) if colors[v] == color]

    def maps_onto(self, other: "_Engine", p: Perm) -> bool:
        """Whether ``p`` is a colour-preserving isomorphism from self.g onto other.g."""
        if any(self.vcol[v] != other.vcol[p[v]] for v in range(self.n)):
            return False
        h = other.g
        for i, (u, v) in enumerate(self.g.edges):
            a, b = p[u], p[v]
            if not h.has_edge(a, b):
                return False
            if self.ecol is not None and self.ecol[i] != other.ecol[h.edge_id(a, b)]:
                return False
        return True


@dataclass
class _PathNode:
    colors: Colors
    cell_color: int
    cell: list[int]
    vertex: int
    trace: tuple  # trace after individualizing ``vertex``


def _base_path(eng: _Engine, colors: Colors) -> tuple[list[_PathNode], Colors]:
    path = []
    while (target := eng.target_cell(colors)) is not None:
        color, cell = target
        nxt, trace = eng.individualize(colors, cell[0])
        path.append(_PathNode(colors, color, cell, cell[0], trace))
        colors = nxt
    return path, colors


def _extend(left: _Engine, right: _Engine, path: list[_PathNode], leaf: Colors, level: int, colors: Colors) -> Perm | None:
    """Search below ``colors`` (a right-hand node at ``level``) for a leaf matching the left path."""
    if level == len(path):
        by_color = [0] * right.n
        for v, c in enumerate(colors):
            by_color[c] = v
        p = tuple(by_color[leaf[u]] for u in range(left.n))
        return p if left.maps_onto(right, p) else None
    node = path[level]
    for v in range(right.n):
        if colors[v] != node.cell_color:
            continue
        nxt, trace = right.individualize(colors, v)
        if trace != node.trace:
            continue
        found = _extend(left, right, path, leaf, level + 1, nxt)
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class SearchResult:
    generators: tuple[Perm, ...]
    base: tuple[int, ...]
    orbit_sizes: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for s in self.orbit_sizes:
            out *= s
        return out


def _search_automorphisms(eng: _Engine) -> SearchResult:
    root, _ = eng.root()
    path, leaf = _base_path(eng, root)
    gens: list[Perm] = []
    sizes: list[int] = []
    for i in range(len(path) - 1, -1, -1):
        node = path[i]
        orbit = set(orbit_of(node.vertex, gens))
        failed: set[int] = set()
        for v in node.cell:
            if v in orbit or v in failed:
                continue
            nxt, trace = eng.individualize(node.colors, v)
            found = None
            if trace == node.trace:
                found = _extend(eng, eng, path, leaf, i + 1, nxt)
            if found is None:
                failed.update(orbit_of(v, gens))
            else:
                gens.append(found)
                orbit = set(orbit_of(node.vertex, gens))
        sizes.append(len(orbit))
    sizes.reverse()
    return SearchResult(tuple(gens), tuple(n.vertex for n in path), tuple(sizes))


class AutomorphismGroup(PermutationGroup):
    """Colour-preserving automorphism group bound to its graph."""

    def __init__(self, graph: SimpleGraph, result: SearchResult, vertex_colors=None, edge_colors=None):
        super().__init__(graph.n, result.generators)
        self.graph = graph
        self.search = result
        self.vertex_colors = vertex_colors
        self.edge_colors = edge_colors

    def order(self) -> int:
        return self.search.order

    def chain_order(self) -> int:
        """Order recomputed independently by Schreier-Sims on the generators."""
        return super().order()


@lru_cache(maxsize=256)
def _cached_group(g: SimpleGraph, vcol: tuple | None, ecol: tuple | None) -> AutomorphismGroup:
    result = _search_automorphisms(_Engine(g, vcol, ecol))
    return AutomorphismGroup(g, result, vcol, ecol)


def automorphism_group(
    g: SimpleGraph, vertex_colors: Sequence[int] | None = None, edge_colors: Sequence[int] | None = None
) -> AutomorphismGroup:
    """Generators of the full group of automorphisms preserving the optional colourings.

    ``vertex_colors[v]`` colours vertex ``v``; ``edge_colors[e]`` colours edge id ``e``.
    """
    vcol = tuple(vertex_colors) if vertex_colors is not None else None
    ecol = tuple(edge_colors) if edge_colors is not None else None
    return _cached_group(g, vcol, ecol)


def is_automorphism(g: SimpleGraph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges)


# -- orbits on incidence objects ------------------------------------------


def _edge_action(g: SimpleGraph, p: Perm) -> list[int]:
    return [g.edge_id(p[u], p[v]) for u, v in g.edges]


def _arc_action(g: SimpleGraph, p: Perm) -> list[int]:
    return [g.arc_id(p[g.arc_begin(a)], p[g.arc_end(a)]) for a in g.arcs()]


def two_arcs(g: SimpleGraph) -> list[tuple[int, int, int]]:
    """All 2-arcs ``(u, v, w)`` with ``u ~ v ~ w`` and ``u != w``, sorted."""
    return sorted((u, v, w) for v in range(g.n) for u in g.adjacency[v] for w in g.adjacency[v] if u != w)


def vertex_orbits(group: AutomorphismGroup) -> list[list[int]]:
    return group.orbits()


def edge_orbits(group: AutomorphismGroup) -> list[list[int]]:
    g = group.graph
    return group.induced_orbits(g.m, lambda p: _edge_action(g, p))


def arc_orbits(group: AutomorphismGroup) -> list[list[int]]:
    g = group.graph
    return group.induced_orbits(2 * g.m, lambda p: _arc_action(g, p))


def two_arc_orbits(group: AutomorphismGroup) -> list[list[tuple[int, int, int]]]:
    g = group.graph
    arcs2 = two_arcs(g)
    index = {t: i for i, t in enumerate(arcs2)}
    images = [[index[(p[u], p[v], p[w])] for u, v, w in arcs2] for p in group.generators]
    return [[arcs2[i] for i in orb] for orb in orbit_partition(len(arcs2), images)]


def is_vertex_transitive(g: SimpleGraph) -> bool:
    return len(vertex_orbits(automorphism_group(g))) <= 1


def is_edge_transitive(g: SimpleGraph) -> bool:
    return len(edge_orbits(automorphism_group(g))) <= 1


def is_arc_transitive(g: SimpleGraph) -> bool:
    return len(arc_orbits(automorphism_group(g))) <= 1


# -- canonical labeling -----------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    labeling: Perm  # labeling[v] is the canonical label of v
    edges: tuple[tuple[int, ...], ...]
    vertex_colors: tuple | None = None


def _certificate(eng: _Engine, labels: Sequence[int]) -> tuple:
    g = eng.g
    if eng.ecol is None:
        edges = sorted((min(labels[u], labels[v]), max(labels[u], labels[v])) for u, v in g.edges)
    else:
        edges = sorted(
            (min(labels[u], labels[v]), max(labels[u], labels[v]), eng.ecol[i]) for i, (u, v) in enumerate(g.edges)
        )
    return tuple(edges)


def _lex_least(group: PermutationGroup, labels: Perm) -> Perm:
    """Least ``labels o gamma`` over gamma in ``group``, compared as tuples."""
    n = group.degree
    chain = PermutationGroup(n, group.generators, base_prefix=range(n))
    base, _, trans = chain._chain
    h = identity(n)
    for b, t in zip(base, trans):
        best_point = min(t, key=lambda x: labels[h[x]])
        h = compose(h, t[best_point])
    return compose(labels, h)


def canonical_form(
    g: SimpleGraph, vertex_colors: Sequence[int] | None = None, edge_colors: Sequence[int] | None = None
) -> CanonicalForm:
    """Canonical labeling and relabeled edge list; equal for isomorphic inputs."""
    eng = _Engine(g, vertex_colors, edge_colors)
    group = automorphism_group(g, vertex_colors, edge_colors)
    stab_cache: dict[tuple[int, ...], list[list[int]]] = {}
    best: list = [None, None]

    def orbits_fixing(fixed: tuple[int, ...]) -> list[list[int]]:
        if fixed not in stab_cache:
            stab_cache[fixed] = group.stabilizer(fixed).orbits()
        return stab_cache[fixed]

    def visit(colors: Colors, fixed: tuple[int, ...]) -> None:
        target = eng.target_cell(colors)
        if target is None:
            cert = _certificate(eng, colors)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, tuple(colors)
            return
        _, cell = target
        orbit_index = {}
        for i, orb in enumerate(orbits_fixing(fixed)):
            for v in orb:
                orbit_index[v] = i
        seen = set()
        for v in cell:
            if orbit_index[v] in seen:
                continue
            seen.add(orbit_index[v])
            nxt, _ = eng.individualize(colors, v)
            visit(nxt, fixed + (v,))

    root, _ = eng.root()
    visit(root, ())
    labeling = _lex_least(group, best[1])
    vcol = None
    if vertex_colors is not None:
        inv = inverse(labeling)
        vcol = tuple(vertex_colors[inv[i]] for i in range(g.n))
    return CanonicalForm(labeling, best[0], vcol)


# -- isomorphism ----------------------------------------------------------


def are_isomorphic(
    g1: SimpleGraph,
    g2: SimpleGraph,
    vertex_colors: tuple[Sequence[int], Sequence[int]] | None = None,
    edge_colors: tuple[Sequence[int], Sequence[int]] | None = None,
) -> Perm | None:
    """An explicit isomorphism ``p`` (``p[v]`` in g2 for ``v`` in g1), or ``None``.

    Colourings, when given, are pairs ``(colours for g1, colours for g2)`` and
    must be preserved exactly.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return None
    v1, v2 = vertex_colors if vertex_colors is not None else (None, None)
    e1, e2 = edge_colors if edge_colors is not None else (None, None)
    left, right = _Engine(g1, v1, e1), _Engine(g2, v2, e2)
    if Counter(left.vcol) != Counter(right.vcol):
        return None
    if (left.ecol is None) != (right.ecol is None):
        return None
    if left.ecol is not None and Counter(left.ecol) != Counter(right.ecol):
        return None
    if g1.n == 0:
        return ()
    lroot, ltrace = left.root()
    rroot, rtrace = right.root()
    if ltrace != rtrace:
        return None
    path, leaf = _base_path(left, lroot)
    p = _extend(left, right, path, leaf, 0, rroot)
    if p is not None and not left.maps_onto(right, p):
        raise AssertionError("isomorphism search returned an invalid map")
    return p
