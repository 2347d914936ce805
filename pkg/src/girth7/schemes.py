"""Dihedral schemes, truncations and recovering the base of a truncation.

A scheme assigns each vertex of a multigraph a cyclic order of the arcs
beginning there.  Orders are stored normalized to the lexicographically least
rotation or reflection, so two schemes are equal exactly when they agree up
to rotation and reflection at every vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import CoverageFailure, DegenerateDegree, InvalidScheme, NonCubicVertex, WrongSignature
from .graph import MultiGraph, SimpleGraph, new_graph


def _dihedral_min(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    k = len(seq)
    if k == 0:
        return seq
    candidates = []
    for s in (seq, seq[::-1]):
        for r in range(k):
            candidates.append(s[r:] + s[:r])
    return min(candidates)


@dataclass(frozen=True)
class DihedralScheme:
    rotation: tuple[tuple[int, ...], ...]

    @classmethod
    def for_base(cls, base: MultiGraph, rotation: Sequence[Sequence[int]]) -> "DihedralScheme":
        if len(rotation) != base.n:
            raise InvalidScheme(f"scheme has {len(rotation)} vertices, base has {base.n}")
        for v, arcs in enumerate(rotation):
            if sorted(arcs) != list(base.arcs_at[v]):
                raise InvalidScheme(f"cyclic order at vertex {v} is not a permutation of its arcs")
        return cls(tuple(_dihedral_min(r) for r in rotation))

    def neighbours(self, v: int) -> list[tuple[int, int]]:
        """Consecutive arc pairs around ``v``."""
        r = self.rotation[v]
        return [(r[i], r[(i + 1) % len(r)]) for i in range(len(r))]

    def validate(self, base: MultiGraph) -> None:
        DihedralScheme.for_base(base, self.rotation)


def rotation_scheme(base: MultiGraph) -> DihedralScheme:
    """Scheme taking the arcs at each vertex in increasing id order."""
    return DihedralScheme.for_base(base, base.arcs_at)


@dataclass(frozen=True)
class TruncationWitness:
    base: MultiGraph
    scheme: DihedralScheme
    arc_to_vertex: tuple[int, ...]  # truncation vertex carrying each base arc

    def edge_classes(self, g: SimpleGraph) -> list[int]:
        """Colour per edge of ``g``: 0 for scheme edges, 1 for edges along a base edge."""
        vertex_to_arc = {v: a for a, v in enumerate(self.arc_to_vertex)}
        return [1 if vertex_to_arc[u] >> 1 == vertex_to_arc[v] >> 1 else 0 for u, v in g.edges]


def truncate(base: MultiGraph, scheme: DihedralScheme) -> tuple[SimpleGraph, TruncationWitness]:
    """Cubic graph on the arcs of ``base``; vertex ``a`` of the result is arc ``a``."""
    scheme.validate(base)
    for v in range(base.n):
        if base.degree(v) < 3:
            raise DegenerateDegree(f"vertex {v} has degree {base.degree(v)}; truncation needs >= 3")
    edges = [(2 * e, 2 * e + 1) for e in range(base.m)]
    for v in range(base.n):
        edges.extend(scheme.neighbours(v))
    g = new_graph(2 * base.m, edges)
    return g, TruncationWitness(base, scheme, tuple(range(2 * base.m)))


def truncation_edge_classes(g: SimpleGraph) -> list[int]:
    """Edge classes of a graph produced by :func:`truncate` (vertex = arc id)."""
    return [1 if u >> 1 == v >> 1 else 0 for u, v in g.edges]


def recover_truncation(g: SimpleGraph) -> TruncationWitness:
    """Contract the girth cycles of a (0,1,1) graph back to a base multigraph and scheme."""
    from .cycles import edge_epsilons, girth_cycles, signatures

    if any(g.degree(v) != 3 for v in range(g.n)):
        raise NonCubicVertex("graph is not cubic")
    cycles = girth_cycles(g)
    sigs = signatures(g, cycles)
    bad = [v for v, s in enumerate(sigs) if s != (0, 1, 1)]
    if bad:
        raise WrongSignature(f"vertex {bad[0]} has signature {sigs[bad[0]]}, expected (0, 1, 1)")
    owner = [-1] * g.n
    for i, c in enumerate(cycles):
        for v in c:
            if owner[v] >= 0:
                raise CoverageFailure(f"vertex {v} lies on two girth cycles")
            owner[v] = i
    if any(o < 0 for o in owner):
        raise CoverageFailure("girth cycles do not cover every vertex")
    eps = edge_epsilons(g, cycles)
    base_edges = []
    arc_to_vertex = []
    arc_of_vertex = [-1] * g.n
    for e, (u, w) in enumerate(g.edges):
        if eps[e] != 0:
            continue
        if owner[u] == owner[w]:
            raise CoverageFailure(f"edge ({u}, {w}) would become a loop")
        arc_of_vertex[u] = 2 * len(base_edges)
        arc_of_vertex[w] = 2 * len(base_edges) + 1
        arc_to_vertex += [u, w]
        base_edges.append((owner[u], owner[w]))
    base = MultiGraph(len(cycles), tuple(base_edges))
    rotation = [tuple(arc_of_vertex[v] for v in c) for c in cycles]
    scheme = DihedralScheme.for_base(base, rotation)
    return TruncationWitness(base, scheme, tuple(arc_to_vertex))


def is_arc_transitive_scheme(base: MultiGraph, scheme: DihedralScheme) -> bool:
    """Whether the scheme-preserving automorphisms of ``base`` are transitive on arcs.

    Those automorphisms are exactly the automorphisms of the truncation that
    keep scheme edges and base-edge edges apart, acting on its vertices.
    """
    from .symmetry import automorphism_group

    g, _ = truncate(base, scheme)
    group = automorphism_group(g, edge_colors=truncation_edge_classes(g))
    return len(group.orbits()) == 1


def schemes_isomorphic(
    first: tuple[MultiGraph, DihedralScheme], second: tuple[MultiGraph, DihedralScheme]
) -> tuple[int, ...] | None:
    """Isomorphism of (base, scheme) pairs as a map between arc ids, or ``None``."""
    from .symmetry import are_isomorphic

    g1, _ = truncate(*first)
    g2, _ = truncate(*second)
    return are_isomorphic(g1, g2, edge_colors=(truncation_edge_classes(g1), truncation_edge_classes(g2)))


# -- concrete bases -------------------------------------------------------------


def k77_base() -> MultiGraph:
    """K_{7,7} with sides ``0..6`` and ``7..13``; edge ``7i + j`` joins ``i`` and ``7 + j``."""
    return MultiGraph(14, tuple((i, 7 + j) for i in range(7) for j in range(7)))


def k77_cyclic_scheme() -> DihedralScheme:
    """At each vertex, arcs ordered by (target index - own index) mod 7."""
    base = k77_base()
    rotation = []
    for v in range(14):
        side, i = divmod(v, 7)
        arcs = base.arcs_at[v]
        rotation.append(tuple(sorted(arcs, key=lambda a: (base.arc_end(a) % 7 - i) % 7)))
    return DihedralScheme.for_base(base, rotation)


def k77_truncation() -> tuple[SimpleGraph, TruncationWitness]:
    return truncate(k77_base(), k77_cyclic_scheme())


def dipole(k: int) -> MultiGraph:
    """Two vertices joined by ``k`` parallel edges."""
    return MultiGraph(2, tuple((0, 1) for _ in range(k)))


def random_scheme(base: MultiGraph, rng: random.Random) -> DihedralScheme:
    rotation = []
    for v in range(base.n):
        arcs = list(base.arcs_at[v])
        rng.shuffle(arcs)
        rotation.append(tuple(arcs))
    return DihedralScheme.for_base(base, rotation)


def random_bipartite_septivalent(rng: random.Random, side: int = 5, max_tries: int = 10_000) -> MultiGraph:
    """Random 7-regular bipartite multigraph with ``side`` vertices per side and no tripled edge."""
    for _ in range(max_tries):
        left = [v for v in range(side) for _ in range(7)]
        right = [side + v for v in range(side) for _ in range(7)]
        rng.shuffle(right)
        pairs = sorted(zip(left, right))
        counts: dict[tuple[int, int], int] = {}
        for p in pairs:
            counts[p] = counts.get(p, 0) + 1
        if max(counts.values()) <= 2:
            return MultiGraph(2 * side, tuple(pairs))
    raise RuntimeError("could not sample a base without tripled edges")


def random_girth7_scheme(base: MultiGraph, rng: random.Random, max_tries: int = 10_000) -> DihedralScheme:
    """Random scheme in which the two arcs of every doubled edge sit opposite each other (distance 3).

    Under that condition a 7-regular bipartite base truncates to a graph whose
    only 7-cycles are the vertex cycles.
    """
    twins: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(base.edges):
        twins.setdefault((u, v), []).append(e)
    doubled = [es for es in twins.values() if len(es) == 2]
    rotation = []
    for v in range(base.n):
        arcs = list(base.arcs_at[v])
        pairs = []
        for e1, e2 in doubled:
            a1 = 2 * e1 + (0 if base.edges[e1][0] == v else 1)
            a2 = 2 * e2 + (0 if base.edges[e2][0] == v else 1)
            if base.arc_begin(a1) == v:
                pairs.append((a1, a2))
        for _ in range(max_tries):
            rng.shuffle(arcs)
            pos = {a: i for i, a in enumerate(arcs)}
            k = len(arcs)
            if all(min((pos[a] - pos[b]) % k, (pos[b] - pos[a]) % k) == 3 for a, b in pairs):
                break
        else:
            raise RuntimeError(f"no admissible cyclic order at vertex {v}")
        rotation.append(tuple(arcs))
    return DihedralScheme.for_base(base, rotation)
