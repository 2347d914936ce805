"""Trivalent maps given as a cubic skeleton plus a set of face cycles.

Map automorphisms are computed on an auxiliary coloured graph with one node
per vertex, edge and face of the map: vertex nodes touch their edge nodes and
edge nodes touch their face nodes.  Its colour-preserving automorphisms are
exactly the skeleton automorphisms that permute the faces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cycles import canonical_cycle, cycle_edges, edge_epsilons, girth, girth_cycles
from .errors import InvalidMap, NotTwoPerEdge, SchemaViolation, SearchFailed
from .graph import SimpleGraph, new_graph
from .perms import Perm, PermutationGroup, compose, cycles as perm_cycles, identity, perm_order

MIXED = "mixed"


@dataclass(frozen=True)
class TrivalentMap:
    skeleton: SimpleGraph
    faces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.skeleton
        if any(g.degree(v) != 3 for v in range(g.n)):
            raise InvalidMap("skeleton is not cubic")
        count = [0] * g.m
        for f in self.faces:
            if len(set(f)) != len(f) or len(f) < 3:
                raise InvalidMap(f"face {f} is not a cycle")
            for u, v in cycle_edges(f):
                if not g.has_edge(u, v):
                    raise InvalidMap(f"face {f} uses non-edge ({u}, {v})")
                count[g.edge_id(u, v)] += 1
        if any(c != 2 for c in count):
            raise InvalidMap("every edge must lie on exactly two faces")

    @classmethod
    def from_faces(cls, skeleton: SimpleGraph, faces: Sequence[Sequence[int]]) -> "TrivalentMap":
        return cls(skeleton, tuple(sorted(canonical_cycle(f) for f in faces)))

    @cached_property
    def face_edges(self) -> list[list[int]]:
        g = self.skeleton
        return [sorted(g.edge_id(u, v) for u, v in cycle_edges(f)) for f in self.faces]


def map_from_girth_cycles(g: SimpleGraph) -> TrivalentMap:
    cycles = girth_cycles(g)
    eps = edge_epsilons(g, cycles)
    bad = [e for e, x in enumerate(eps) if x != 2]
    if bad:
        raise NotTwoPerEdge(f"edge {g.edges[bad[0]]} lies on {eps[bad[0]]} girth cycles, expected 2")
    return TrivalentMap(g, cycles)


def flags(m: TrivalentMap) -> list[tuple[int, int, int]]:
    """All incident (vertex, edge id, face index) triples."""
    g = m.skeleton
    out = []
    for f, edges in enumerate(m.face_edges):
        for e in edges:
            for v in g.edges[e]:
                out.append((v, e, f))
    return sorted(out)


def euler_characteristic(m: TrivalentMap) -> int:
    return m.skeleton.n - m.skeleton.m + len(m.faces)


def expected_euler_characteristic(n: int, face_length: int) -> Fraction:
    """``n (3/k - 1/2)`` for a map of type {k,3} on ``n`` vertices."""
    return n * (Fraction(3, face_length) - Fraction(1, 2))


def map_type(m: TrivalentMap) -> tuple[int, int] | str:
    lengths = {len(f) for f in m.faces}
    return (lengths.pop(), 3) if len(lengths) == 1 else MIXED


# -- automorphisms ----------------------------------------------------------------


def _incidence_graph(m: TrivalentMap) -> tuple[SimpleGraph, list[int]]:
    g = m.skeleton
    n, e = g.n, g.m
    edges = []
    for i, (u, v) in enumerate(g.edges):
        edges += [(u, n + i), (v, n + i)]
    for f, es in enumerate(m.face_edges):
        edges += [(n + i, n + e + f) for i in es]
    colors = [0] * n + [1] * e + [2] * len(m.faces)
    return new_graph(n + e + len(m.faces), edges), colors


class MapGroup:
    """Automorphism group of a map, acting on vertex, edge and face nodes together."""

    def __init__(self, m: TrivalentMap):
        from .symmetry import automorphism_group

        self.map = m
        aux, colors = _incidence_graph(m)
        self.aux = automorphism_group(aux, vertex_colors=colors)
        self.n, self.m_edges, self.f = m.skeleton.n, m.skeleton.m, len(m.faces)

    def order(self) -> int:
        return self.aux.order()

    @property
    def vertex_generators(self) -> list[Perm]:
        return [p[: self.n] for p in self.aux.generators]

    def vertex_group(self) -> PermutationGroup:
        return PermutationGroup(self.n, self.vertex_generators)

    def vertex_orbits(self) -> list[list[int]]:
        return [o for o in self.aux.orbits() if o[0] < self.n]

    def face_orbits(self) -> list[list[int]]:
        off = self.n + self.m_edges
        return [[x - off for x in o] for o in self.aux.orbits() if o[0] >= off]

    def flag_orbits(self) -> list[list[tuple[int, int, int]]]:
        fl = flags(self.map)
        index = {t: i for i, t in enumerate(fl)}
        n, e = self.n, self.m_edges
        images = [
            [index[(p[v], p[n + ed] - n, p[n + e + f] - n - e)] for v, ed, f in fl] for p in self.aux.generators
        ]
        from .perms import orbit_partition

        return [[fl[i] for i in o] for o in orbit_partition(len(fl), images)]

    def setwise_stabilizer(self, node: int) -> PermutationGroup:
        return self.aux.stabilizer([node])


def map_automorphisms(m: TrivalentMap) -> MapGroup:
    return MapGroup(m)


def _has_rotation(stab: PermutationGroup, points: Sequence[int]) -> bool:
    """Whether some element permutes ``points`` as one cycle of full length."""
    k = len(points)
    pts = set(points)
    for p in stab.elements():
        x, steps = points[0], 0
        while True:
            x = p[x]
            steps += 1
            if x == points[0] or x not in pts:
                break
        if x == points[0] and steps == k:
            return True
    return False


def is_rotary(m: TrivalentMap) -> bool:
    """Vertex rotations and face rotations exist for one representative of every orbit."""
    group = MapGroup(m)
    g = m.skeleton
    for orbit in group.vertex_orbits():
        v = orbit[0]
        if not _has_rotation(group.setwise_stabilizer(v), g.adjacency[v]):
            return False
    off = group.n + group.m_edges
    for orbit in group.face_orbits():
        f = orbit[0]
        if not _has_rotation(group.setwise_stabilizer(off + f), m.faces[f]):
            return False
    return True


def is_regular_map(m: TrivalentMap) -> bool:
    return len(MapGroup(m).flag_orbits()) == 1


# -- the Klein map ------------------------------------------------------------------


def psl27() -> list[Perm]:
    """PSL(2,7) on the projective line ``0..6`` plus infinity (point 7), all 168 elements sorted."""
    inf = 7
    shift = tuple((z + 1) % 7 if z != inf else inf for z in range(8))
    inv7 = {z: pow(z, -1, 7) for z in range(1, 7)}
    flip = tuple(inf if z == 0 else 0 if z == inf else (-inv7[z]) % 7 for z in range(8))
    group = PermutationGroup(8, [shift, flip])
    if group.order() != 168:
        raise SearchFailed(f"projective group has order {group.order()}, expected 168")
    return sorted(group.elements())


def klein_generators(elements: Sequence[Perm]) -> tuple[Perm, Perm]:
    """Least pair (R, S) with R of order 7, S of order 3 and RS of order 2 generating the group."""
    sevens = [p for p in elements if perm_order(p) == 7]
    threes = [p for p in elements if perm_order(p) == 3]
    for r in sevens:
        for s in threes:
            if perm_order(compose(r, s)) == 2 and PermutationGroup(8, [r, s]).order() == len(elements):
                return r, s
    raise SearchFailed("no (2,3,7) generating pair found")


def _cosets(elements: Sequence[Perm], sub: Sequence[Perm]) -> tuple[list[int], int]:
    """Left coset index of every element and the number of cosets."""
    index = {p: i for i, p in enumerate(elements)}
    label = [-1] * len(elements)
    count = 0
    for i, g in enumerate(elements):
        if label[i] < 0:
            for h in sub:
                label[index[compose(g, h)]] = count
            count += 1
    return label, count


def _cyclic(p: Perm) -> list[Perm]:
    out, x = [], identity(len(p))
    while True:
        out.append(x)
        x = compose(x, p)
        if x == out[0]:
            return out


def klein_map() -> TrivalentMap:
    """Map of type {7,3} on 56 vertices built from cosets in PSL(2,7)."""
    elements = psl27()
    r, s = klein_generators(elements)
    rs = compose(r, s)
    index = {p: i for i, p in enumerate(elements)}
    vertex_of, nv = _cosets(elements, _cyclic(s))
    edge_of, ne = _cosets(elements, _cyclic(rs))
    edge_set = set()
    for g in elements:
        a, b = vertex_of[index[g]], vertex_of[index[compose(g, rs)]]
        edge_set.add((min(a, b), max(a, b)))
    if len(edge_set) != ne:
        raise SearchFailed("coset graph has parallel edges")
    skeleton = new_graph(nv, edge_set)
    faces = set()
    powers = _cyclic(r)
    for g in elements:
        walk = [vertex_of[index[compose(g, p)]] for p in powers]
        faces.add(canonical_cycle(walk))
    return TrivalentMap(skeleton, tuple(sorted(faces)))


# -- JSON -----------------------------------------------------------------------


def write_map_json(m: TrivalentMap) -> str:
    from .formats import write_graph6

    return json.dumps({"graph6": write_graph6(m.skeleton), "faces": [list(f) for f in m.faces]}, sort_keys=True)


def parse_map_json(text: str) -> TrivalentMap:
    from .formats import parse_graph6

    try:
        obj = json.loads(text)
        g = parse_graph6(obj["graph6"])
        faces = [tuple(int(v) for v in f) for f in obj["faces"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise SchemaViolation(f"invalid map JSON: {exc}") from exc
    return TrivalentMap.from_faces(g, faces)
