import pytest

from girth7.errors import InvalidMap, NotTwoPerEdge, SchemaViolation
from girth7.families import coxeter, dodecahedron
from girth7.graph import new_graph
from girth7.maps import (
    MIXED,
    TrivalentMap,
    euler_characteristic,
    expected_euler_characteristic,
    flags,
    is_regular_map,
    is_rotary,
    klein_map,
    map_automorphisms,
    map_from_girth_cycles,
    map_type,
    parse_map_json,
    psl27,
    write_map_json,
)
from girth7.symmetry import automorphism_group
from oracles import closure_order


@pytest.fixture(scope="module")
def klein():
    return klein_map()


def test_dodecahedron_map():
    m = map_from_girth_cycles(dodecahedron())
    assert len(m.faces) == 12 and map_type(m) == (5, 3)
    assert euler_characteristic(m) == 2 == expected_euler_characteristic(20, 5)
    assert is_rotary(m) and is_regular_map(m)
    assert map_automorphisms(m).order() == 120


def test_psl27_order():
    elements = psl27()
    assert len(set(elements)) == 168
    assert closure_order(elements, 8) == 168


def test_klein_map(klein):
    g = klein.skeleton
    assert (g.n, g.m, len(klein.faces)) == (56, 84, 24)
    assert euler_characteristic(klein) == -4 == expected_euler_characteristic(56, 7)
    assert map_type(klein) == (7, 3)
    assert is_rotary(klein) and is_regular_map(klein)
    group = map_automorphisms(klein)
    assert group.order() == 336
    assert closure_order(group.vertex_generators, 56) == 336


def test_klein_skeleton_faces_are_girth_cycles(klein):
    m = map_from_girth_cycles(klein.skeleton)
    assert m.faces == klein.faces


def test_flag_and_face_counts(klein):
    for m in (klein, map_from_girth_cycles(dodecahedron())):
        assert len(flags(m)) == 4 * m.skeleton.m
        assert sum(len(f) for f in m.faces) == 2 * m.skeleton.m


def test_not_two_per_edge():
    with pytest.raises(NotTwoPerEdge):
        map_from_girth_cycles(coxeter())


def test_invalid_faces():
    k4 = new_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(InvalidMap):
        TrivalentMap.from_faces(k4, [(0, 1, 2)])
    with pytest.raises(InvalidMap):
        TrivalentMap.from_faces(k4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 2)])


def test_tetrahedron_and_mixed_map():
    k4 = new_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    tet = TrivalentMap.from_faces(k4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert euler_characteristic(tet) == 2 and is_regular_map(tet)
    # K4 on the projective plane: three quadrilaterals, one per perfect matching pair
    pp = TrivalentMap.from_faces(k4, [(0, 1, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)])
    assert euler_characteristic(pp) == 1 and map_type(pp) == (4, 3)
    prism = new_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    m = TrivalentMap.from_faces(prism, [(0, 1, 2), (3, 4, 5), (0, 1, 4, 3), (1, 2, 5, 4), (0, 2, 5, 3)])
    assert map_type(m) == MIXED and euler_characteristic(m) == 2
    assert not is_regular_map(m)


def test_map_with_trivial_group_is_not_rotary():
    # A planar cubic graph with trivial automorphism group; its faces form a sphere map.
    from girth7.symmetry import automorphism_group
    import networkx as nx

    g = _asymmetric_planar_cubic()
    assert automorphism_group(g).order() == 1
    emb_ok, emb = nx.check_planarity(nx.Graph(list(g.edges)))
    assert emb_ok
    faces, seen = [], set()
    for u, v in emb.edges():
        if (u, v) not in seen:
            faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    m = TrivalentMap.from_faces(g, faces)
    assert euler_characteristic(m) == 2
    assert not is_rotary(m) and not is_regular_map(m)


def _asymmetric_planar_cubic():
    import random

    import networkx as nx

    from girth7.families import random_cubic_graph

    rng = random.Random(7)
    for _ in range(500):
        g = random_cubic_graph(12, rng)
        h = nx.Graph(list(g.edges))
        if nx.is_connected(h) and nx.check_planarity(h)[0] and nx.node_connectivity(h) == 3:
            if automorphism_group(g).order() == 1:
                return g
    raise AssertionError("no asymmetric planar cubic graph found")


def test_json_round_trip(klein):
    assert parse_map_json(write_map_json(klein)) == klein
    with pytest.raises(SchemaViolation):
        parse_map_json('{"faces": []}')
    with pytest.raises(SchemaViolation):
        parse_map_json("not json")
