import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from girth7.cycles import (
    ball_cut_identity,
    canonical_cycle,
    cycle_edges,
    edge_epsilons,
    epsilon,
    girth,
    girth_cycles,
    girth_regular_signature,
    has_cycle_separating_cut_below,
    is_cycle_separating,
    orbit_sum_identity,
    r_multiset,
    signatures,
    vertex_signature,
    _colex,
)
from girth7.errors import AcyclicGraph, BudgetExceeded, EdgeOutOfRange, GirthNot7, NonCubicVertex, NonUniformOrbit, NotGirthRegular, TooSmall
from girth7.families import a_graph, coxeter, gen_petersen, random_cubic_graph
from girth7.graph import complete_graph, cycle_graph, new_graph, path_graph
from oracles import ball, brute_min_cycle_cut, nx_cycles, nx_girth


def two_heptagons_bridged():
    c = cycle_graph(7)
    return new_graph(14, list(c.edges) + [(u + 7, v + 7) for u, v in c.edges] + [(0, 7)])


def test_girth_examples():
    assert girth(cycle_graph(7)) == 7
    assert girth(a_graph(8)) == 7
    assert girth(complete_graph(4)) == 3
    assert girth(path_graph(5)) is None


def test_girth_cycles_examples():
    assert girth_cycles(cycle_graph(7)) == ((0, 1, 2, 3, 4, 5, 6),)
    assert len(girth_cycles(gen_petersen(13, 5))) == 26
    assert len(girth_cycles(coxeter())) == 24
    with pytest.raises(AcyclicGraph):
        girth_cycles(path_graph(5))


def test_canonical_cycle_is_least_rotation_or_reflection():
    seq = [5, 3, 9, 1, 7]
    variants = [tuple(seq[i:] + seq[:i]) for i in range(5)]
    variants += [tuple(reversed(v)) for v in variants]
    assert canonical_cycle(seq) == min(variants)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 30).map(lambda k: 2 * k), st.integers(0, 10**9))
def test_girth_and_cycles_match_networkx(n, seed):
    g = random_cubic_graph(n, random.Random(seed))
    assert girth(g) == nx_girth(g)
    ours = {frozenset(frozenset(e) for e in cycle_edges(c)) for c in girth_cycles(g)}
    assert ours == nx_cycles(g, girth(g))


@pytest.mark.parametrize("g", [coxeter(), a_graph(9), gen_petersen(15, 4), complete_graph(4)], ids=["coxeter", "A9", "P15_4", "K4"])
def test_girth_cycles_oracle_on_families(g):
    ours = {frozenset(frozenset(e) for e in cycle_edges(c)) for c in girth_cycles(g)}
    assert ours == nx_cycles(g, girth(g))


def test_epsilon_examples():
    c7 = cycle_graph(7)
    assert [epsilon(c7, girth_cycles(c7), e) for e in range(7)] == [1] * 7
    n = 9
    g = a_graph(n)
    cyc = girth_cycles(g)
    assert epsilon(g, cyc, g.edge_id(0, n)) == 6  # x_0 y_0
    assert epsilon(g, cyc, g.edge_id(0, 1)) == 4  # x_0 x_1
    cox = coxeter()
    assert set(edge_epsilons(cox, girth_cycles(cox))) == {4}
    with pytest.raises(EdgeOutOfRange):
        epsilon(c7, girth_cycles(c7), 7)


def test_a_graph_epsilons_per_edge_class():
    n = 12
    g = a_graph(n)
    eps = edge_epsilons(g, girth_cycles(g))
    x, y, a, b = (lambda i: i % n), (lambda i: n + i % n), (lambda i: 2 * n + i % n), (lambda i: 3 * n + i % n)
    expected = {(x, 1, x): 4, (x, 0, y): 6, (y, 0, a): 4, (a, 0, b): 6, (b, 2, y): 4, (a, 1, b): 4}
    for (f, shift, h), value in expected.items():
        for i in range(n):
            assert eps[g.edge_id(f(i), h(i + shift))] == value


def test_signature_examples():
    assert set(signatures(a_graph(12))) == {(4, 4, 6)}
    assert girth_regular_signature(gen_petersen(15, 4)) == (4, 5, 5)
    assert girth_regular_signature(coxeter()) == (4, 4, 4)
    with pytest.raises(NonCubicVertex):
        vertex_signature(cycle_graph(7), girth_cycles(cycle_graph(7)), 0)


def test_not_girth_regular_reports_pair():
    h = random_cubic_graph(20, random.Random(3))
    sigs = signatures(h)
    assert len(set(sigs)) > 1
    with pytest.raises(NotGirthRegular) as info:
        girth_regular_signature(h)
    u, v = info.value.vertices
    assert sigs[u] != sigs[v]


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 25).map(lambda k: 2 * k), st.integers(0, 10**9))
def test_epsilon_sum_and_r_multiset_size(n, seed):
    g = random_cubic_graph(n, random.Random(seed))
    cycles = girth_cycles(g)
    eps = edge_epsilons(g, cycles)
    assert sum(eps) == girth(g) * len(cycles)
    everything = range(g.m)
    for v in range(0, g.n, 7):
        a, b, c = vertex_signature(g, cycles, v, eps)
        rm = r_multiset(g, cycles, everything, v)
        assert len(rm) == (a + b + c) // 2
        assert set(rm) <= {girth(g)}


def test_r_multiset_examples():
    g = a_graph(9)
    cycles = girth_cycles(g)
    eps = edge_epsilons(g, cycles)
    red = [e for e in range(g.m) if eps[e] == 6]
    for v in range(g.n):
        assert r_multiset(g, cycles, red, v) == (3,) * 7
    c7 = cycle_graph(7)
    assert r_multiset(c7, girth_cycles(c7), range(7), 3) == (7,)


def test_orbit_sum_identity_examples():
    g = a_graph(9)
    cycles = girth_cycles(g)
    eps = edge_epsilons(g, cycles)
    red = [e for e in range(g.m) if eps[e] == 6]
    assert len(red) == 18
    assert orbit_sum_identity(g, cycles, red) == (21, Fraction(21))
    c7 = cycle_graph(7)
    assert orbit_sum_identity(c7, girth_cycles(c7), range(7)) == (7, Fraction(7))
    cox = coxeter()
    assert orbit_sum_identity(cox, girth_cycles(cox), range(42)) == (42, Fraction(42))
    with pytest.raises(NonUniformOrbit):
        orbit_sum_identity(g, cycles, range(g.m))


def _ball_oracle(g, v):
    inner = ball(g, v, 3)
    boundary = sum(1 for a, b in g.edges if (a in inner) != (b in inner))
    return len(inner), boundary


@pytest.mark.parametrize("g,boundary,total", [(coxeter(), 12, 12), (a_graph(12), 10, 14)], ids=["coxeter", "A12"])
def test_ball_cut_identity_examples(g, boundary, total):
    for v in range(g.n):
        res = ball_cut_identity(g, v)
        assert (res.size, res.boundary) == _ball_oracle(g, v) == (22, boundary)
        assert res.signature_sum == total and res.holds


def test_ball_cut_identity_preconditions():
    with pytest.raises(TooSmall):
        ball_cut_identity(gen_petersen(13, 5), 0)
    with pytest.raises(GirthNot7):
        ball_cut_identity(gen_petersen(5, 2), 0)


def test_colex_order():
    subsets = list(_colex(5, 3))
    assert len(subsets) == 10
    assert subsets == sorted(subsets, key=lambda s: s[::-1])


def test_bridge_is_found():
    g = two_heptagons_bridged()
    hit = has_cycle_separating_cut_below(g, 2)
    assert hit == (g.edge_id(0, 7),)
    assert is_cycle_separating(g, hit)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**9))
def test_cut_search_matches_brute_force(seed):
    rng = random.Random(seed)
    g = random_cubic_graph(rng.choice([8, 10, 12]), rng)
    hit = has_cycle_separating_cut_below(g, 4)
    expected = brute_min_cycle_cut(g, 4)
    assert (None if hit is None else len(hit)) == expected
    if hit is not None:
        assert is_cycle_separating(g, hit)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        has_cycle_separating_cut_below(coxeter(), 7, budget=1000)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("G7_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        has_cycle_separating_cut_below(coxeter(), 4)


def test_threads_give_same_witness():
    c = cycle_graph(7)
    g = new_graph(14, list(c.edges) + [(u + 7, v + 7) for u, v in c.edges] + [(0, 7), (3, 10)])
    serial = has_cycle_separating_cut_below(g, 3)
    assert len(serial) == 2
    assert has_cycle_separating_cut_below(g, 3, threads=2) == serial
    assert has_cycle_separating_cut_below(coxeter(), 3, threads=2) is None
