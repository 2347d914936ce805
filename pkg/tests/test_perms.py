import random

from hypothesis import given, settings, strategies as st

from girth7.perms import PermutationGroup, compose, cycles, identity, inverse, is_identity, orbit_partition, perm_order, power
from oracles import closure_order


def random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def test_compose_applies_right_factor_first():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, q) == tuple(p[q[x]] for x in range(3))


def test_inverse_and_power():
    p = (1, 2, 3, 4, 0)
    assert is_identity(compose(p, inverse(p)))
    assert perm_order(p) == 5 and power(p, 5) == identity(5) and power(p, -1) == inverse(p)
    assert cycles((1, 0, 2)) == [(0, 1), (2,)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(2, 7), st.integers(1, 3))
def test_schreier_sims_order_matches_closure(seed, n, k):
    rng = random.Random(seed)
    gens = [random_perm(rng, n) for _ in range(k)]
    group = PermutationGroup(n, gens)
    assert group.order() == closure_order(gens, n)
    elements = list(group.elements())
    assert len(elements) == len(set(elements)) == group.order()
    assert all(group.contains(e) for e in elements[:50])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_stabilizer_and_orbit_stabilizer(seed):
    rng = random.Random(seed)
    n = 7
    gens = [random_perm(rng, n) for _ in range(2)]
    group = PermutationGroup(n, gens)
    for x in range(n):
        stab = group.stabilizer([x])
        assert len(group.orbit(x)) * stab.order() == group.order()
        assert all(g[x] == x for g in stab.generators)
    pair = group.stabilizer([0, 1])
    brute = sum(1 for g in group.elements() if g[0] == 0 and g[1] == 1)
    assert pair.order() == brute


def test_contains_rejects_outsiders():
    cyclic = PermutationGroup(4, [(1, 2, 3, 0)])
    assert cyclic.order() == 4
    assert not cyclic.contains((1, 0, 2, 3))


def test_orbit_partition():
    assert orbit_partition(5, [(1, 0, 2, 4, 3)]) == [[0, 1], [2], [3, 4]]
