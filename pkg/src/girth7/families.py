"""Constructors for the named graphs and groups.

Vertex numbering is fixed so the explicit automorphisms transcribe literally:
``A(n)`` uses ``x_i = i``, ``y_i = n + i``, ``a_i = 2n + i``, ``b_i = 3n + i``;
``Pet(n, k)`` uses outer ``o_i = i`` and inner ``in_i = n + i``; the Coxeter
graph uses hubs ``h_i = i`` and rings ``r1_i = 7 + i``, ``r2_i = 14 + i``,
``r3_i = 21 + i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import BadJump, ContainsIdentity, ITooSmall, NotDivisibleBy3, NotInverseClosed, NTooSmall
from .graph import SimpleGraph, new_graph
from .perms import Perm


# -- A(n) ---------------------------------------------------------------------


def a_graph(n: int) -> SimpleGraph:
    if n < 8:
        raise NTooSmall(f"A(n) needs n >= 8, got {n}")
    x, y, a, b = (lambda i: i % n), (lambda i: n + i % n), (lambda i: 2 * n + i % n), (lambda i: 3 * n + i % n)
    edges = []
    for i in range(n):
        edges += [(x(i), x(i + 1)), (x(i), y(i)), (y(i), a(i)), (a(i), b(i)), (b(i), y(i + 2)), (a(i), b(i + 1))]
    return new_graph(4 * n, edges)


def a_vertex_name(n: int, v: int) -> str:
    return f"{'xyab'[v // n]}_{v % n}"


def a_shift(n: int) -> Perm:
    """``s_i -> s_{i+1}`` on every class."""
    if n < 8:
        raise NTooSmall(f"A(n) needs n >= 8, got {n}")
    return tuple((v // n) * n + (v % n + 1) % n for v in range(4 * n))


def a_tau(n: int) -> Perm:
    """The extra automorphism of A(n) that exists when 3 divides n."""
    if n < 8:
        raise NTooSmall(f"A(n) needs n >= 8, got {n}")
    if n % 3:
        raise NotDivisibleBy3(f"tau needs 3 | n, got {n}")
    X, Y, A, B = 0, 1, 2, 3
    # (class, index offset) per residue of i mod 3
    table = {
        X: [(B, -1), (Y, 0), (A, -1)],
        Y: [(A, -1), (X, 0), (B, -1)],
        A: [(B, 0), (X, 1), (Y, 1)],
        B: [(A, 0), (Y, 1), (X, 1)],
    }
    image = []
    for v in range(4 * n):
        cls, i = divmod(v, n)
        target, offset = table[cls][i % 3]
        image.append(target * n + (i + offset) % n)
    return tuple(image)


# -- generalized Petersen and Coxeter ---------------------------------------------


def gen_petersen(n: int, k: int) -> SimpleGraph:
    if n < 3 or not 1 <= k or 2 * k >= n:
        raise BadJump(f"Pet({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return new_graph(2 * n, edges)


def dodecahedron() -> SimpleGraph:
    return gen_petersen(10, 2)


def coxeter() -> SimpleGraph:
    edges = []
    for i in range(7):
        for ring, step in ((1, 1), (2, 2), (3, 3)):
            edges.append((i, 7 * ring + i))
            edges.append((7 * ring + i, 7 * ring + (i + step) % 7))
    return new_graph(28, edges)


# -- groups and Cayley graphs ---------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    """Finite group as a dense multiplication table on ``0..order-1``."""

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple = ()

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    @property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for g in range(self.order):
            row = self.table[g]
            inv[g] = next(h for h in range(self.order) if row[h] == self.identity)
        return tuple(inv)

    def word(self, letters: Sequence[int]) -> int:
        out = self.identity
        for g in letters:
            out = self.table[out][g]
        return out

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse[g], -k
        return self.word([g] * k)

    def element_order(self, g: int) -> int:
        k, h = 1, g
        while h != self.identity:
            h = self.table[h][g]
            k += 1
        return k

    def is_associative(self) -> bool:
        t, r = self.table, range(self.order)
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r)


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0, tuple(range(n)))


def cayley(group: GroupTable, connection: Sequence[int]) -> SimpleGraph:
    """Vertices are group elements; ``g ~ g s`` for ``s`` in the connection set."""
    conn = set(connection)
    if group.identity in conn:
        raise ContainsIdentity("connection set contains the identity")
    inv = group.inverse
    if any(inv[s] not in conn for s in conn):
        raise NotInverseClosed("connection set is not closed under inverses")
    return new_graph(group.order, ((g, group.mul(g, s)) for g in range(group.order) for s in sorted(conn)))


def left_multiplication(group: GroupTable, h: int) -> Perm:
    return tuple(group.mul(h, g) for g in range(group.order))


def _m_power(t: int, u: int, v: int) -> tuple[int, int]:
    # the matrix [[1,1],[1,0]] has order 3 over GF(2)
    for _ in range(t % 3):
        u, v = (u + v) % 2, u
    return u, v


def element_446(i: int, u: int, v: int, t: int) -> int:
    return 4 * (t % (3 * i)) + 2 * u + v


def group_446(i: int) -> tuple[GroupTable, tuple[int, ...]]:
    """The semidirect product (Z2 x Z2) x| Z_{3i} and its three-element connection set.

    Element ``((u, v), t)`` has index ``4t + 2u + v``; the product is
    ``((u1,v1),t1)((u2,v2),t2) = ((u1,v1) + M^t1 (u2,v2), t1 + t2)``.
    """
    if i < 3:
        raise ITooSmall(f"need i >= 3, got {i}")
    order = 12 * i
    labels = tuple(((g % 4) >> 1, g & 1, g // 4) for g in range(order))
    table = []
    for u1, v1, t1 in labels:
        row = []
        for u2, v2, t2 in labels:
            mu, mv = _m_power(t1, u2, v2)
            row.append(element_446(i, (u1 + mu) % 2, (v1 + mv) % 2, t1 + t2))
        table.append(tuple(row))
    group = GroupTable(tuple(table), 0, labels)
    connection = (element_446(i, 0, 0, 1), element_446(i, 0, 0, -1), element_446(i, 1, 1, 0))
    return group, connection


def cayley_446(i: int) -> SimpleGraph:
    return cayley(*group_446(i))


# -- random graphs --------------------------------------------------------------


def random_cubic_graph(n: int, rng: random.Random, max_tries: int = 10_000) -> SimpleGraph:
    """Uniform random simple cubic graph via the configuration model with rejection."""
    if n % 2 or n < 4:
        raise ValueError("a cubic graph needs an even number of vertices >= 4")
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = {(min(a, b), max(a, b)) for a, b in zip(stubs[::2], stubs[1::2]) if a != b}
        if len(pairs) == 3 * n // 2:
            return new_graph(n, pairs)
    raise RuntimeError("configuration model kept producing loops or multi-edges")
