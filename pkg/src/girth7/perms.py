"""Permutations as image tuples and a small Schreier-Sims permutation group.

A permutation ``p`` of ``range(n)`` is the tuple of images, so ``p[x]`` is the
image of ``x``.  Composition follows function notation:
``compose(p, q)[x] == p[q[x]]`` (apply ``q`` first).
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from math import prod
from typing import Callable, Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(x == y for x, y in enumerate(p))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``p``, fixed points included, each starting at its least point."""
    seen = [False] * len(p)
    out = []
    for x in range(len(p)):
        if seen[x]:
            continue
        cyc = []
        y = x
        while not seen[y]:
            seen[y] = True
            cyc.append(y)
            y = p[y]
        out.append(tuple(cyc))
    return out


def perm_order(p: Perm) -> int:
    from math import lcm

    return lcm(*(len(c) for c in cycles(p))) if p else 1


def power(p: Perm, k: int) -> Perm:
    result = identity(len(p))
    base = p if k >= 0 else inverse(p)
    k = abs(k)
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def orbit_partition(size: int, images: Iterable[Sequence[int]]) -> list[list[int]]:
    """Orbits of ``range(size)`` under the maps in ``images``, each sorted, ordered by least point."""
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for img in images:
        for x in range(size):
            a, b = find(x), find(img[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    groups: dict[int, list[int]] = {}
    for x in range(size):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def orbit_of(point: int, generators: Sequence[Perm]) -> list[int]:
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


class PermutationGroup:
    """Group generated by ``generators`` acting on ``range(degree)``.

    The stabilizer chain is built on demand by deterministic Schreier-Sims.
    ``base_prefix`` forces the first base points, so the chain also yields
    pointwise stabilizers of that prefix.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (), base_prefix: Sequence[int] = ()):
        self.degree = degree
        gens: list[Perm] = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or not is_permutation(g):
                raise ValueError("generator is not a permutation of the right degree")
            if not is_identity(g) and g not in gens:
                gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.base_prefix = tuple(base_prefix)

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, generators={len(self.generators)})"

    # -- stabilizer chain ---------------------------------------------------

    @cached_property
    def _chain(self) -> tuple[list[int], list[list[Perm]], list[dict[int, Perm]]]:
        n = self.degree
        ident = identity(n)
        base: list[int] = list(self.base_prefix)
        strong: list[list[Perm]] = []
        trans: list[dict[int, Perm]] = []

        def new_base_point(g: Perm) -> None:
            base.append(next(x for x in range(n) if g[x] != x))

        for g in self.generators:
            if all(g[b] == b for b in base):
                new_base_point(g)

        def fixes_prefix(g: Perm, i: int) -> bool:
            return all(g[b] == b for b in base[:i])

        def transversal(i: int) -> dict[int, Perm]:
            u = {base[i]: ident}
            frontier = [base[i]]
            while frontier:
                nxt = []
                for x in frontier:
                    for s in strong[i]:
                        y = s[x]
                        if y not in u:
                            u[y] = compose(s, u[x])
                            nxt.append(y)
                frontier = nxt
            return u

        for i in range(len(base)):
            strong.append([g for g in self.generators if fixes_prefix(g, i)])
            trans.append(transversal(i))

        def sift(h: Perm, start: int) -> tuple[Perm, int]:
            for j in range(start, len(base)):
                b = h[base[j]]
                if b not in trans[j]:
                    return h, j
                h = compose(inverse(trans[j][b]), h)
            return h, len(base)

        i = len(base) - 1
        while i >= 0:
            restart = False
            for s in list(strong[i]):
                for b, ub in list(trans[i].items()):
                    usb = trans[i][s[b]]
                    h = compose(inverse(usb), compose(s, ub))
                    if is_identity(h):
                        continue
                    residue, j = sift(h, i + 1)
                    if is_identity(residue):
                        continue
                    if j == len(base):
                        new_base_point(residue)
                        strong.append([])
                        trans.append({})
                    for level in range(i + 1, j + 1):
                        strong[level].append(residue)
                        trans[level] = transversal(level)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1
        return base, strong, trans

    @property
    def base(self) -> list[int]:
        return list(self._chain[0])

    def transversals(self) -> list[dict[int, Perm]]:
        return self._chain[2]

    def order(self) -> int:
        return prod(len(t) for t in self._chain[2])

    def contains(self, p: Sequence[int]) -> bool:
        base, _, trans = self._chain
        h = tuple(p)
        for j, b in enumerate(base):
            img = h[b]
            if img not in trans[j]:
                return False
            h = compose(inverse(trans[j][img]), h)
        return is_identity(h)

    def stabilizer(self, points: Sequence[int]) -> "PermutationGroup":
        """Pointwise stabilizer of ``points``."""
        points = tuple(points)
        chain_group = PermutationGroup(self.degree, self.generators, base_prefix=points)
        _, strong, _ = chain_group._chain
        gens = strong[len(points)] if len(points) < len(strong) else []
        return PermutationGroup(self.degree, gens)

    # -- orbits and elements ------------------------------------------------

    def orbits(self) -> list[list[int]]:
        return orbit_partition(self.degree, self.generators)

    def orbit(self, point: int) -> list[int]:
        return orbit_of(point, self.generators)

    def elements(self) -> Iterator[Perm]:
        """Every element exactly once, as products of transversal elements."""
        trans = [list(t.values()) for t in self._chain[2]]
        for combo in product(*trans):
            g = identity(self.degree)
            for u in combo:
                g = compose(g, u)
            yield g

    def induced_orbits(self, size: int, act: Callable[[Perm], Sequence[int]]) -> list[list[int]]:
        """Orbits on ``range(size)`` of the action induced by ``act`` on each generator."""
        return orbit_partition(size, [act(g) for g in self.generators])
