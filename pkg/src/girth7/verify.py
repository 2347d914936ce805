"""Bundled verification suites, each a list of named pass/fail checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import families
from .classify import (
    candidate_signatures,
    classify,
    condition_satisfiable,
    realizable_signatures,
    verify_witness,
)
from .cycles import girth, girth_cycles, has_cycle_separating_cut_below, signatures
from .errors import Girth7Error, UnknownSuite
from .graph import SimpleGraph, bfs_distances
from .symmetry import are_isomorphic, arc_orbits, automorphism_group, is_automorphism


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


# The drawing of the distance-3 ball around ((0,0),0): node -> ((u,v),t) label,
# then the 21 tree edges followed by the 7 edges inside the outer layer.
BALL_LABELS = {
    0: (0, 0, 0), 1: (0, 0, -1), 2: (1, 1, 0), 3: (0, 0, 1),
    4: (0, 0, -2), 5: (1, 1, -1), 6: (0, 1, -1), 7: (1, 0, 1), 8: (1, 1, 1), 9: (0, 0, 2),
    10: (0, 0, -3), 11: (1, 1, -2), 12: (0, 1, -2), 13: (1, 0, 0), 14: (1, 0, -2), 15: (1, 0, -1),
    16: (0, 1, 1), 17: (0, 1, 2), 18: (0, 1, 0), 19: (1, 0, 2), 20: (1, 1, 2), 21: (0, 0, 3),
}  # fmt: skip
BALL_EDGES = (
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9),
    (4, 10), (4, 11), (5, 12), (5, 13), (6, 14), (6, 15), (7, 16), (7, 17),
    (8, 18), (8, 19), (9, 20), (9, 21),
    (11, 15), (12, 14), (13, 16), (20, 16), (19, 17), (18, 15), (13, 18),
)  # fmt: skip


def ball_label_to_vertex(i: int) -> dict[int, int]:
    """Drawing node -> group element index.

    The drawing multiplies on the other side and runs Z_{3i} the other way, so
    label ((u,v),t) is the inverse of our element ((u,v),-t).
    """
    group, _ = families.group_446(i)
    inv = group.inverse
    return {node: inv[families.element_446(i, u, v, -t)] for node, (u, v, t) in BALL_LABELS.items()}


def ball_matches_drawing(i: int) -> tuple[bool, str]:
    g = families.cayley_446(i)
    where = ball_label_to_vertex(i)
    dist = bfs_distances(g, 0)
    ball = {v for v in range(g.n) if 0 <= dist[v] <= 3}
    drawn = {tuple(sorted((where[a], where[b]))) for a, b in BALL_EDGES}
    induced = {(a, b) for a, b in g.edges if a in ball and b in ball}
    ok = set(where.values()) == ball and len(where) == 22 and drawn == induced
    return ok, f"|ball|={len(ball)}, drawn edges={len(drawn)}, induced edges={len(induced)}"


def cycles_through(g: SimpleGraph, v: int, max_len: int) -> list[tuple[int, ...]]:
    """Every cycle of length <= max_len through ``v``, canonicalized."""
    from .cycles import canonical_cycle

    found = set()
    path = [v]

    def walk(u: int) -> None:
        for w in g.adjacency[u]:
            if w == v and len(path) >= 3:
                found.add(canonical_cycle(path))
            elif w not in path and len(path) < max_len:
                path.append(w)
                walk(w)
                path.pop()

    walk(v)
    return sorted(found)


def _safe_case(g: SimpleGraph) -> str:
    try:
        return classify(g).case
    except Girth7Error as exc:
        return type(exc).__name__


# -- suites -------------------------------------------------------------------------


def suite_lemma41(n_values=range(8, 25)) -> list[Check]:
    out = []
    for n in n_values:
        g = families.a_graph(n)
        sigs = set(signatures(g))
        vt = len(automorphism_group(g).orbits()) == 1
        ok = girth(g) == 7 and sigs == {(4, 4, 6)} and vt == (n % 3 == 0) and is_automorphism(g, families.a_shift(n))
        detail = f"girth={girth(g)} signatures={sorted(sigs)} vertex_transitive={vt}"
        if n % 3 == 0:
            tau_ok = is_automorphism(g, families.a_tau(n))
            ok = ok and tau_ok
            detail += f" tau_automorphism={tau_ok}"
        out.append(Check(f"A({n})", ok, detail))
    return out


def suite_theorem44(i_values=(3, 4, 5)) -> list[Check]:
    out = []
    for i in i_values:
        cay = families.cayley_446(i)
        iso = are_isomorphic(cay, families.a_graph(3 * i))
        out.append(Check(f"Cay_446({i}) isomorphic to A({3 * i})", iso is not None))
        ok, detail = ball_matches_drawing(i)
        out.append(Check(f"distance-3 ball of Cay_446({i}) matches the drawing", ok, detail))
        short = cycles_through(cay, 0, 7)
        lengths = sorted({len(c) for c in short})
        ok = lengths == [7] and len(short) == (4 + 4 + 6) // 2
        out.append(Check(f"cycles of length <= 7 through the identity of Cay_446({i})", ok, f"{len(short)} cycles, lengths {lengths}"))
        group, conn = families.group_446(i)
        a, b = families.element_446(i, 1, 1, 0), families.element_446(i, 0, 0, 1)
        binv = group.inverse[b]
        relators = [[a, a], [b] * (3 * i), [b, a, binv, a, binv, a, b]]
        ok = all(group.word(r) == group.identity for r in relators)
        out.append(Check(f"relators hold in the order-{12 * i} group", ok))
    return out


def suite_prop52() -> list[Check]:
    g = families.coxeter()
    group = automorphism_group(g)
    report = classify(g)
    return [
        Check("Coxeter girth 7", girth(g) == 7),
        Check("Coxeter signature (4,4,4)", set(signatures(g)) == {(4, 4, 4)}),
        Check("Coxeter arc-transitive", len(arc_orbits(group)) == 1),
        Check("Coxeter classifies to case 3", report.case == "Coxeter" and verify_witness(g, report)),
        Check("Coxeter automorphism group order", group.order() == group.chain_order() == 336, f"{group.order()}"),
    ]


def suite_lemma55() -> list[Check]:
    out = []
    for n, k in ((13, 5), (15, 4), (17, 4)):
        g = families.gen_petersen(n, k)
        report = classify(g)
        ok = report.case == "Petersen" and report.signature == (4, 5, 5) and verify_witness(g, report)
        out.append(Check(f"Pet({n},{k}) classifies to case 5", ok))
    for n in range(9, 21):
        if n in (15, 17):
            continue
        case = _safe_case(families.gen_petersen(n, 4))
        out.append(Check(f"Pet({n},4) is not case 5", case != "Petersen", case))
    return out


def suite_theorem32() -> list[Check]:
    from .maps import euler_characteristic, expected_euler_characteristic, is_regular_map, is_rotary, klein_map, map_from_girth_cycles

    out = []
    dodeca = map_from_girth_cycles(families.dodecahedron())
    chi = euler_characteristic(dodeca)
    out.append(Check("dodecahedron map chi", chi == 2 == expected_euler_characteristic(20, 5), f"{chi}"))
    out.append(Check("dodecahedron map regular", is_regular_map(dodeca)))
    klein = klein_map()
    g = klein.skeleton
    chi = euler_characteristic(klein)
    out.append(Check("Klein map counts", (g.n, g.m, len(klein.faces)) == (56, 84, 24), f"{g.n}/{g.m}/{len(klein.faces)}"))
    out.append(Check("Klein map chi", chi == -4 == expected_euler_characteristic(56, 7), f"{chi}"))
    out.append(Check("Klein map rotary", is_rotary(klein)))
    out.append(Check("Klein skeleton classifies to case 2", classify(g).case == "RotaryMap"))
    return out


def suite_condition() -> list[Check]:
    expected_witnesses = {(7, 6): (3,) * 7, (8, 4): (0,) + (2,) * 7, (8, 6): (0,) + (3,) * 7}
    out = [
        Check("candidate signatures", candidate_signatures() == [(0, 1, 1), (2, 2, 2), (4, 4, 4), (4, 4, 6), (4, 5, 5), (4, 6, 6), (5, 5, 6)]),
        Check("realizable signatures", realizable_signatures() == [(0, 1, 1), (2, 2, 2), (4, 4, 4), (4, 4, 6), (4, 5, 5)]),
    ]
    for (ell, eps), want in expected_witnesses.items():
        got = condition_satisfiable(ell, eps)
        out.append(Check(f"condition witness for ell={ell}, eps={eps}", got == want, f"{got}"))
    # (2,3,3), (2,4,4), (2,5,5), (3,3,4): the singleton value is the epsilon
    for ell, eps in ((4, 2), (5, 2), (6, 2), (5, 4)):
        got = condition_satisfiable(ell, eps)
        out.append(Check(f"condition unsatisfiable for ell={ell}, eps={eps}", got is None, f"{got}"))
    return out


CUT_GRAPHS: dict[str, Callable[[], SimpleGraph]] = {
    "coxeter": families.coxeter,
    "pet135": lambda: families.gen_petersen(13, 5),
}


def suite_cuts(graph: str = "coxeter", k: int = 6, threads: int = 1) -> list[Check]:
    if graph not in CUT_GRAPHS:
        raise UnknownSuite(f"unknown graph {graph!r} for cuts; choose from {sorted(CUT_GRAPHS)}")
    g = CUT_GRAPHS[graph]()
    witness = has_cycle_separating_cut_below(g, k, threads=threads)
    return [Check(f"{graph}: no cycle-separating cut with fewer than {k} edges", witness is None, f"witness={witness}")]


SUITES = {
    "lemma41": suite_lemma41,
    "theorem44": suite_theorem44,
    "prop52": suite_prop52,
    "lemma55": suite_lemma55,
    "theorem32": suite_theorem32,
    "condition": suite_condition,
    "cuts": suite_cuts,
}


def run_suite(name: str, **options) -> list[Check]:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](**options)
