"""Signature filters and the five-way classification of cubic vertex-transitive girth-7 graphs."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Any, NamedTuple

from .cycles import edge_epsilons, girth, girth_cycles, signatures
from .errors import (
    GirthNot7,
    NotConnected,
    NotCubic,
    NotGirthRegular,
    NotVertexTransitive,
    TheoremViolation,
    Unsorted,
)
from .graph import SimpleGraph, is_connected
from .symmetry import are_isomorphic, arc_orbits, automorphism_group, edge_orbits

Triple = tuple[int, int, int]

SUM_BOUND = 17
PETERSEN_CASES = ((13, 5), (15, 4), (17, 4))

# Survive every counting filter but have no vertex-transitive realization;
# the classifier refuses them structurally.
STRUCTURALLY_EXCLUDED: tuple[Triple, ...] = ((4, 6, 6), (5, 5, 6))

CASES = {
    (0, 1, 1): (1, "Truncation"),
    (2, 2, 2): (2, "RotaryMap"),
    (4, 4, 4): (3, "Coxeter"),
    (4, 4, 6): (4, "AFamily"),
    (4, 5, 5): (5, "Petersen"),
}


def _check_sorted(a: int, b: int, c: int) -> None:
    if not 0 <= a <= b <= c:
        raise Unsorted(f"({a}, {b}, {c}) is not a sorted triple of non-negative integers")


def lemma_p1_filter(a: int, b: int, c: int) -> bool:
    """Basic counting constraints on a signature of a cubic vertex-transitive girth-7 graph."""
    _check_sorted(a, b, c)
    if (a + b + c) % 2:
        return False
    if a == 0 and (b, c) != (1, 1):
        return False
    if a >= 1 and a + b <= c:
        return False
    return a + 4 >= c and a + 8 >= b + c


def prop_sum_bound(a: int, b: int, c: int) -> bool:
    _check_sorted(a, b, c)
    return a + b + c <= SUM_BOUND


def odd_twice_rule(a: int, b: int, c: int) -> bool:
    """Every odd value in the triple occurs exactly twice."""
    _check_sorted(a, b, c)
    counts = Counter((a, b, c))
    return all(k == 2 for value, k in counts.items() if value % 2)


def condition_satisfiable(ell: int, eps: int) -> tuple[int, ...] | None:
    """Least multiset of ``ell`` values in {0,1,2,3} summing to 7*eps/2 with at most one zero
    and every nonzero value repeated at least four times, or ``None``."""
    if ell < 1:
        raise ValueError("ell must be positive")
    if (7 * eps) % 2:
        return None
    target = 7 * eps // 2
    found = []
    for c1, c2, c3 in product(range(ell + 1), repeat=3):
        c0 = ell - c1 - c2 - c3
        if c0 not in (0, 1):
            continue
        if any(0 < k < 4 for k in (c1, c2, c3)):
            continue
        if c1 + 2 * c2 + 3 * c3 == target:
            found.append((0,) * c0 + (1,) * c1 + (2,) * c2 + (3,) * c3)
    return min(found) if found else None


def _singleton_value(triple: Triple) -> int | None:
    counts = Counter(triple)
    singles = [v for v, k in counts.items() if k == 1]
    return singles[0] if singles else None


def passes_condition(a: int, b: int, c: int) -> bool:
    """Apply the r-number condition when some value occurs exactly once."""
    single = _singleton_value((a, b, c))
    if single is None:
        return True
    return condition_satisfiable((a + b + c) // 2, single) is not None


def candidate_signatures() -> list[Triple]:
    out = []
    for a in range(SUM_BOUND + 1):
        for b in range(a, SUM_BOUND + 1):
            for c in range(b, SUM_BOUND + 1 - a - b):
                if not (prop_sum_bound(a, b, c) and lemma_p1_filter(a, b, c) and odd_twice_rule(a, b, c)):
                    continue
                if passes_condition(a, b, c):
                    out.append((a, b, c))
    return out


def realizable_signatures() -> list[Triple]:
    return [t for t in candidate_signatures() if t not in STRUCTURALLY_EXCLUDED]


# -- classification -----------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    case: str
    case_number: int
    signature: Triple
    girth: int
    witness: dict[str, Any]
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "case": self.case,
            "signature": list(self.signature),
            "girth": self.girth,
            "witness": self.witness,
            "diagnostics": self.diagnostics,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def check_preconditions(g: SimpleGraph) -> Triple:
    """Validate the input and return its common signature."""
    bad = [v for v in range(g.n) if g.degree(v) != 3]
    if bad or g.n == 0:
        raise NotCubic(f"vertex {bad[0]} has degree {g.degree(bad[0])}" if bad else "empty graph")
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    gi = girth(g)
    if gi != 7:
        raise GirthNot7(gi)
    group = automorphism_group(g)
    if len(group.orbits()) != 1:
        raise NotVertexTransitive(f"{len(group.orbits())} vertex orbits")
    sigs = signatures(g)
    for v, s in enumerate(sigs):
        if s != sigs[0]:
            raise NotGirthRegular(0, v, sigs[0], s)
    return sigs[0]  # type: ignore[return-value]


def _witness(g: SimpleGraph, sig: Triple) -> dict[str, Any]:
    from . import families, maps, schemes
    from .formats import write_multigraph_json

    if sig == (0, 1, 1):
        w = schemes.recover_truncation(g)
        if not schemes.is_arc_transitive_scheme(w.base, w.scheme):
            raise TheoremViolation("recovered dihedral scheme is not arc-transitive")
        return {
            "base": json.loads(write_multigraph_json(w.base, w.scheme)),
            "arc_to_vertex": list(w.arc_to_vertex),
            "arc_transitive_scheme": True,
        }
    if sig == (2, 2, 2):
        m = maps.map_from_girth_cycles(g)
        if not maps.is_rotary(m):
            raise TheoremViolation("girth-cycle map is not rotary")
        chi = maps.euler_characteristic(m)
        if chi != maps.expected_euler_characteristic(g.n, 7):
            raise TheoremViolation("Euler characteristic disagrees with n(3/7 - 1/2)")
        return {"faces": [list(f) for f in m.faces], "type": [7, 3], "euler_characteristic": chi, "rotary": True}
    if sig == (4, 4, 4):
        iso = are_isomorphic(g, families.coxeter())
        if iso is None:
            raise TheoremViolation("(4,4,4) graph is not isomorphic to the Coxeter graph")
        return {"graph": "coxeter", "isomorphism": list(iso)}
    if sig == (4, 4, 6):
        if g.n % 12:
            raise TheoremViolation(f"(4,4,6) graph on {g.n} vertices; order must be divisible by 12")
        n = g.n // 4
        iso = are_isomorphic(g, families.a_graph(n))
        if iso is None:
            raise TheoremViolation(f"(4,4,6) graph is not isomorphic to A({n})")
        return {"graph": "a", "n": n, "isomorphism": list(iso)}
    if sig == (4, 5, 5):
        for n, k in PETERSEN_CASES:
            if 2 * n == g.n:
                iso = are_isomorphic(g, families.gen_petersen(n, k))
                if iso is not None:
                    return {"graph": "petersen", "n": n, "k": k, "isomorphism": list(iso)}
        raise TheoremViolation("(4,5,5) graph matches none of Pet(13,5), Pet(15,4), Pet(17,4)")
    raise TheoremViolation(f"vertex-transitive girth-7 graph has unrealizable signature {sig}")


def classify(g: SimpleGraph) -> ClassificationReport:
    sig = check_preconditions(g)
    if sig not in realizable_signatures():
        raise TheoremViolation(f"vertex-transitive girth-7 graph has unrealizable signature {sig}")
    number, case = CASES[sig]
    witness = _witness(g, sig)
    group = automorphism_group(g)
    diagnostics = {
        "vertices": g.n,
        "edges": g.m,
        "girth_cycles": len(girth_cycles(g)),
        "aut_order": group.order(),
        "edge_orbits": len(edge_orbits(group)),
        "arc_transitive": len(arc_orbits(group)) == 1,
    }
    return ClassificationReport(case, number, sig, 7, witness, diagnostics)


def verify_witness(g: SimpleGraph, report: ClassificationReport) -> bool:
    """Re-check a report's witness from scratch."""
    from . import families, maps, schemes
    from .formats import parse_multigraph_json
    from .symmetry import is_automorphism  # noqa: F401

    w = report.witness

    def maps_onto(p, h) -> bool:
        return sorted(p) == list(range(g.n)) and h.n == g.n and all(h.has_edge(p[u], p[v]) for u, v in g.edges)

    if report.case == "Truncation":
        base, scheme = parse_multigraph_json(w["base"])
        t, _ = schemes.truncate(base, scheme)
        a2v = w["arc_to_vertex"]
        same = t.n == g.n and all(g.has_edge(a2v[a], a2v[b]) for a, b in t.edges)
        return same and schemes.is_arc_transitive_scheme(base, scheme)
    if report.case == "RotaryMap":
        m = maps.TrivalentMap.from_faces(g, w["faces"])
        return maps.is_rotary(m) and maps.euler_characteristic(m) == w["euler_characteristic"]
    if report.case == "Coxeter":
        return maps_onto(w["isomorphism"], families.coxeter())
    if report.case == "AFamily":
        return maps_onto(w["isomorphism"], families.a_graph(w["n"]))
    if report.case == "Petersen":
        return maps_onto(w["isomorphism"], families.gen_petersen(w["n"], w["k"]))
    return False


class CorollaryOutcome(NamedTuple):
    holds: bool
    vacuous: bool


def edge_girth_regular_implies_arc_transitive(g: SimpleGraph) -> CorollaryOutcome:
    """If every edge lies on the same number of girth cycles, the graph must be arc-transitive."""
    check_preconditions(g)
    eps = edge_epsilons(g, girth_cycles(g))
    if len(set(eps)) != 1:
        return CorollaryOutcome(True, True)
    return CorollaryOutcome(len(arc_orbits(automorphism_group(g))) == 1, False)
