"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 on domain errors (and failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import families
from .errors import Girth7Error, UnknownSuite
from .formats import parse_graph6, parse_multigraph_json, write_graph6, write_multigraph_json
from .graph import SimpleGraph

FAMILIES = ("a", "petersen", "coxeter", "cayley446", "klein", "k77trunc")


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _read_graph(path: str) -> SimpleGraph:
    lines = [ln for ln in _read_text(path).splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"{path}: no graph6 data")
    return parse_graph6(lines[0])


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs {' '.join(missing)}")


def build_family(args: argparse.Namespace) -> SimpleGraph:
    from .maps import klein_map
    from .schemes import k77_truncation

    fam = args.family
    if fam == "a":
        _need(args, "n")
        return families.a_graph(args.n)
    if fam == "petersen":
        _need(args, "n", "k")
        return families.gen_petersen(args.n, args.k)
    if fam == "coxeter":
        return families.coxeter()
    if fam == "cayley446":
        _need(args, "i")
        return families.cayley_446(args.i)
    if fam == "klein":
        return klein_map().skeleton
    if fam == "k77trunc":
        return k77_truncation()[0]
    raise UsageError(f"unknown family {fam!r}")


# -- subcommands ----------------------------------------------------------------------


def cmd_construct(args) -> tuple[int, Any]:
    g = build_family(args)
    text = write_graph6(g)
    if args.json:
        return 0, {"family": args.family, "graph6": text, "vertices": g.n, "edges": g.m}
    return 0, text


def cmd_analyze(args) -> tuple[int, Any]:
    from .cycles import edge_epsilons, girth, girth_cycles, signatures
    from .symmetry import arc_orbits, automorphism_group, edge_orbits

    g = _read_graph(args.graph)
    group = automorphism_group(g)
    info: dict[str, Any] = {"vertices": g.n, "edges": g.m, "girth": girth(g)}
    if info["girth"] is not None:
        cycles = girth_cycles(g)
        eps = edge_epsilons(g, cycles)
        info["girth_cycles"] = len(cycles)
        info["epsilon_values"] = sorted(set(eps))
        if all(g.degree(v) == 3 for v in range(g.n)):
            sigs = sorted({tuple(s) for s in signatures(g, cycles)})
            info["signatures"] = [list(s) for s in sigs]
            info["girth_regular"] = len(sigs) == 1
    info["aut_order"] = group.order()
    info["vertex_orbits"] = len(group.orbits())
    info["edge_orbit_sizes"] = sorted(len(o) for o in edge_orbits(group))
    info["vertex_transitive"] = info["vertex_orbits"] == 1
    info["edge_transitive"] = len(info["edge_orbit_sizes"]) <= 1
    info["arc_transitive"] = len(arc_orbits(group)) <= 1
    if args.json:
        return 0, info
    return 0, "\n".join(f"{k}: {json.dumps(v)}" for k, v in info.items())


def cmd_classify(args) -> tuple[int, Any]:
    from .classify import classify

    report = classify(_read_graph(args.graph))
    if args.json:
        return 0, report.to_json_obj()
    sig = ",".join(map(str, report.signature))
    return 0, f"case {report.case_number} {report.case} signature ({sig})"


def cmd_isomorphic(args) -> tuple[int, Any]:
    from .symmetry import are_isomorphic

    iso = are_isomorphic(_read_graph(args.first), _read_graph(args.second))
    if args.json:
        return 0, {"isomorphic": iso is not None, "isomorphism": list(iso) if iso is not None else None}
    return 0, "not isomorphic" if iso is None else " ".join(map(str, iso))


def cmd_truncate(args) -> tuple[int, Any]:
    from .schemes import truncate

    base, scheme = parse_multigraph_json(_read_text(args.base))
    if scheme is None:
        raise UsageError("truncate needs a multigraph JSON with a scheme")
    g, _ = truncate(base, scheme)
    text = write_graph6(g)
    return 0, {"graph6": text, "vertices": g.n} if args.json else text


def cmd_recover(args) -> tuple[int, Any]:
    from .schemes import recover_truncation

    w = recover_truncation(_read_graph(args.graph))
    obj = json.loads(write_multigraph_json(w.base, w.scheme))
    if args.json:
        return 0, {"base": obj, "arc_to_vertex": list(w.arc_to_vertex)}
    return 0, obj


def cmd_map(args) -> tuple[int, Any]:
    from .maps import (
        euler_characteristic,
        is_regular_map,
        is_rotary,
        map_from_girth_cycles,
        map_type,
        parse_map_json,
        write_map_json,
    )

    if args.action == "build":
        m = map_from_girth_cycles(_read_graph(args.input))
        return 0, json.loads(write_map_json(m))
    m = parse_map_json(_read_text(args.input))
    if args.action == "check-rotary":
        rotary, regular = is_rotary(m), is_regular_map(m)
        if args.json:
            return 0, {"rotary": rotary, "regular": regular}
        return 0, f"rotary: {str(rotary).lower()}\nregular: {str(regular).lower()}"
    chi = euler_characteristic(m)
    kind = map_type(m)
    if args.json:
        return 0, {
            "vertices": m.skeleton.n,
            "edges": m.skeleton.m,
            "faces": len(m.faces),
            "euler_characteristic": chi,
            "type": list(kind) if isinstance(kind, tuple) else kind,
        }
    return 0, str(chi)


def cmd_signatures(args) -> tuple[int, Any]:
    from .classify import candidate_signatures, realizable_signatures

    sigs = realizable_signatures() if args.realizable else candidate_signatures()
    if args.json:
        return 0, [list(s) for s in sigs]
    return 0, "\n".join(" ".join(map(str, s)) for s in sigs)


def cmd_verify(args) -> tuple[int, Any]:
    from .verify import SUITES, run_suite

    if args.suite not in SUITES:
        raise UnknownSuite(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    options: dict[str, Any] = {}
    if args.suite == "lemma41" and args.n is not None:
        options["n_values"] = [args.n]
    if args.suite == "theorem44" and args.i is not None:
        options["i_values"] = [args.i]
    if args.suite == "cuts":
        options = {"graph": args.graph or "coxeter", "k": args.k if args.k is not None else 6, "threads": args.threads}
    checks = run_suite(args.suite, **options)
    status = 0 if all(c.ok for c in checks) else 1
    if args.json:
        return status, {
            "suite": args.suite,
            "passed": status == 0,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        }
    return status, "\n".join(c.line() for c in checks)


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    common.add_argument("--threads", type=int, default=1, help="worker processes for enumeration kernels")
    common.add_argument("--out", metavar="FILE", help="write the payload to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="girth7", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a named graph and print graph6")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", parents=[common], help="girth, signatures and symmetry of a graph")
    p.add_argument("graph", help="graph6 file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="classify a cubic vertex-transitive girth-7 graph")
    p.add_argument("graph", help="graph6 file, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("isomorphic", parents=[common], help="test two graphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("truncate", parents=[common], help="truncate a multigraph with a dihedral scheme")
    p.add_argument("base", help="multigraph JSON file with a scheme")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("recover", parents=[common], help="recover base and scheme from a (0,1,1) graph")
    p.add_argument("graph", help="graph6 file, or - for stdin")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("map", parents=[common], help="trivalent map utilities")
    p.add_argument("action", choices=("build", "check-rotary", "euler"))
    p.add_argument("input", help="graph6 file for build, map JSON otherwise")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("signatures", parents=[common], help="list candidate or realizable signatures")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--candidates", action="store_true")
    group.add_argument("--realizable", action="store_true")
    p.set_defaults(func=cmd_signatures)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help="lemma41 | theorem44 | prop52 | lemma55 | theorem32 | condition | cuts")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--graph", help="graph for the cuts suite: coxeter or pet135")
    p.set_defaults(func=cmd_verify)
    return parser


def _render(payload: Any) -> str:
    if isinstance(payload, str):
        return payload
    return json.dumps(payload, sort_keys=True)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, payload = args.func(args)
    except (UsageError, UnknownSuite) as exc:
        print(f"girth7: {exc}", file=sys.stderr)
        return 2
    except Girth7Error as exc:
        print(f"girth7: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"girth7: {exc}", file=sys.stderr)
        return 1
    text = _render(payload) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def run(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
