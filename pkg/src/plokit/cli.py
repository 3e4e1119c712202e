"""Command line interface: ``plokit <command> [options]``.

Maps come from ``-m/--map "0,0 1/2,1/4 3/4,1/2 1,1"`` (repeatable) and/or
``--in FILE`` (JSON generating set, or one node list per line).

Exit status: 0 success, 1 usage or parse error, 2 a verification failed,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as plio
from .chains import (
    detect_transition_chain,
    is_fundamental,
    maximal_towers,
    search_transition_chain,
    signed_orbitals,
)
from .constructions import MODEL_BUMP, crossing_pair, nested_tower, one_bump, wreath_generators
from .countability import bouncepoints, check_injectivity, corners, witness_intervals
from .errors import PLError, ResourceLimit
from .numeric import Interval, fmt_rat, rat
from .orbitals import GenSet, direction, format_word, fundamental_domain, orbitals
from .plmap import IDENTITY, boundary_slopes, compose, evaluate
from .verify import SUITES, run_verify

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _iv(A: Interval) -> list[str]:
    return [fmt_rat(A.left), fmt_rat(A.right)]


def _load(args) -> GenSet:
    maps, labels = [], []
    if getattr(args, "infile", None):
        G = plio.load_genset(Path(args.infile).read_text(encoding="utf-8"), Path(args.infile).stem)
        maps += G.generators
        labels += G.labels
    for text in getattr(args, "maps", None) or []:
        maps.append(plio.parse_map(text))
        labels.append(f"g{len(labels) + 1}")
    if not maps:
        raise UsageError("no input maps; use -m/--map or --in")
    return GenSet(Path(args.infile).stem if getattr(args, "infile", None) else "G", maps, labels)


def _emit(args, text: str, payload) -> None:
    out = plio.dumps(payload) if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _chain_json(cert) -> dict:
    return {
        "first": {"orbital": _iv(cert.first.orbital), "signature": plio.serialize_map(cert.first.signature)},
        "second": {"orbital": _iv(cert.second.orbital), "signature": plio.serialize_map(cert.second.signature)},
        "overlap": _iv(cert.overlap),
    }


def cmd_eval(args) -> int:
    G = _load(args)
    xs = [rat(x) for x in args.points]
    lines, payload = [], []
    for lbl, f in zip(G.labels, G.generators):
        vals = [evaluate(f, x) for x in xs]
        lines += [f"({x}){lbl} = {y}" for x, y in zip(xs, vals)]
        payload.append({"name": lbl, "values": [[fmt_rat(x), fmt_rat(y)] for x, y in zip(xs, vals)]})
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK


def cmd_compose(args) -> int:
    G = _load(args)
    h = IDENTITY
    for f in G.generators:
        h = compose(h, f)
    _emit(args, plio.serialize_map(h) + "\n", plio.MapDocument.from_map("product", h).to_json())
    return EXIT_OK


def cmd_orbitals(args) -> int:
    G = _load(args)
    lines, payload = [], []
    for lbl, f in zip(G.labels, G.generators):
        rows = []
        for A in orbitals(f):
            s0, s1 = boundary_slopes(f, A)
            d = direction(f, A).value
            rows.append({"orbital": _iv(A), "direction": d, "slopes": [fmt_rat(s0), fmt_rat(s1)]})
            lines.append(f"{lbl}: {A} moves {d}, initial slope {s0}, terminal slope {s1}")
        if not rows:
            lines.append(f"{lbl}: identity (no orbitals)")
        payload.append({"name": lbl, "orbitals": rows})
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK


def cmd_chains(args) -> int:
    G = _load(args)
    if args.radius is None:
        cert = detect_transition_chain(G.generators)
        if cert is None:
            text = "no transition chain among the given maps (the generated group may still have one)\n"
            payload = {"certificate": None}
        else:
            text = f"transition chain: {cert.first.orbital} crosses {cert.second.orbital}, overlap {cert.overlap}\n"
            payload = {"certificate": _chain_json(cert)}
    else:
        res = search_transition_chain(G, args.radius, args.cap)
        text = res.describe() + "\n"
        payload = {
            "radius": res.radius,
            "elements": res.elements,
            "certificate": _chain_json(res.certificate) if res.found else None,
            "words": [format_word(w, G.labels) for w in res.words] if res.found else None,
            "note": None if res.found else "absence within the radius is not a proof of local solvability",
        }
    _emit(args, text, payload)
    return EXIT_OK


def cmd_towers(args) -> int:
    G = _load(args)
    names = {f: lbl for lbl, f in zip(G.labels, G.generators)}
    lines, payload = [], []
    for T in maximal_towers(signed_orbitals(G.generators)):
        fund = is_fundamental(list(T))
        parts = [f"{p.orbital}:{names[p.signature]}" for p in T]
        lines.append(" < ".join(parts) + ("" if fund else "  (not fundamental)"))
        payload.append(
            {
                "tower": [{"orbital": _iv(p.orbital), "signature": names[p.signature]} for p in T],
                "fundamental": fund,
            }
        )
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK


def cmd_fundamental(args) -> int:
    G = _load(args)
    x = rat(args.point)
    lines, payload = [], []
    for lbl, f in zip(G.labels, G.generators):
        A = next((O for O in orbitals(f) if x in O), None)
        if A is None:
            lines.append(f"{lbl}: {x} is fixed")
            payload.append({"name": lbl, "domain": None})
            continue
        D = fundamental_domain(x, f, A)
        lines.append(f"{lbl}: orbital {A}, fundamental domain {D}")
        payload.append({"name": lbl, "orbital": _iv(A), "domain": [fmt_rat(D.lo), fmt_rat(D.hi)]})
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.depth is not None:
        towers = [nested_tower(args.depth)[1]]
    else:
        towers = maximal_towers(signed_orbitals(_load(args).generators))
    lines, payload = [], []
    for T in towers:
        W = witness_intervals(T)
        lines.append("; ".join(f"{p.orbital} -> {w}" for p, w in zip(T, W)))
        payload.append([{"orbital": _iv(p.orbital), "witness": _iv(w)} for p, w in zip(T, W)])
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK


def _pair(args):
    G = _load(args)
    if len(G) != 2:
        raise UsageError("exactly two maps are required")
    return G.generators


def cmd_bounce(args) -> int:
    pts = bouncepoints(*_pair(args))
    _emit(args, " ".join(map(fmt_rat, pts)) + "\n", [fmt_rat(b) for b in pts])
    return EXIT_OK


def cmd_corners(args) -> int:
    pts = corners(*_pair(args))
    _emit(args, " ".join(map(fmt_rat, pts)) + "\n", [fmt_rat(b) for b in pts])
    return EXIT_OK


def cmd_phi(args) -> int:
    G = _load(args)
    if args.orbital:
        lo, hi = args.orbital.split(",")
        O = Interval(rat(lo), rat(hi))
    else:
        O = orbitals(G.generators[0])[0]
    rep = check_injectivity(G.generators, O)
    lines = [f"{lbl}: {code}" for lbl, code in zip(G.labels, rep.codes)]
    lines.append(f"{rep.total} bumps, {rep.distinct_codes} distinct codes, {len(rep.collisions)} collisions")
    payload = {
        "orbital": _iv(O),
        "total": rep.total,
        "distinct_codes": rep.distinct_codes,
        "collisions": [list(c) for c in rep.collisions],
        "codes": [[fmt_rat(v) for v in c.as_sequence()] for c in rep.codes],
    }
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_build(args) -> int:
    p = [rat(v) for v in args.params]
    name = args.name
    if name == "model-bump":
        G = GenSet("model-bump", [MODEL_BUMP], ["a"])
    elif name == "one-bump":
        _need(p, 2, name)
        G = GenSet("one-bump", [one_bump(Interval(p[0], p[1]))], ["b"])
    elif name == "crossing-pair":
        G = GenSet("crossing-pair", list(crossing_pair()), ["f", "g"])
    elif name == "nested-tower":
        _need(p, 1, name)
        G = nested_tower(int(p[0]))[0]
    elif name == "wreath":
        _need(p, 4, name)
        G = wreath_generators(Interval(p[0], p[1]), Interval(p[2], p[3]))
    else:
        raise UsageError(f"unknown construction {name!r}")
    if args.format == "json":
        _emit(args, "", plio.genset_to_json(G))
    else:
        _emit(args, "".join(plio.serialize_map(f) + "\n" for f in G.generators), None)
    return EXIT_OK


def _need(params, n, name):
    if len(params) != n:
        raise UsageError(f"{name} takes {n} rational parameter(s)")


def cmd_svg(args) -> int:
    G = _load(args)
    svg = plio.render_svg(
        list(zip(G.labels, G.generators)),
        plio.SvgOptions(size=args.size, title=args.title or G.name),
    )
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = args.suite if args.suite is not None else list(SUITES)
    report = run_verify(suites, args.seed, args.size, timings=args.timings)
    _emit(args, report.to_text(), report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-m", "--map", dest="maps", action="append", metavar="NODES", help="inline node list")
    common.add_argument("--in", dest="infile", metavar="FILE", help="JSON or plain-text map file")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="plokit", description="Exact computations in PLo(I).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate maps at points")
    p.add_argument("points", nargs="+")
    p.set_defaults(func=cmd_eval)

    sub.add_parser("compose", parents=[common], help="product of the maps, left to right").set_defaults(
        func=cmd_compose
    )
    sub.add_parser("orbitals", parents=[common], help="orbitals, directions and slopes").set_defaults(
        func=cmd_orbitals
    )

    p = sub.add_parser("chains", parents=[common], help="detect or search for transition chains")
    p.add_argument("--radius", type=int, help="search the word ball of this radius")
    p.add_argument("--cap", type=int, default=20000, help="element cap for the word ball")
    p.set_defaults(func=cmd_chains)

    sub.add_parser("towers", parents=[common], help="maximal towers of the signed orbitals").set_defaults(
        func=cmd_towers
    )

    p = sub.add_parser("fundamental", parents=[common], help="fundamental domain at a point")
    p.add_argument("point")
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("witness", parents=[common], help="disjoint witness intervals of towers")
    p.add_argument("--depth", type=int, help="use nested_tower(DEPTH) instead of input maps")
    p.set_defaults(func=cmd_witness)

    sub.add_parser("bounce", parents=[common], help="bouncepoints of two maps").set_defaults(func=cmd_bounce)
    sub.add_parser("corners", parents=[common], help="corners of two maps").set_defaults(func=cmd_corners)

    p = sub.add_parser("phi", parents=[common], help="bump codes and injectivity report")
    p.add_argument("--orbital", metavar="L,R", help="shared orbital (default: first map's)")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("build", parents=[common], help="named constructions")
    p.add_argument("name", choices=["model-bump", "one-bump", "crossing-pair", "nested-tower", "wreath"])
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("svg", parents=[common], help="SVG graphs of the maps")
    p.add_argument("--size", type=int, default=400)
    p.add_argument("--title", default="")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("--suite", action="append", choices=list(SUITES), help="repeatable; default all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=100)
    p.add_argument("--timings", action="store_true", help="include wall-clock times (not reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"plokit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PLError, UsageError, OSError) as exc:
        print(f"plokit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
