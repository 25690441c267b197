"""Command-line front end.

Subcommands: dist, canon, twin, coords, geodesic, oracle, check, plot.
Exit codes are a stable contract: 0 success, 1 domain failure (property
violation, SamePoint, NotAJunction, insufficient depth), 2 usage or parse
error, 3 I/O error.  ``--json`` switches structured commands to a
deterministic envelope {"command", "inputs", "result", "exact"} with
rationals rendered as {"num", "den"} in lowest terms.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from random import Random

from .codes import MalformedCode, canonicalize, is_junction, parse_code, same_point, twin
from .geodesic import DepthTooSmall, SamePoint, geodesic
from .geometry import to_barycentric, to_cartesian
from .levelgraph import MAX_LEVEL, build_level_graph, oracle_distance, project
from .metric import distance
from .render import geodesic_svg
from .sampling import random_code

ORACLE_GAP_FACTOR = 4  # oracle agreement tolerance is 4/2^level


def _frac_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def _frac_text(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _emit(args, command: str, inputs: list[str], result: dict, exact: bool, plain: str) -> None:
    if getattr(args, "json", False):
        envelope = {"command": command, "inputs": inputs, "result": result, "exact": exact}
        print(json.dumps(envelope))
    else:
        print(plain)


def cmd_dist(args) -> int:
    a = parse_code(args.codeA)
    b = parse_code(args.codeB)
    r = distance(a, b)
    result = {
        "distance": _frac_json(r.distance),
        "split_index": r.split_index,
        "route": r.route,
        "sum_p": _frac_json(r.sum_p),
        "sum_edge": _frac_json(r.sum_edge),
    }
    plain = (
        f"{_frac_text(r.distance)} (≈{float(r.distance):.6f}), k={r.split_index}, "
        f"route={r.route}, sum_p={_frac_text(r.sum_p)}, sum_edge={_frac_text(r.sum_edge)}"
    )
    _emit(args, "dist", [str(a), str(b)], result, True, plain)
    return 0


def cmd_canon(args) -> int:
    c = canonicalize(parse_code(args.code))
    _emit(args, "canon", [str(c)], {"canonical": str(c)}, False, str(c))
    return 0


def cmd_twin(args) -> int:
    c = parse_code(args.code)
    if not is_junction(c):
        print("NotAJunction")
        return 1
    t = twin(c)
    _emit(args, "twin", [str(c)], {"twin": str(t)}, False, str(t))
    return 0


def cmd_coords(args) -> int:
    c = parse_code(args.code)
    bary = to_barycentric(c)
    cart = to_cartesian(bary)
    result = {
        "barycentric": [_frac_json(comp) for comp in bary.components()],
        "cartesian": [cart.x, cart.y],
    }
    plain = (
        "barycentric = ("
        + ", ".join(_frac_text(comp) for comp in bary.components())
        + f"); cartesian = ({cart.x:.6f}, {cart.y:.6f})"
    )
    _emit(args, "coords", [str(c)], result, True, plain)
    return 0


def cmd_geodesic(args) -> int:
    a = parse_code(args.codeA)
    b = parse_code(args.codeB)
    try:
        geo = geodesic(a, b, args.depth)
    except SamePoint:
        print("SamePoint", file=sys.stderr)
        return 1
    except DepthTooSmall as exc:
        print(f"DepthTooSmall: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(geo.to_json()))
    return 0


def cmd_oracle(args) -> int:
    if not 1 <= args.level <= MAX_LEVEL:
        print(f"level must be within 1..{MAX_LEVEL}", file=sys.stderr)
        return 2
    a = parse_code(args.codeA)
    b = parse_code(args.codeB)
    approx = oracle_distance(a, b, args.level)
    exact = distance(a, b).distance
    gap = abs(approx - exact)
    result = {
        "level": args.level,
        "oracle": _frac_json(approx),
        "exact": _frac_json(exact),
        "gap": _frac_json(gap),
    }
    plain = (
        f"oracle={_frac_text(approx)} (≈{float(approx):.6f}), "
        f"exact={_frac_text(exact)} (≈{float(exact):.6f}), gap={_frac_text(gap)}"
    )
    _emit(args, "oracle", [str(a), str(b)], result, True, plain)
    return 0


def cmd_check(args) -> int:
    if args.samples < 1:
        print("samples must be >= 1", file=sys.stderr)
        return 2
    if not 1 <= args.level <= MAX_LEVEL:
        print(f"level must be within 1..{MAX_LEVEL}", file=sys.stderr)
        return 2
    rng = Random(args.seed)
    tolerance = Fraction(ORACLE_GAP_FACTOR, 1 << args.level)
    build_level_graph(args.level)
    stream = []
    failures = []
    passed = 0
    for i in range(args.samples):
        x = random_code(rng)
        y = random_code(rng)
        bad = []
        dxy = distance(x, y)
        if distance(y, x).distance != dxy.distance:
            bad.append("symmetry")
        reps_x = [canonicalize(x)] + ([twin(x)] if is_junction(x) else [])
        reps_y = [canonicalize(y)] + ([twin(y)] if is_junction(y) else [])
        values = {distance(rx, ry).distance for rx in reps_x for ry in reps_y}
        if len(values) != 1:
            bad.append("representation-independence")
        stream.extend((x, y))
        if len(stream) >= 3:
            u, v, w = stream[-3], stream[-2], stream[-1]
            if distance(u, w).distance > distance(u, v).distance + distance(v, w).distance:
                bad.append("triangle-inequality")
        if abs(dxy.distance - oracle_distance(x, y, args.level)) > tolerance:
            bad.append("oracle-agreement")
        if bad:
            failures.append(f"sample {i}: {','.join(bad)} violated for {x} {y}")
        else:
            passed += 1
    for line in failures:
        print(line)
    print(f"{passed}/{args.samples} passed")
    return 0 if passed == args.samples else 1


def cmd_plot(args) -> int:
    a = parse_code(args.codeA)
    b = parse_code(args.codeB)
    try:
        geo = geodesic(a, b, args.depth)
    except SamePoint:
        print("SamePoint", file=sys.stderr)
        return 1
    except DepthTooSmall as exc:
        print(f"DepthTooSmall: {exc}", file=sys.stderr)
        return 1
    svg = geodesic_svg(a, b, geo)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gasket",
        description="Exact shortest-path metric on the Sierpinski gasket from symbolic addresses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="exact distance between two addressed points")
    p.add_argument("codeA")
    p.add_argument("codeB")
    p.add_argument("--json", action="store_true", help="emit the JSON envelope")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("canon", help="canonical form of an address")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("twin", help="second representation of a junction point")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_twin)

    p = sub.add_parser("coords", help="exact barycentric and float Cartesian coordinates")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("geodesic", help="shortest-path polyline as JSON")
    p.add_argument("codeA")
    p.add_argument("codeB")
    p.add_argument("--depth", type=int, required=True, help="truncation level")
    p.set_defaults(func=cmd_geodesic)

    p = sub.add_parser("oracle", help="level-n graph approximation and its gap vs. exact")
    p.add_argument("codeA")
    p.add_argument("codeB")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="seeded random sweep of metric properties")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--level", type=int, default=8, help="oracle graph level")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("plot", help="render wireframe plus geodesic to an SVG file")
    p.add_argument("codeA")
    p.add_argument("codeB")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("-o", "--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors, 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MalformedCode as exc:
        print(f"MalformedCode at offset {exc.offset}: {exc.reason}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
