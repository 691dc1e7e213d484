"""Command line interface.

Exit codes: 0 success, 1 malformed code string, 2 code that cannot be
embedded as a benzenoid, 3 usage errors (bad arguments, unknown names).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import enumeration, families
from .codes import Code, classify, parse_code, winding
from .errors import (
    BechexError,
    Disconnected,
    Holed,
    InvalidSymbols,
    NotClosed,
    NotFound,
    ParamOutOfRange,
    SelfIntersecting,
)
from .lattice import Benzenoid, embed
from .render import RenderOptions, to_svg, to_tikz

SCHEMA_VERSION = 1

_EXIT_OK = 0
_EXIT_BAD_CODE = 1
_EXIT_NOT_EMBEDDABLE = 2
_EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for geometry."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(_EXIT_USAGE)


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _parse_or_die(text: str) -> Code:
    try:
        return parse_code(text)
    except InvalidSymbols as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(_EXIT_BAD_CODE)


def _analyze_one(code: Code) -> dict:
    info = classify(code)
    payload = {
        "code": str(code),
        "canonical": str(code.canonical()),
        "length": len(code),
        "winding": winding(code),
        "deficit": info.deficit,
        "class": info.kind.value,
    }
    try:
        shape = embed(code)
    except BechexError as exc:
        payload["embeddable"] = False
        payload["reason"] = type(exc).__name__
    else:
        payload["embeddable"] = True
        payload["hexagons"] = shape.hexagons
        payload["condensation"] = shape.condensation.value
    return payload


def _analyze_lines(payload: dict):
    yield f"code:         {payload['code']}"
    yield f"canonical:    {payload['canonical']}"
    yield f"length:       {payload['length']}"
    yield f"winding:      {payload['winding']}"
    deficit = payload["deficit"]
    yield f"deficit:      {'undefined' if deficit is None else deficit}"
    yield f"class:        {payload['class']}"
    if payload["embeddable"]:
        yield f"hexagons:     {payload['hexagons']}"
        yield f"condensation: {payload['condensation']}"
    else:
        yield f"embeddable:   no ({payload['reason']})"


def _cmd_analyze(args) -> int:
    texts = []
    if args.stdin:
        texts = [line.strip() for line in sys.stdin if line.strip()]
    elif args.code is not None:
        texts = [args.code]
    else:
        print("error: provide a code or --stdin", file=sys.stderr)
        return _EXIT_USAGE
    results = [_analyze_one(_parse_or_die(t)) for t in texts]
    if args.json:
        _emit({"results": results}, True, [])
    else:
        for i, payload in enumerate(results):
            if i:
                print()
            for line in _analyze_lines(payload):
                print(line)
    return _EXIT_OK


def _cmd_canonical(args) -> int:
    code = _parse_or_die(args.code)
    canon = code.canonical()
    _emit({"code": str(code), "canonical": str(canon)}, args.json, [str(canon)])
    return _EXIT_OK


def _cmd_validate(args) -> int:
    code = _parse_or_die(args.code)
    try:
        shape = embed(code)
    except BechexError as exc:
        payload = {"code": str(code), "valid": False, "reason": type(exc).__name__}
        _emit(payload, args.json, [f"invalid: {type(exc).__name__}: {exc}"])
        return _EXIT_NOT_EMBEDDABLE
    payload = {
        "code": str(code),
        "valid": True,
        "hexagons": shape.hexagons,
        "condensation": shape.condensation.value,
    }
    _emit(payload, args.json, [f"valid: {shape.hexagons} hexagon(s), {shape.condensation.value}"])
    return _EXIT_OK


def _embed_or_die(code: Code) -> Benzenoid:
    try:
        return embed(code)
    except (NotClosed, SelfIntersecting, Disconnected, Holed) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        raise SystemExit(_EXIT_NOT_EMBEDDABLE)


def _cmd_embed(args) -> int:
    code = _parse_or_die(args.code)
    shape = _embed_or_die(code)
    cells = [list(c) for c in shape.cells]
    if args.cells_out:
        with open(args.cells_out, "w", encoding="utf-8") as fh:
            for q, r in shape.cells:
                fh.write(f"{q} {r}\n")
    payload = {
        "code": str(code),
        "canonical": str(shape.code),
        "hexagons": shape.hexagons,
        "condensation": shape.condensation.value,
        "cells": cells,
    }
    _emit(payload, args.json, [f"{q} {r}" for q, r in shape.cells])
    return _EXIT_OK


def _read_cells(path: str):
    cells = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                print(f"error: bad cell line {raw!r}", file=sys.stderr)
                raise SystemExit(_EXIT_USAGE)
            cells.append((int(parts[0]), int(parts[1])))
    return tuple(cells)


def _cmd_render(args) -> int:
    if args.cells:
        cells = _read_cells(args.cells)
        if not cells:
            print("error: empty cell file", file=sys.stderr)
            return _EXIT_USAGE
    else:
        code = _parse_or_die(args.code)
        cells = _embed_or_die(code).cells
    options = RenderOptions(
        edge_length=args.edge_length,
        label_cells=args.labels,
        stroke=args.stroke,
        fill=args.fill,
    )
    text = to_svg(cells, options) if args.format == "svg" else to_tikz(cells, options)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return _EXIT_OK


def _cmd_family(args) -> int:
    if args.list:
        if args.json:
            payload = {
                "families": [
                    {"id": fid, "description": families.family_description(fid)}
                    for fid in families.FAMILY_IDS
                ]
            }
            _emit(payload, True, [])
        else:
            for fid in families.FAMILY_IDS:
                print(f"{fid:10s} {families.family_description(fid)}")
        return _EXIT_OK
    if not args.family:
        print("error: provide a family id or --list", file=sys.stderr)
        return _EXIT_USAGE
    try:
        code = families.generate(args.family, *args.params)
        h = families.expected_h(args.family, *args.params)
        cd = families.expected_cd(args.family, *args.params)
    except (NotFound, ParamOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    payload = {
        "family": args.family.lower(),
        "params": list(args.params),
        "code": str(code),
        "canonical": str(code.canonical()),
        "hexagons": h,
        "deficit": cd,
    }
    _emit(
        payload,
        args.json,
        [f"code:     {code}", f"hexagons: {h}", f"deficit:  {cd}"],
    )
    return _EXIT_OK


def _compound_payload(item: families.NamedCompound) -> dict:
    data = asdict(item)
    data["names"] = list(item.names)
    data["kind"] = item.kind.value
    return data


def _cmd_lookup(args) -> int:
    if args.all:
        items = families.compounds()
        if args.json:
            _emit({"compounds": [_compound_payload(i) for i in items]}, True, [])
        else:
            for item in items:
                print(f"{item.bec:24s} h={item.hexagons:<3d} {item.name}")
        return _EXIT_OK
    if not args.query:
        print("error: provide a name, a code, or --all", file=sys.stderr)
        return _EXIT_USAGE
    try:
        item = families.lookup(args.query)
    except NotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    payload = _compound_payload(item)
    lines = [
        f"name:     {item.name}",
        f"code:     {item.bec}",
        f"hexagons: {item.hexagons}",
        f"class:    {item.kind.value}",
        f"deficit:  {item.deficit}",
        f"formula:  {item.formula}",
    ]
    if item.cas:
        lines.append(f"cas:      {item.cas}")
    if len(item.names) > 1:
        lines.append("aka:      " + "; ".join(item.names[1:]))
    _emit(payload, args.json, lines)
    return _EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.hexagons < 1:
        print("error: --hexagons must be at least 1", file=sys.stderr)
        return _EXIT_USAGE
    config = enumeration.SearchConfig(
        h_max=args.hexagons,
        workers=args.threads,
        out_dir=args.out,
        resume=args.resume,
    )
    try:
        reports = enumeration.run_search(config)
    except BechexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    if args.json:
        _emit({"levels": [r.to_dict() for r in reports]}, True, [])
    else:
        print(f"{'h':>3s} {'count':>10s} {'max_cd':>6s} {'extremal':>9s}")
        for r in reports:
            print(f"{r.h:3d} {r.count:10d} {r.mcd:6d} {r.ex:9d}")
        if args.out:
            print(f"per-level files written to {args.out}")
    return _EXIT_OK


def _cmd_unbranched_max(args) -> int:
    if args.hexagons < 2:
        print("error: --hexagons must be at least 2", file=sys.stderr)
        return _EXIT_USAGE
    value, witnesses = enumeration.max_cd_unbranched_benzenoids(args.hexagons)
    payload = {
        "hexagons": args.hexagons,
        "max_deficit": value,
        "witnesses": [str(w) for w in witnesses],
    }
    lines = [f"max deficit over unbranched benzenoids with h={args.hexagons}: {value}"]
    lines += [f"  {w}" for w in witnesses]
    _emit(payload, args.json, lines)
    return _EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bechex", description="Boundary edge code toolkit for benzenoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine readable output")
        return p

    p = add("analyze", _cmd_analyze, "winding, deficit and convexity class of a code")
    p.add_argument("code", nargs="?", help="boundary edge code, e.g. 5351")
    p.add_argument("--stdin", action="store_true", help="read one code per line from stdin")

    p = add("canonical", _cmd_canonical, "canonical rotation/reflection form of a code")
    p.add_argument("code")

    p = add("validate", _cmd_validate, "check that a code closes up into a benzenoid")
    p.add_argument("code")

    p = add("embed", _cmd_embed, "axial cells of the benzenoid described by a code")
    p.add_argument("code")
    p.add_argument("--cells-out", metavar="FILE", help="write one 'q r' pair per line")

    p = add("render", _cmd_render, "draw a code or a cell file as SVG or TikZ")
    p.add_argument("code", nargs="?")
    p.add_argument("--cells", metavar="FILE", help="read 'q r' lines instead of embedding a code")
    p.add_argument("--format", choices=("svg", "tikz"), default="svg")
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--edge-length", type=float, default=30.0)
    p.add_argument("--labels", action="store_true", help="label each cell with its coordinates")
    p.add_argument("--stroke", default="black")
    p.add_argument("--fill", default="none")

    p = add("family", _cmd_family, "generate a parametric benzenoid family member")
    p.add_argument("family", nargs="?", help="family id, see --list")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--list", action="store_true", help="list known families")

    p = add("lookup", _cmd_lookup, "look up a named small benzenoid")
    p.add_argument("query", nargs="?", help="compound name or boundary edge code")
    p.add_argument("--all", action="store_true", help="print the whole dataset")

    p = add("enumerate", _cmd_enumerate, "enumerate all benzenoids up to a hexagon count")
    p.add_argument("--hexagons", type=int, required=True, metavar="H")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", metavar="DIR", help="write per-level code/report files")
    p.add_argument("--resume", action="store_true", help="reuse level files found in --out")

    p = add("unbranched-max", _cmd_unbranched_max, "largest deficit over unbranched benzenoids")
    p.add_argument("--hexagons", type=int, required=True, metavar="H")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
