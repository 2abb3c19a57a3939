"""Command-line entry point: ``hypercat <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import subdigon as sd
from .hypercatalan import TruncationSpec, TypeVector, count_types, hyper_catalan, vef
from .series import (
    CeilingError, build_S, build_S_layered, check_ceilings, coefficient_report,
    report_csv, verify_layer_zero,
)
from .solver import GeometricPoly, approx_root, convergence_table, newton_root, to_decimal
from .viz import DEFAULT_STAGE_FRAMES, animate_merge, emit_smil, write_frames

DEFAULT_MAX_TYPES = 10**6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one-line diagnostic instead of usage + message
        raise UsageError(message)


def _level_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--level", choices=("vertex", "edge", "face"), required=True)
    p.add_argument("--d", type=int, required=True, help="level bound")
    p.add_argument("--q", type=int, default=None, help="largest polygon is a (q+1)-gon")
    p.add_argument("--force", action="store_true", help="skip the size guardrails")
    return p


def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    level = _level_parser()
    parser = _Parser(prog="hypercat", description="Hyper-Catalan numbers, subdigons and layered series.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("count", parents=[common], help="hyper-Catalan number of a type")
    p.add_argument("type", help='type vector, e.g. "[m2=3]"')

    p = sub.add_parser("vef", parents=[common], help="vertex/edge/face counts of a type")
    p.add_argument("type")

    p = sub.add_parser("enumerate", parents=[common], help="list subdigons")
    p.add_argument("--type", dest="type_vector", default=None, help="enumerate one type instead of a level")
    p.add_argument("--level", choices=("vertex", "edge", "face"))
    p.add_argument("--d", type=int)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("series", parents=[common, level], help="truncated series S or S_L")
    p.add_argument("--layered", action="store_true")
    p.add_argument("--csv", action="store_true", help="coefficient table instead of the polynomial")

    sub.add_parser("verify", parents=[common, level], help="check h(S_L) vanishes at a level")

    p = sub.add_parser("solve", parents=[common], help="approximate a root of 1 - x + sum a_k x^k")
    p.add_argument("--coeff", action="append", default=[], metavar="K=P/Q", help="coefficient a_k (repeatable)")
    p.add_argument("--level", choices=("vertex", "edge", "face"), default="face")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, default=None, help="defaults to the polynomial degree on face levels")
    p.add_argument("--digits", type=int, default=12)
    p.add_argument("--table", action="store_true", help="CSV of every level 0..d")
    p.add_argument("--newton", type=int, default=None, metavar="ITERS", help="also run Newton from x0=1")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("animate", parents=[common], help="write SVG frames of the merge animation")
    p.add_argument("subdigon", help='e.g. "(2;|,|)"')
    p.add_argument("--frames", type=int, default=None, help="frames per moving stage (default 1/20/30/25)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--smil", action="store_true", help="also write animation.svg with SMIL timing")
    p.add_argument("--mirror", action="store_true", help="attach the first child on the right")
    p.add_argument("--width", type=int, default=480)
    return parser


def _max_types() -> int:
    raw = os.environ.get("HYPERCAT_MAX_TYPES")
    if raw is None:
        return DEFAULT_MAX_TYPES
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HYPERCAT_MAX_TYPES must be an integer, got {raw!r}") from None


def _trunc(args, ceilings: bool = True) -> TruncationSpec:
    if args.level is None or args.d is None:
        raise UsageError("--level and --d are required")
    trunc = TruncationSpec(args.level, args.d, args.q)
    if not args.force:
        if ceilings:
            check_ceilings(trunc)
        n = count_types(trunc)
        if n > _max_types():
            raise UsageError(f"{trunc} has {n} types, above the limit {_max_types()}; pass --force")
    return trunc


def _emit(data, args, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_count(args) -> int:
    m = TypeVector.parse(args.type)
    c = hyper_catalan(m)
    _emit({"type": m.to_json(), "C": c}, args, str(c))
    return 0


def cmd_vef(args) -> int:
    m = TypeVector.parse(args.type)
    r = vef(m)
    _emit({"type": m.to_json(), "V": r.V, "E": r.E, "F": r.F}, args, f"V={r.V} E={r.E} F={r.F}")
    return 0


def cmd_enumerate(args) -> int:
    if args.type_vector is not None:
        items = sd.enumerate_subdigons(TypeVector.parse(args.type_vector))
    else:
        items = sd.enumerate_by_level(_trunc(args))
    data = [{"type": sd.type_of(s).to_json(), "text": sd.serialize(s), "tree": sd.to_json(s)} for s in items]
    text = "\n".join(f"{sd.type_of(s)}\t{sd.serialize(s)}" for s in items)
    _emit({"count": len(items), "subdigons": data}, args, text)
    return 0


def cmd_series(args) -> int:
    trunc = _trunc(args)
    if args.csv:
        rows = coefficient_report(trunc)
        if args.json:
            _emit([{"type": r.type.to_json(), "C": r.C, "V": r.V, "E": r.E, "F": r.F,
                    "monomial": str(r.monomial)} for r in rows], args, "")
        else:
            sys.stdout.write(report_csv(rows))
        return 0
    series = build_S_layered(trunc) if args.layered else build_S(trunc)
    data = {
        "level": trunc.level_kind, "d": trunc.d, "q": trunc.q, "q_eff": trunc.q_eff,
        "layered": series.layered, "terms": series.poly.to_json(),
    }
    _emit(data, args, series.poly.to_text())
    return 0


def cmd_verify(args) -> int:
    trunc = _trunc(args)
    residual = verify_layer_zero(trunc)
    ok = residual.is_zero()
    data = {"level": trunc.level_kind, "d": trunc.d, "q": trunc.q, "zero": ok, "residual": residual.to_json()}
    _emit(data, args, "ZERO" if ok else f"NONZERO residual: {residual}")
    return 0 if ok else 1


def cmd_solve(args) -> int:
    p = GeometricPoly.from_pairs(args.coeff)
    q = args.q
    if args.level == "face" and q is None:
        q = p.degree
    trunc = _trunc(argparse.Namespace(level=args.level, d=args.d, q=q, force=args.force), ceilings=False)
    if args.table:
        rows = convergence_table(p, trunc.level_kind, trunc.d, trunc.q)
        if args.json:
            _emit([{"d": r.d, "x": str(r.x), "abs_residual": str(r.abs_residual)} for r in rows], args, "")
        else:
            print("d,x_decimal,residual_decimal")
            for r in rows:
                print(f"{r.d},{to_decimal(r.x, args.digits)},{to_decimal(r.abs_residual, args.digits)}")
        return 0
    result = approx_root(p, trunc)
    data = {"polynomial": str(p), **result.to_json(args.digits)}
    lines = [f"x = {data['x_decimal']}", f"residual = {data['residual_decimal']}"]
    if args.newton is not None:
        nx = newton_root(p, Fraction(1), args.newton)
        data["newton"] = {"iters": args.newton, "x": str(nx), "x_decimal": to_decimal(nx, args.digits)}
        lines.append(f"newton = {data['newton']['x_decimal']}")
    _emit(data, args, "\n".join(lines))
    return 0


def cmd_animate(args) -> int:
    s = sd.parse(args.subdigon)
    stages = DEFAULT_STAGE_FRAMES if args.frames is None else args.frames
    frames = animate_merge(s, stages, mirror=args.mirror)
    paths = write_frames(frames, args.out, args.width)
    if args.smil:
        smil = os.path.join(args.out, "animation.svg")
        with open(smil, "w", encoding="utf-8") as fh:
            fh.write(emit_smil(frames, width=args.width))
        paths.append(smil)
    _emit({"frames": len(frames), "files": [str(p) for p in paths]}, args,
          f"wrote {len(frames)} frames to {args.out}")
    return 0


COMMANDS = {
    "count": cmd_count, "vef": cmd_vef, "enumerate": cmd_enumerate, "series": cmd_series,
    "verify": cmd_verify, "solve": cmd_solve, "animate": cmd_animate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        start = time.perf_counter()
        status = COMMANDS[args.command](args)
        if args.timing:
            print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
        return status
    except (UsageError, CeilingError, ValueError, ArithmeticError, KeyError) as exc:
        print(f"hypercat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
