"""Command-line surface tying the library together."""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, construct
from .arrangement import Arrangement
from .core import is_efficiently_structured, summarize
from .enumerate import census
from .errors import InternalInconsistency, PolyholeError
from .io import parse_grid, render_ascii
from .render import RenderSpec, render_svg
from .transform import witness

USAGE_ERROR = 2
VERIFY_FAILED = 1
INTERNAL_ERROR = 3

FAMILIES = {
    "s1": construct.s1,
    "s2": construct.s2,
    "s0": construct.s0,
    "r0": construct.r0,
    "r1": construct.r1,
    "r2": construct.r2,
    "kr": construct.kr,
}


def _load_palette(path):
    palette = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" in line:
                key, value = line.split("=", 1)
                palette[key.strip()] = value.strip().strip('"')
    return palette


def _emit_shape(shape, args):
    if getattr(args, "svg", False):
        spec = RenderSpec(overlay=getattr(args, "overlay", False))
        if getattr(args, "config", None):
            palette = dict(spec.palette)
            palette.update(_load_palette(args.config))
            spec = RenderSpec(cell=spec.cell, palette=palette, overlay=spec.overlay)
        print(render_svg(shape, spec))
    else:
        print(render_ascii(shape))


def cmd_gen(args) -> int:
    if (args.family is None) == (args.holes is None):
        print("gen: give exactly one of --family or --holes", file=sys.stderr)
        return USAGE_ERROR
    if args.family is not None:
        if args.k is None:
            print("gen: --family needs --k", file=sys.stderr)
            return USAGE_ERROR
        shape = FAMILIES[args.family](args.k)
    else:
        shape, _ = witness(args.holes)
    _emit_shape(shape, args)
    return 0


def cmd_verify(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        shape = parse_grid(fh.read())
    if isinstance(shape, Arrangement):
        print("arrangement with undetermined cells; nothing to verify", file=sys.stderr)
        return USAGE_ERROR
    s = summarize(shape)
    report = is_efficiently_structured(shape, s)
    lines = [
        f"n={s.n} h={s.h} b={s.b} p={s.p} p_o={s.p_o} p_h={s.p_h}",
        f"hole areas: {list(s.hole_areas)}",
    ]
    crystallized = s.h >= 1 and s.n == bounds.g(s.h).g
    if report.efficient:
        lines.append("efficiently structured")
    else:
        lines.append("not efficiently structured: " + ", ".join(report.reasons))
    lines.append("crystallized" if crystallized else "not crystallized")
    print("\n".join(lines))
    return 0 if crystallized else VERIFY_FAILED


def cmd_table(args) -> int:
    rows = []
    for entry in bounds.g_table(args.h_from, args.h_to):
        rows.append(
            {
                "h": entry.h,
                "g": entry.g,
                "alpha_kind": entry.alpha.kind,
                "alpha_N": entry.alpha.N,
                "m": entry.m,
                "exceptional": entry.exceptional,
            }
        )
    print(json.dumps(rows, indent=2))
    return 0


def cmd_enum(args) -> int:
    n_max = args.max_n if args.max_n else (17 if args.deep else 12)
    free_h_min = 4 if args.deep else 0
    table = census(n_max, threads=args.threads, free_h_min=free_h_min)
    payload = {
        "max_n": table.max_n,
        "rows": [
            {"n": n, "h": h, "free_count": cnt}
            for (n, h), cnt in sorted(table.rows.items())
        ],
        "min_n_for_h": {str(h): n for h, n in sorted(table.min_n_for_h.items())},
        "crystal_counts": {str(h): c for h, c in sorted(table.crystal_counts.items())},
    }
    text = json.dumps(payload, indent=2)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_dismantle(args) -> int:
    shape, trace = witness(args.holes)
    payload = {
        "holes": args.holes,
        "tiles": len(shape),
        "moves": [
            {
                "move": step.move.describe(),
                "fill": step.move.fill,
                "src": step.move.src,
                "removals": list(step.move.removals),
                "n": step.n,
                "h": step.h,
            }
            for step in trace.steps
        ],
    }
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2) + "\n")
    print(render_ascii(shape))
    return 0


def cmd_render(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        shape = parse_grid(fh.read())
    _emit_shape(shape, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyhole",
        description="Polyominoes with maximally many holes: generate, verify, count.",
    )
    parser.add_argument("--threads", type=int, default=1, help="parallelism cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a construction or a witness")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--k", type=int, help="family index (level for kr)")
    p.add_argument("--holes", type=int, help="generate a witness with this many holes")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--overlay", action="store_true")
    p.add_argument("--config", help="key=value palette file")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="summarize a grid file and check crystallization")
    p.add_argument("file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("table", help="emit the minimum-tile table as JSON")
    p.add_argument("--from", dest="h_from", type=int, required=True)
    p.add_argument("--to", dest="h_to", type=int, required=True)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("enum", help="count free polyominoes by size and holes")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--deep", action="store_true", help="scan to n=17 for the 4-hole row")
    p.add_argument("--json", help="write the census to this path")
    p.set_defaults(fn=cmd_enum)

    p = sub.add_parser("dismantle", help="produce a witness and its move trace")
    p.add_argument("--holes", type=int, required=True)
    p.add_argument("--trace", help="write the move trace JSON to this path")
    p.set_defaults(fn=cmd_dismantle)

    p = sub.add_parser("render", help="render a grid file")
    p.add_argument("file")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--overlay", action="store_true")
    p.add_argument("--config", help="key=value palette file")
    p.set_defaults(fn=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InternalInconsistency as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return INTERNAL_ERROR
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except PolyholeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return VERIFY_FAILED


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
