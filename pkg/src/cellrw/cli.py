"""Batch interface: check registry items or files, inspect, render, search.

Exit codes: 0 all Ok, 1 check failure, 2 usage or parse errors.
The registry data directory can be overridden with CELLRW_REGISTRY.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import diagram as dg
from . import render as rd
from . import rewrite as rw
from . import serialize as sz
from .adjlib import registry
from .presentation import Presentation, validate_presentation


def data_dir() -> Path:
    override = os.environ.get("CELLRW_REGISTRY")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def _load_any(token: str):
    """Resolve a registry name, a shipped data file name, or a file path."""
    if registry.is_registry_name(token):
        return registry.resolve(token)
    path = Path(token)
    if path.exists():
        return sz.load(path)
    base = data_dir()
    for sub in ("diagrams", "presentations", "bundles", "morphisms"):
        candidate = base / sub / f"{token}.json"
        if candidate.exists():
            return sz.load(candidate)
    raise sz.IoError(f"{token!r} is neither a registry name nor a file")


def _check_item(name: str, obj, context: str = "Adj41") -> tuple[bool, str, float]:
    t0 = time.perf_counter()
    if isinstance(obj, Presentation):
        v = validate_presentation(obj)
        ok, detail = v.ok, str(v)
    elif isinstance(obj, rw.ProofBundle):
        rep = rw.check_derivation(obj)
        ok, detail = rep.ok, str(rep)
    elif isinstance(obj, dg.Diagram):
        from .adjlib.bundles import DERIVED_NAMES, derived_context

        sig = derived_context(name) if name in DERIVED_NAMES else _load_any(context)
        v = dg.validate(obj, sig)
        ok, detail = v.ok, str(v)
    else:
        from .functor import check_morphism

        rep = check_morphism(obj)
        ok, detail = rep.ok, str(rep)
    return ok, detail, time.perf_counter() - t0


def cmd_check(args) -> int:
    if args.target == "--all" or args.all:
        items = registry.checklist()
    else:
        items = [(args.target, _load_any(args.target))]
    rows = []
    all_ok = True
    for name, obj in items:
        ok, detail, dt = _check_item(name, obj, context=args.context)
        all_ok = all_ok and ok
        rows.append({"name": name, "kind": registry.kind_of(obj), "ok": ok, "detail": detail})
        if not args.json:
            status = "ok" if ok else f"FAIL ({detail})"
            print(f"{name}: {status} ({dt * 1000:.0f} ms)")
    if args.json:
        print(json.dumps({"items": rows, "ok": all_ok}, indent=2))
    elif len(rows) > 1:
        print(f"{sum(r['ok'] for r in rows)}/{len(rows)} items ok")
    return 0 if all_ok else 1


def cmd_info(args) -> int:
    obj = _load_any(args.presentation)
    if not isinstance(obj, Presentation):
        print("info expects a presentation", file=sys.stderr)
        return 2
    counts = obj.cell_counts()
    parts = [f"{k}:{counts.get(k, 0)}" for k in range(obj.n + 1)]
    parts.append(f"rel:{len(obj.relations)}")
    print(" ".join(parts))
    return 0


def cmd_render(args) -> int:
    obj = _load_any(args.diagram)
    if not isinstance(obj, dg.Diagram):
        print("render expects a diagram", file=sys.stderr)
        return 2
    from .adjlib.bundles import DERIVED_NAMES, derived_context

    if args.diagram in DERIVED_NAMES:
        ctx = derived_context(args.diagram)
    else:
        ctx = _load_any(args.context)
    if not isinstance(ctx, Presentation):
        print("--context must name a presentation", file=sys.stderr)
        return 2
    data = rd.render(obj, ctx, fmt=args.format, slices=args.slices)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def cmd_search(args) -> int:
    d1 = _load_any(args.from_)
    d2 = _load_any(args.to)
    ctx = _load_any(args.context)
    if not isinstance(ctx, Presentation):
        print("--context must name a presentation", file=sys.stderr)
        return 2
    try:
        deriv = rw.auto_structural(ctx, d1, d2, args.budget)
    except rw.RewriteError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if deriv is None:
        print("none")
        return 1
    for step in deriv.steps:
        print(rw.describe_step(step))
    if not deriv.steps:
        print("(empty derivation)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cellrw", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate presentations and replay bundles")
    p.add_argument("target", nargs="?", default="--all",
                   help="registry name, file path, or --all")
    p.add_argument("--all", action="store_true", help="check the whole registry")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--context", default="Adj41",
                   help="presentation for validating bare diagrams")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("info", help="print cell/relation counts per dimension")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("render", help="render a diagram")
    p.add_argument("diagram")
    p.add_argument("--format", choices=("svg", "txt"), default="txt")
    p.add_argument("--slices", action="store_true", help="force slice filmstrip")
    p.add_argument("--context", default="Adj41", help="presentation supplying cell boundaries")
    p.add_argument("--output", "-o", help="write to file instead of stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("search", help="bounded structural route search")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", dest="to", required=True)
    p.add_argument("--budget", type=int, default=4)
    p.add_argument("--context", default="Adj41")
    p.set_defaults(func=cmd_search)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (sz.ParseError, sz.IoError, sz.ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except rd.UnsupportedDimension as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
