"""Command-line entry point: ``fishtamari <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import config
from .bijection import phi_direct, phi_inverse
from .enumeration import KINDS, count_closed_form, enumerate_objects
from .errors import BudgetExceeded, FishTamariError
from .fish import fish_stats, parse_fish, render
from .series import area_series, h11_series, solve_master, v_series
from .tamari import TamariInterval, distance_formula, is_synchronized
from .verify import SUITES, run_suite


def _emit(obj) -> None:
    print(json.dumps(obj))


def _serialize(x, as_json: bool):
    if isinstance(x, TamariInterval):
        return x.to_json() if as_json else str(x)
    return {"fish": str(x)} if as_json else str(x)


def cmd_enumerate(args) -> int:
    for obj in enumerate_objects(args.kind, args.size):
        item = _serialize(obj, args.jsonl)
        print(json.dumps(item) if args.jsonl else item)
    return 0


def cmd_count(args) -> int:
    report = count_closed_form(args.kind, args.size)
    _emit(report.to_json())
    return 0 if report.match is not False else 1


def cmd_map(args) -> int:
    status = 0
    for line in args.input:
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
            if args.direction == "i2f":
                iv = TamariInterval.from_json(obj["interval"] if "interval" in obj else obj)
                _emit({"interval": iv.to_json(), "fish": str(phi_direct(iv))})
            else:
                word = obj["fish"] if isinstance(obj, dict) else obj
                f = parse_fish(word)
                _emit({"interval": phi_inverse(f).to_json(), "fish": str(f)})
        except (FishTamariError, KeyError, TypeError, json.JSONDecodeError) as exc:
            _emit({"error": f"{type(exc).__name__}: {exc}", "input": line})
            status = 1
    return status


def cmd_stats(args) -> int:
    if args.fish is not None:
        _emit(fish_stats(args.fish).to_json())
    else:
        iv = TamariInterval.from_json(args.interval)
        f = phi_direct(iv)
        _emit({"size": iv.size, "contact": list(iv.contact), "descent": list(iv.descent),
               "distance": distance_formula(iv), "synchronized": is_synchronized(iv),
               "fish": str(f)})
    return 0


def cmd_series(args) -> int:
    y = args.y
    if args.target == "V":
        s = v_series(args.order, y)
    elif args.target == "A":
        s = area_series(args.order, y)
    elif args.u is None and args.q is None:
        s = h11_series(args.order, y)
    else:
        # full master equation, then specialize u (q and y are substituted inside)
        s = solve_master(args.order, q=args.q, y=y)
        s = s.map(lambda c: c.subs(u=args.u) if hasattr(c, "subs") else c)
    _emit([str(c) for c in s])
    return 0


def cmd_verify(args) -> int:
    cert = run_suite(args.suite, args.max_size)
    _emit(cert.to_json())
    return 0 if cert.ok else 1


def cmd_render(args) -> int:
    print(render(parse_fish(args.fish)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fishtamari", description=__doc__)
    p.add_argument("--config", help="key=value configuration file")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list every object of a kind and size")
    e.add_argument("--kind", choices=KINDS, required=True)
    e.add_argument("--size", type=int, required=True)
    e.add_argument("--jsonl", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("count", help="closed-form count, checked by enumeration")
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--size", type=int, required=True)
    c.set_defaults(func=cmd_count)

    m = sub.add_parser("map", help="interval <-> fish on JSON lines")
    m.add_argument("--direction", choices=("i2f", "f2i"), required=True)
    m.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)
    m.set_defaults(func=cmd_map)

    s = sub.add_parser("stats", help="statistics of a fish or an interval")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--fish")
    g.add_argument("--interval", help='JSON like {"lower": "udud", "upper": "uudd"}')
    s.set_defaults(func=cmd_stats)

    r = sub.add_parser("series", help="truncated generating functions")
    r.add_argument("--target", choices=("H", "V", "A"), required=True)
    r.add_argument("--order", type=int, required=True)
    r.add_argument("--y", type=int, choices=(0, 1), required=True)
    r.add_argument("--u", type=int)
    r.add_argument("--q", type=int)
    r.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max-size", type=int)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("render", help="ASCII drawing of a fish walk")
    d.add_argument("--fish", required=True)
    d.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config.set_config(config.load(args.config))
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (FishTamariError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        config.set_config(None)


if __name__ == "__main__":
    sys.exit(main())
