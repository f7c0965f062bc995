"""Command-line surface: build, classify, inspect, transform, search,
realize, and run the named verification suites.

Output is deterministic JSON (sorted keys) or markdown for suite reports;
``-`` reads from stdin so commands chain.  Exit codes: 0 success, 1 a
verification suite failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import build, classes, flagmaps, groups, realize, suites
from .flagmaps import FlagMap


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load_map(path: str) -> FlagMap:
    return FlagMap.from_json(json.loads(_read(path)))


def _load_spec(path: str) -> tuple[build.EpimorphismSpec, str]:
    obj = json.loads(_read(path))
    spec = build.spec_from_json(obj)
    return spec, obj.get("ops", "")


def _realization_json(real: realize.Realization) -> dict:
    spec = real.spec
    out = spec.to_json()
    out["label"] = real.label
    out["ops"] = real.ops
    G = spec.group
    if isinstance(G, groups.PermGroup):
        out["group"] = {"degree": G.degree,
                        "generators": [G.label(g) for g in G.generators]}
    elif isinstance(G, groups.GpefGroup):
        out["group"] = {"family": "gpef", "p": G.p, "e": G.e, "f": G.f}
    elif isinstance(G, groups.GpefAlphaGroup):
        out["group"] = {"family": "gpef_alpha", "e": G.e}
    else:
        out["group"] = {"order": G.size}
    return out


def cmd_build(args) -> int:
    spec, ops = _load_spec(args.spec)
    m = build.transform_spec(spec, ops)
    _emit(m.to_json())
    return 0


def cmd_classify(args) -> int:
    m = _load_map(args.map)
    label = classes.classify(m)
    print(label if label is not None else "not-edge-transitive")
    return 0


def cmd_info(args) -> int:
    m = _load_map(args.map)
    _emit(flagmaps.summary(m).to_json())
    return 0


def cmd_op(args) -> int:
    m = _load_map(args.map)
    if args.operation == "dual":
        out = m.dual()
    elif args.operation == "petrie":
        out = m.petrie()
    elif args.operation == "join":
        if args.other is None:
            raise ValueError("join needs a second map")
        out = flagmaps.join(m, _load_map(args.other))
    else:
        raise ValueError(f"unknown operation {args.operation!r}")
    _emit(out.to_json())
    return 0


def cmd_realize(args) -> int:
    try:
        return _cmd_realize(args)
    except realize.Unrealizable as exc:
        _emit({"unrealizable": str(exc), "provenance": exc.provenance})
        return 0


def _cmd_realize(args) -> int:
    family = args.family.replace("-", "_")
    label = args.klass
    if family == "sym":
        real = suites.sym_witness(label, args.n)
    elif family == "sym_even":
        real = realize.sym_even(label, args.n)
    elif family == "alt":
        real = suites.alt_witness(label, args.n)
    elif family == "alt_small":
        real = realize.alt_small(label, args.n)
    elif family == "psl2":
        if label != "1":
            raise ValueError("--family psl2 realizes class 1; other classes "
                             "propagate from it (see --family psl2-class2 for q=7)")
        real = realize.psl2_class1(args.q)
    elif family == "psl2_class2":
        real = realize.psl2_class2_q7()
    elif family == "nilpotent_chiral":
        real = realize.nilpotent_chiral(args.e)
    elif family == "dihedral":
        real = realize.dihedral_spec(args.m)
    elif family == "edmonds_k8":
        pair = realize.edmonds_k8()
        _emit([_realization_json(r) for r in pair])
        return 0
    else:
        raise ValueError(f"unknown family {args.family!r}")
    out = _realization_json(real)
    if args.emit_map:
        out["map"] = real.build().to_json()
    _emit(out)
    return 0


def cmd_search(args) -> int:
    G = groups.group_from_json(json.loads(_read(args.group)), cap=args.cap)
    result = build.search_epimorphisms(
        args.klass, G,
        exhaustive=args.exhaustive or args.limit is None,
        limit=args.limit,
        even=args.even,
        up_to_cycle_type=args.up_to_cycle_type,
        keep_all=args.keep_all)
    shape, _ = build.ORBIT_ROUTE[args.klass]
    witnesses = []
    for w in result.witnesses:
        witnesses.append({name: (G.label(x) if isinstance(G, groups.PermGroup) else x)
                          for name, x in w.items()})
    _emit({"class": args.klass, "shape": shape, "witnesses": witnesses,
           "examined": result.examined, "proved_empty": result.proved_empty})
    return 0


def cmd_verify(args) -> int:
    names = sorted(suites.SUITES) if args.suite == "all" else [args.suite]
    exit_code = 0
    for name in names:
        started = time.time()
        report = suites.run_suite(name, threads=args.threads, cap=args.cap)
        if args.format == "md":
            print(report.to_markdown())
        else:
            _emit(report.to_json())
        print(f"[{name}] {len(report.cases)} cases, {report.failed} failed, "
              f"{time.time() - started:.1f}s", file=sys.stderr)
        exit_code = max(exit_code, report.exit_code)
    return exit_code


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etm", description="edge-transitive maps: build, classify, verify")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the flag map of an epimorphism spec")
    p.add_argument("--spec", required=True, help="spec JSON file or -")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("classify", help="edge-transitive class of a map")
    p.add_argument("map", help="FlagMap JSON file or -")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("info", help="summary invariants of a map")
    p.add_argument("map", help="FlagMap JSON file or -")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("op", help="apply dual, petrie or join")
    p.add_argument("operation", choices=("dual", "petrie", "join"))
    p.add_argument("map", help="FlagMap JSON file or -")
    p.add_argument("other", nargs="?", help="second map for join")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("realize", help="emit a named realization spec")
    p.add_argument("--family", required=True,
                   help="sym | sym-even | alt | alt-small | psl2 | psl2-class2 | "
                        "nilpotent-chiral | dihedral | edmonds-k8")
    p.add_argument("--class", dest="klass", default="1", help="class label")
    p.add_argument("--n", type=int, help="degree for sym/alt families")
    p.add_argument("--q", type=int, help="prime power for psl2")
    p.add_argument("--e", type=int, help="exponent for nilpotent-chiral")
    p.add_argument("--m", type=int, help="circuit length for dihedral")
    p.add_argument("--emit-map", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("search", help="exhaustive epimorphism search")
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--group", required=True, help="group JSON file or -")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--even", action="store_true",
                   help="restrict to orientable boundary-free realizations")
    p.add_argument("--limit", type=int)
    p.add_argument("--up-to-cycle-type", action="store_true")
    p.add_argument("--keep-all", action="store_true")
    p.add_argument("--cap", type=int, default=10**7)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help="suite name or 'all': " + ", ".join(sorted(suites.SUITES)))
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, json.JSONDecodeError, OSError,
            realize.Unrealizable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
