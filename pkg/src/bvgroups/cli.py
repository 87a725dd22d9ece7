"""Command-line front end.

Exit codes: 0 success / true, 1 false, 2 usage or input error, 3 internal
invariant failure (e.g. a ``--verify`` mismatch).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from . import acceptance, diagrams
from . import elements as el
from . import generators as G
from .elements import Element, SubgroupSpec
from .errors import BVError
from .grammar import builtin_spec, format_element, format_label, format_forest, parse_element, parse_subgroup
from .render import render_svg

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def element_json(v: Element) -> dict:
    return {
        "n": v.n,
        "r": v.r,
        "H": v.spec.name,
        "domain": format_forest(v.domain),
        "braid": str(v.braid),
        "labels": [format_label(x) for x in v.labels],
        "range": format_forest(v.range),
    }


def _specs(args) -> Dict[str, SubgroupSpec]:
    h = getattr(args, "H", None)
    if h and os.path.exists(h):
        if args.n is None:
            raise UsageError("--n is required with a subgroup file")
        name = os.path.splitext(os.path.basename(h))[0]
        with open(h) as fh:
            return {name: parse_subgroup(fh.read(), name, args.n)}
    return {}


def _spec(args) -> SubgroupSpec:
    specs = _specs(args)
    if specs:
        return next(iter(specs.values()))
    n = args.n or 2
    spec = builtin_spec(args.H or f"B{n}", n)
    if spec is None:
        raise UsageError(f"unknown subgroup {args.H!r} (use Id, B<n> or a subgroup file)")
    return spec


def _read(path: str, args) -> Element:
    try:
        with open(path) as fh:
            text = fh.read().strip()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    return parse_element(text, _specs(args))


def _emit(v: Element, args) -> None:
    if args.json:
        print(json.dumps(element_json(v), sort_keys=True))
    else:
        print(format_element(v))


# ---------------------------------------------------------------------------
# commands


def cmd_compose(args) -> int:
    vs = [_read(p, args) for p in args.files]
    out = vs[0]
    for w in vs[1:]:
        out = el.compose(out, w)
    _emit(el.simplify(el.reduce(out)), args)
    return EXIT_TRUE


def cmd_inverse(args) -> int:
    _emit(el.simplify(el.reduce(el.inverse(_read(args.file, args)))), args)
    return EXIT_TRUE


def cmd_reduce(args) -> int:
    _emit(el.simplify(el.reduce(_read(args.file, args))), args)
    return EXIT_TRUE


def cmd_equal(args) -> int:
    same = el.equal(_read(args.a, args), _read(args.b, args))
    if args.json:
        print(json.dumps({"equal": same}))
    else:
        print("true" if same else "false")
    return EXIT_TRUE if same else EXIT_FALSE


def _decompose(v: Element, mode: str) -> tuple:
    table = G.GeneratorTable(v.n, v.spec)
    word = G.decompose(v, table)
    if mode != "raw":
        rw, _ = G.generating_set_rewriter(table, mode)
        word = rw(word)
    return table, word


def cmd_decompose(args) -> int:
    v = _read(args.file, args)
    mode = args.set
    if mode == "auto":
        mode = "standard" if v.spec == el.braid_spec(v.n) else "braided" if not v.spec.gens else "raw"
    table, word = _decompose(v, mode)
    ok = None
    if args.verify:
        ok = el.equal(G.evaluate(word, table), v)
    if args.json:
        print(json.dumps({"set": mode, "word": str(word), "length": len(word), "verified": ok}))
    else:
        print(word if word.items else "1")
    if ok is False:
        print("verification failed: word does not evaluate to the input", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_TRUE


def cmd_evaluate(args) -> int:
    spec = _spec(args)
    table = G.GeneratorTable(spec.n, spec)
    word = G.parse_word(args.word)
    for name in word.letters():
        if name not in table:
            raise UsageError(f"unknown generator {name!r}")
    _emit(el.simplify(G.evaluate(word, table)), args)
    return EXIT_TRUE


def cmd_render(args) -> int:
    v = _read(args.file, args)
    d = diagrams.from_element(v)
    if args.reduce:
        d = diagrams.normal_form(d)
    svg = render_svg(d, title=os.path.basename(args.file))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_TRUE


def cmd_selftest(args) -> int:
    only = [int(x) for x in args.only.split(",")] if args.only else None
    results = []
    for k in only or sorted(acceptance.CRITERIA):
        res = acceptance.run(k, quick=args.quick)
        results.append(res)
        if not args.json:
            print(res.line(), flush=True)
    if args.json:
        print(json.dumps([{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                          for r in results]))
    return EXIT_TRUE if all(r.passed for r in results) else EXIT_FALSE


def cmd_confluence(args) -> int:
    spec = _spec(args)
    rep = diagrams.check_local_confluence(args.seed, args.count, args.max_slices, spec)
    if args.json:
        print(json.dumps({"diagrams": rep.diagrams, "move_pairs": rep.move_pairs,
                          "counterexamples": len(rep.counterexamples),
                          "measure_violations": len(rep.measure_violations)}))
    else:
        print(rep.summary())
    return EXIT_TRUE if rep.ok else EXIT_FALSE


def cmd_random(args) -> int:
    spec = _spec(args)
    v = el.random_element(spec, args.r, args.depth, seed=args.seed)
    _emit(el.reduce(v) if args.reduce else v, args)
    return EXIT_TRUE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="arity (default 2)")
    common.add_argument("--H", default=None, help="subgroup: Id, B<n>, or a subgroup file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="bvgroups", description="Braided Higman-Thompson groups with labels")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compose", parents=[common], help="product of elements, left to right")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_compose)
    s = sub.add_parser("inverse", parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_inverse)
    s = sub.add_parser("reduce", parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_reduce)
    s = sub.add_parser("equal", parents=[common], help="exit 0 if equal, 1 otherwise")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_equal)
    s = sub.add_parser("decompose", parents=[common], help="word in generators (r = 1)")
    s.add_argument("file")
    s.add_argument("--verify", action="store_true", help="re-evaluate the word and compare")
    s.add_argument("--set", choices=["auto", "raw", "standard", "braided"], default="auto")
    s.set_defaults(func=cmd_decompose)
    s = sub.add_parser("evaluate", parents=[common], help="evaluate a generator word")
    s.add_argument("word")
    s.set_defaults(func=cmd_evaluate)
    s = sub.add_parser("render", parents=[common], help="SVG of the element's diagram")
    s.add_argument("file")
    s.add_argument("--out")
    s.add_argument("--reduce", action="store_true", help="draw the reduced diagram")
    s.set_defaults(func=cmd_render)
    s = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    s.add_argument("--quick", action="store_true")
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.set_defaults(func=cmd_selftest)
    s = sub.add_parser("confluence", parents=[common], help="local confluence on random diagrams")
    s.add_argument("--count", type=int, default=500)
    s.add_argument("--max-slices", type=int, default=12)
    s.set_defaults(func=cmd_confluence)
    s = sub.add_parser("random", parents=[common], help="a random element")
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--reduce", action="store_true")
    s.set_defaults(func=cmd_random)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_TRUE
    try:
        return args.func(args)
    except (UsageError, BVError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
