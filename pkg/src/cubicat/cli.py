"""Command-line entry point: ``cubicat <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage,
parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import trees as tr
from .compare import compare_corpus
from .config import Config, load_config
from .corpus import random_corpus
from .dsl import parse
from .engine import OperatorTable, Variant, chi, count, evaluate
from .errors import CubicatError
from .oracle import diagram_graph
from .relations import verify_all
from .term import Term, from_json


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_terms(text: str) -> list[Term]:
    """DSL text (one term per non-blank line) or a JSON term / list of terms."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        data = json.loads(stripped)
        return [from_json(d) for d in (data if isinstance(data, list) else [data])]
    return [parse(line) for line in stripped.splitlines()
            if line.strip() and not line.lstrip().startswith("//")]


def _term_arg(args) -> Term:
    if args.expr is not None:
        return parse(args.expr)
    if args.termfile is None:
        raise UsageError("give a term file or -e EXPR")
    text = sys.stdin.read() if args.termfile == "-" else Path(args.termfile).read_text()
    if text.lstrip().startswith("{"):
        return from_json(json.loads(text))
    return parse(text)


def _variant(args, cfg: Config) -> Variant:
    return Variant(args.variant) if args.variant else cfg.variant


def _table_text(table: OperatorTable) -> str:
    lines = [f"{table.dom} -> {table.cod} ({table.variant.value})"]
    lines += [f"{i or '-'} -> {o or '-'} : {v}" for (i, o), v in table.entries.items()]
    return "\n".join(lines)


def cmd_eval(args, cfg: Config, out) -> int:
    table = evaluate(_term_arg(args), _variant(args, cfg), cfg.widthLimit)
    if (args.format or cfg.outputFormat) == "text":
        print(_table_text(table), file=out)
    else:
        print(_dump(table.to_json()), file=out)
    return 0


def cmd_count(args, cfg: Config, out) -> int:
    print(count(_term_arg(args), cfg.widthLimit), file=out)
    return 0


def cmd_chi(args, cfg: Config, out) -> int:
    print(chi(_term_arg(args), args.top, args.bottom, _variant(args, cfg), cfg.widthLimit), file=out)
    return 0


def cmd_graph(args, cfg: Config, out) -> int:
    g = diagram_graph(_term_arg(args))
    print(g.to_dot() if (args.format or cfg.outputFormat) == "dot" else _dump(g.to_json()),
          file=out)
    return 0


def cmd_oracle_compare(args, cfg: Config, out) -> int:
    if args.random is not None:
        if args.termfile is not None:
            raise UsageError("give either a term file or --random, not both")
        if args.seed is None:
            raise UsageError("--random needs --seed")
        terms = random_corpus(args.random, args.seed, args.max_width, args.max_gens)
    elif args.termfile is not None:
        text = sys.stdin.read() if args.termfile == "-" else Path(args.termfile).read_text()
        terms = _read_terms(text)
    else:
        raise UsageError("give a term file or --random N")
    report = compare_corpus(terms, cfg.widthLimit)
    print(_dump(report), file=out)
    return 0 if report["pass"] else 1


def cmd_verify(args, cfg: Config, out) -> int:
    report = verify_all(_variant(args, cfg), width_limit=cfg.widthLimit)
    print(_dump(report.to_json()), file=out)
    return 0 if report.passed else 1


def cmd_trees(args, cfg: Config, out) -> int:
    items = (tr.signed_trees(args.n, cfg.treeBound) if args.signed
             else tr.trees(args.n, max(cfg.treeBound, tr.DEFAULT_TREE_BOUND)))
    print(_dump({"n": args.n, "signed": args.signed, "count": len(items),
                 "trees": [tr.label(t) for t in items]}), file=out)
    return 0


def cmd_assoc(args, cfg: Config, out) -> int:
    if args.signed:
        g = tr.signed_associahedron(args.n, cfg.treeBound)
    else:
        g = tr.associahedron(args.n, max(cfg.treeBound, tr.DEFAULT_ASSOC_BOUND))
    if args.dot or cfg.outputFormat == "dot":
        print(g.to_dot(), file=out)
    else:
        data = g.to_json()
        data["components"] = len(g.components())
        print(_dump(data), file=out)
    return 0


def cmd_ek(args, cfg: Config, out) -> int:
    report = tr.ek_check(args.n, cfg.treeBound)
    print(_dump(report.to_json()), file=out)
    return 0 if report.passed else 1


def _shape(text: str) -> tr.Tree:
    try:
        return tr.decode(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_pairing(args, cfg: Config, out) -> int:
    f, g = _shape(args.shape1), _shape(args.shape2)
    value = tr.pairing(f, g)
    print(_dump({"f": tr.encode(f), "g": tr.encode(g), "pairing": str(value)}), file=out)
    return 0


def cmd_lift(args, cfg: Config, out) -> int:
    a, b = _shape(args.shape1), _shape(args.shape2)
    path = tr.lift_path(a, b, cfg.treeBound)
    print(_dump({"from": tr.encode(a), "to": tr.encode(b),
                 "path": None if path is None else [tr.label(t) for t in path]}), file=out)
    return 0 if path is not None else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicat", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="key=value config file (default: $CUBICAT_CONFIG)")
    p.add_argument("--width-limit", type=int, help="override the width guard")
    sub = p.add_subparsers(dest="command", required=True)

    def term_cmd(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("termfile", nargs="?", help="file with a DSL or JSON term, '-' for stdin")
        s.add_argument("-e", "--expr", help="term given inline in the DSL")
        s.set_defaults(func=func)
        return s

    s = term_cmd("eval", cmd_eval, "operator table of a term")
    s.add_argument("--variant", choices=["F", "Ftilde"])
    s.add_argument("--format", choices=["json", "text"])
    term_cmd("count", cmd_count, "number of 3-edge-colorings of a closed term")
    s = term_cmd("chi", cmd_chi, "one coefficient of the operator table")
    s.add_argument("--top", required=True, type=lambda v: "" if v == "-" else v)
    s.add_argument("--bottom", required=True, type=lambda v: "" if v == "-" else v)
    s.add_argument("--variant", choices=["F", "Ftilde"])
    s = term_cmd("graph", cmd_graph, "abstract cubic graph of a term")
    s.add_argument("--format", choices=["json", "dot"])

    s = sub.add_parser("oracle-compare", help="check the engine against brute-force coloring")
    s.add_argument("termfile", nargs="?")
    s.add_argument("--random", type=int, metavar="N")
    s.add_argument("--max-width", type=int, default=6)
    s.add_argument("--max-gens", type=int, default=12)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_oracle_compare)

    s = sub.add_parser("verify-relations", help="check every catalog relation")
    s.add_argument("--variant", choices=["F", "Ftilde"])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("trees", help="list binary tree shapes")
    s.add_argument("n", type=int)
    s.add_argument("--signed", action="store_true")
    s.set_defaults(func=cmd_trees)

    s = sub.add_parser("assoc", help="associahedron 1-skeleton or its signed lift")
    s.add_argument("n", type=int)
    s.add_argument("--signed", action="store_true")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_assoc)

    s = sub.add_parser("ek", help="liftability of every pair of shapes")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_ek)

    for name, func, help_ in [("pairing", cmd_pairing, "inner product of two trees' leaf vectors"),
                              ("lift", cmd_lift, "witness signed path between two shapes")]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("shape1")
        s.add_argument("shape2")
        s.set_defaults(func=func)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        if args.width_limit is not None:
            cfg = replace(cfg, widthLimit=args.width_limit)
        return args.func(args, cfg, out)
    except (UsageError, CubicatError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"cubicat {args.command}: {exc}", file=err)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
