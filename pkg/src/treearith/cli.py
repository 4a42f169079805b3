"""Command-line front end: ``treearith <verb> ...``.

Exit status: 0 success, 1 undefined operation or no solution, 2 usage or
syntax error, 3 enumeration cap exceeded.  Errors are printed to stderr as
one line ``error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence, TextIO

from . import enumeration
from .arith import SignedTree, UndefinedOperation, negate
from .core import CanonTree, DecodeError, RawTree, canonize, decode
from .enumeration import LimitExceeded, count, family_codes, first_index, rank, unrank
from .equations import NoSolution, check_eq4_necessary, solve_eq2, solve_eq3
from .expr import Literal, ParseError, decompose, evaluate, parse_expr, to_text
from .prime import (PrimalityUndefined, add_factorize, is_add_prime, is_mult_prime,
                    mult_factorize)

__all__ = ["emit_dot", "main", "parse_expr", "parse_tree_arg", "run"]

EXIT_OK, EXIT_UNDEFINED, EXIT_SYNTAX, EXIT_LIMIT = 0, 1, 2, 3

_BITS = re.compile(r"^[01\s]+$")


class UsageError(ValueError):
    pass


def parse_tree_arg(text: str):
    """A bare bit string, or any expression (``#k``, quoted code, operators)."""
    if _BITS.match(text) and text.strip() != "1":
        bits = "".join(text.split())
        decode(bits)
        return Literal(bits)
    return parse_expr(text)


def emit_dot(t: SignedTree | CanonTree) -> str:
    """DOT digraph; filled dots for the root and positive vertices, open circles for negative."""
    if isinstance(t, CanonTree):
        t = SignedTree(t)
    vertex = "style=filled, fillcolor=black" if t.sign > 0 else "style=solid, fillcolor=white"
    lines = [
        "digraph tree {",
        '  node [shape=circle, label="", width=0.15];',
        "  n0 [style=filled, fillcolor=black];",
    ]
    edges = []
    next_id = 1
    stack = [(0, t.tree)]
    while stack:
        pid, node = stack.pop()
        ids = []
        for c in node.children:
            cid = next_id
            next_id += 1
            lines.append(f"  n{cid} [{vertex}];")
            edges.append(f"  n{pid} -> n{cid};")
            ids.append((cid, c))
        stack.extend(reversed(ids))
    return "\n".join(lines + edges + ["}"]) + "\n"


def _raw_nested(t: RawTree) -> str:
    if not t.children:
        return "[]"
    return "[" + ",".join(_raw_nested(c) for c in t.children) + "]"


def _from_nested_text(text: str) -> CanonTree:
    try:
        nested = json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"bad nested-list tree: {err}") from None
    if not isinstance(nested, list):
        raise UsageError("nested-list tree must be a JSON list")
    return canonize(RawTree.from_nested(nested))


def _rank_text(t: SignedTree, cap: int | None) -> str | None:
    try:
        r = rank(t.tree, cap).index
    except LimitExceeded:
        return None
    return ("-" if t.sign < 0 else "") + f"#{r}"


def _render(t: SignedTree, fmt: str, cap: int | None, source: str, steps=None) -> str:
    if fmt == "dot":
        return emit_dot(t).rstrip("\n")
    if fmt == "rank":
        return _rank_text(t, cap) or str(t)
    if fmt == "json":
        out = {"input": source, "result_code": str(t)}
        r = _rank_text(t, cap)
        if r is not None:
            out["result_rank"] = int(r.lstrip("-#"))
        if steps is not None:
            out["steps"] = steps
        return json.dumps(out)
    return str(t)


def _input(args) -> SignedTree:
    t = evaluate(parse_tree_arg(args.tree), args.cap)
    return negate(t) if args.neg else t


_SOLVE_FORMS = [
    ("eq2", re.compile(r"^(?P<a>\d+|a)?x\+C=1$")),
    ("eq3", re.compile(r"^(?P<a>\d+|a)?x\+(?P<b>\d+|b)?y\+C=1$")),
    ("eq4", re.compile(r"^(?P<a>\d+|a)?x(\^|\*\*)2\+(?P<b>\d+|b)?y\+C=1$")),
]


def _coeff(raw: str | None, flag: int | None, name: str) -> int:
    if raw is None:
        return 1
    if raw == name:
        if flag is None:
            raise UsageError(f"equation uses {name}; pass --{name}")
        return flag
    return int(raw)


def _cmd_solve(args, out: TextIO) -> None:
    form = "".join(args.form.split())
    for kind, pattern in _SOLVE_FORMS:
        m = pattern.match(form)
        if m:
            break
    else:
        raise UsageError(f"unrecognized equation {args.form!r}")
    if args.C is None:
        raise UsageError("pass the constant tree with --C")
    c = evaluate(parse_tree_arg(args.C), args.cap)
    if args.neg:
        c = negate(c)
    a = _coeff(m.group("a"), args.a, "a")
    if a < 1:
        raise UsageError("a must be >= 1")
    if kind == "eq4":
        b = _coeff(m.group("b"), args.b, "b")
        ok, wit = check_eq4_necessary(a, b, c)
        if args.format == "json":
            print(json.dumps({"input": args.form, "necessary": ok, "witnesses": wit}), file=out)
        else:
            print(f"necessary={'yes' if ok else 'no'}", file=out)
            for nx, ny in wit:
                print(f"nX={nx} nY={ny}", file=out)
        return
    if kind == "eq2":
        sol = solve_eq2(a, c)
    else:
        b = _coeff(m.group("b"), args.b, "b")
        if b < 1:
            raise UsageError("b must be >= 1")
        sol = solve_eq3(a, b, c)
    if args.format == "json":
        d = sol.to_dict()
        d["input"] = args.form
        print(json.dumps(d), file=out)
        return
    print(f"X={sol.x}", file=out)
    if sol.y is not None:
        print(f"Y={sol.y}", file=out)
    print(f"condition={sol.condition}", file=out)
    for k in sol.classes:
        line = f"class {k.shape.code} c={k.c} x={k.x}"
        if sol.y is not None:
            line += f" y={k.y}"
        print(line, file=out)
    for note in sol.notes:
        print(f"note: {note}", file=out)
    if sol.degenerate:
        print("note: degenerate solution (an unknown is the single vertex)", file=out)


def _cmd(args, out: TextIO) -> None:
    cap = args.cap
    fmt = args.format
    verb = args.verb
    if verb == "count":
        print(count(args.n), file=out)
    elif verb == "list":
        last = args.last if args.last is not None else args.first
        for n in range(args.first, last + 1):
            start = first_index(n)
            for i, code in enumerate(family_codes(n, cap)):
                print(f"{start + i}\t{code}", file=out)
    elif verb == "unrank":
        t = SignedTree(unrank(args.index, cap))
        print(_render(t, fmt, cap, f"#{args.index}"), file=out)
    elif verb == "rank":
        t = _input(args)
        print(rank(t.tree, cap).index, file=out)
    elif verb == "decode":
        print(_raw_nested(decode(args.code)), file=out)
    elif verb == "encode":
        t = SignedTree(_from_nested_text(args.nested))
        print(_render(t, fmt, cap, args.nested), file=out)
    elif verb in ("canon", "eval"):
        t = _input(args)
        print(_render(t, fmt, cap, args.tree), file=out)
    elif verb == "dot":
        print(emit_dot(_input(args)), end="", file=out)
    elif verb == "decompose":
        t = _input(args)
        text = to_text(decompose(t.tree))
        if t.sign < 0:
            text = f"-({text})"
        if fmt == "json":
            print(json.dumps({"input": args.tree, "result_code": str(t), "steps": text}), file=out)
        else:
            print(text, file=out)
    elif verb == "isprime":
        t = _input(args).tree
        prime = is_add_prime(t) if args.add else is_mult_prime(t)
        print("prime" if prime else "composite", file=out)
    elif verb == "factor":
        t = _input(args).tree
        factors = add_factorize(t) if args.add else list(mult_factorize(t))
        shown = []
        for f in factors:
            r = None if fmt == "code" else _rank_text(SignedTree(f), cap)
            shown.append(r or f.code)
        if fmt == "json":
            print(json.dumps({"input": args.tree, "result_code": t.code,
                              "steps": [f.code for f in factors]}), file=out)
        else:
            print(" ".join(shown), file=out)
    elif verb == "solve":
        _cmd_solve(args, out)
    else:  # pragma: no cover - argparse restricts verbs
        raise UsageError(f"unknown verb {verb}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["code", "rank", "dot", "json"], default=None)
    common.add_argument("--neg", action="store_true", help="negate the literal input tree")
    common.add_argument("--cap", type=int, default=None,
                        help="enumeration limit (default $TREEARITH_CAP or 10**7)")

    p = argparse.ArgumentParser(prog="treearith", description="Arithmetic on rooted unordered trees.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name: str, help: str, tree: bool = True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if tree:
            sp.add_argument("tree", help='bit string, #rank, or expression')
        return sp

    verb("canon", "canonical code of a tree")
    sp = verb("encode", "code of a tree given as nested JSON lists", tree=False)
    sp.add_argument("nested")
    sp = verb("decode", "nested-list structure of a code (input order kept)", tree=False)
    sp.add_argument("code")
    verb("rank", "global index of a tree")
    sp = verb("unrank", "tree with the given global index", tree=False)
    sp.add_argument("index", type=int)
    sp = verb("list", "index<TAB>code for families FIRST..LAST", tree=False)
    sp.add_argument("first", type=int)
    sp.add_argument("last", type=int, nargs="?")
    sp = verb("count", "number of trees with n vertices", tree=False)
    sp.add_argument("n", type=int)
    verb("eval", "evaluate an expression")
    verb("decompose", "expression over 1, + and stretch")
    for name in ("isprime", "factor"):
        sp = verb(name, f"{name} under addition or multiplication")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--add", action="store_true")
        g.add_argument("--mult", action="store_true")
    sp = verb("solve", "solve ax+C=1 or ax+by+C=1; necessary check for ax^2+by+C=1", tree=False)
    sp.add_argument("form")
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--C", metavar="TREE")
    verb("dot", "Graphviz rendering")
    return p


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_SYNTAX
    if args.format is None:
        args.format = "rank" if args.verb == "factor" else "code"
    if args.cap is None:
        args.cap = enumeration.config.cap
    try:
        _cmd(args, out)
    except (ParseError, DecodeError, UsageError) as exc:
        print(f"error: syntax: {exc}", file=err)
        return EXIT_SYNTAX
    except (UndefinedOperation, NoSolution, PrimalityUndefined) as exc:
        print(f"error: undefined: {exc}", file=err)
        return EXIT_UNDEFINED
    except LimitExceeded as exc:
        print(f"error: limit: {exc}", file=err)
        return EXIT_LIMIT
    return EXIT_OK


def main() -> None:
    sys.exit(run())
