"""Command line front end: ``symthompson <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (invalid table, failed
check, unequal elements for ``eq``) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import io
from .codes import Triple, find_solution
from .perms import PermGroup, parse_perm
from .roots import root_group
from .successors import AlgContext, embed_alg, reverse_dict_order, successors_inductive
from .tables import (compose, equals, evaluate, expand_column, inverse, push_down,
                     push_up, random_element, validate)
from .topo import build_context, embed_topo
from .words import parse_evword, parse_word, format_evword


class DomainError(Exception):
    pass


def parse_group(text: str | None, degree: int) -> PermGroup:
    if text is None or text in ("trivial", "1", ""):
        return PermGroup.trivial(degree)
    if text in ("sym", "full"):
        return PermGroup.symmetric(degree)
    text = text.strip()
    if text.startswith("[") and text.lstrip("[").lstrip().startswith("["):
        return io.group_from_json(json.loads(text), degree)
    return PermGroup(degree, [parse_perm(part, degree) for part in text.split(";") if part.strip()])


def load_table(arg: str):
    t = io.table_from_json(io.load_json_arg(arg))
    problems = validate(t)
    if problems:
        raise DomainError("invalid table: " + "; ".join(problems))
    return t


def emit(obj) -> None:
    print(io.dumps(obj))


def cmd_validate(args):
    t = io.table_from_json(io.load_json_arg(args.table))
    problems = validate(t)
    if problems:
        for p in problems:
            print(p)
        return 1
    print("ok")
    return 0


def cmd_normalize(args):
    emit(io.canonical_json(load_table(args.table)))


def cmd_compose(args):
    # compose v u: apply u first
    emit(io.table_to_json(compose(load_table(args.v), load_table(args.u))))


def cmd_invert(args):
    emit(io.table_to_json(inverse(load_table(args.table))))


def cmd_eq(args):
    if equals(load_table(args.a), load_table(args.b)):
        print("equal")
        return 0
    print("not equal")
    return 1


def cmd_eval(args):
    t = load_table(args.table)
    print(format_evword(evaluate(t, parse_evword(args.point, t.n)), t.n))


def cmd_push(args):
    t = load_table(args.table)
    emit(io.table_to_json(push_up(t) if args.up else push_down(t), sort=False))


def cmd_expand(args):
    t = load_table(args.table)
    if not 0 <= args.column < len(t):
        raise DomainError(f"column {args.column} out of range")
    emit(io.table_to_json(expand_column(t, args.column), sort=False))


def cmd_successors(args):
    code = [parse_word(w, args.n) for w in args.code.split(",")]
    if args.order == "reverse-dict":
        code = reverse_dict_order(code)
    print(successors_inductive(code, args.m, args.n).format())


def cmd_embed_alg(args):
    t = load_table(args.table)
    if t.n != args.m:
        raise DomainError(f"table is over {t.n} letters, expected m={args.m}")
    ctx = AlgContext(args.m, args.n, t.group)
    emit(io.table_to_json(embed_alg(ctx, t, range_order=args.range_order)))


def _load_topo_context(arg):
    obj = io.load_json_arg(arg)
    m, n = int(obj["m"]), int(obj["n"])
    group = io.group_from_json(obj.get("G", []), m)
    h_group = io.group_from_json(obj.get("H", []), n)
    code = io.code_from_json(obj["S"], m)
    conj = io.perm_from_json(obj["conj"], n) if obj.get("conj") is not None else None
    return build_context(m, n, group, h_group, code, conj)


def cmd_embed_topo(args):
    ctx = _load_topo_context(args.context)
    emit(io.table_to_json(embed_topo(ctx, load_table(args.table))))


def cmd_find_code(args):
    group = parse_group(args.group, args.m)
    code = find_solution(Triple(args.m, args.n, group), args.depth)
    if code is None:
        print(f"none up to depth {args.depth}")
        return 1
    emit(io.code_to_json(code))


def cmd_root_group(args):
    group = parse_group(args.group, args.m)
    code = io.code_from_json(args.code, args.m)
    root = root_group(group, code)
    emit({"S": io.code_to_json(code),
          "generators": {str(g): io.perm_to_json(root(g)) for g in group.generators},
          "order": root.perms.order})


def cmd_verify_hom(args):
    rng = random.Random(args.seed)
    if args.mode == "alg":
        if args.m is None or args.n is None:
            raise DomainError("--m and --n are required for --mode alg")
        ctx = AlgContext(args.m, args.n, parse_group(args.group, args.m))
        hext = ctx.ext_group
        source = (args.m, ctx.group)

        def embed(t):
            return embed_alg(ctx, t, hext, range_order=args.range_order)
    else:
        if args.context is None:
            raise DomainError("--context is required for --mode topo")
        ctx = _load_topo_context(args.context)
        source = (ctx.n, ctx.h_group)

        def embed(t):
            return embed_topo(ctx, t)
    ok = checked = 0
    for _ in range(args.samples):
        checked += 1
        g = random_element(*source, args.depth, rng=rng)
        h = random_element(*source, args.depth, rng=rng)
        if equals(embed(compose(h, g)), compose(embed(h), embed(g))):
            ok += 1
            continue
        print("counterexample:", io.dumps({"g": io.table_to_json(g), "h": io.table_to_json(h)}))
        if args.stop:
            break
    print(f"{ok}/{checked} pairs satisfy ι(h∘g)=ι(h)∘ι(g)")
    return 0 if ok == args.samples else 1


def cmd_random(args):
    group = parse_group(args.group, args.n)
    emit(io.table_to_json(random_element(args.n, group, args.depth, seed=args.seed)))


def cmd_dot(args):
    print(io.table_to_dot(load_table(args.table)))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symthompson", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, *tables, help=None):
        p = sub.add_parser(name, help=help)
        for t in tables:
            p.add_argument(t, help="element JSON (inline or file path)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "table", help="check a table")
    add("normalize", cmd_normalize, "table", help="canonical form")
    add("compose", cmd_compose, "v", "u", help="v∘u (u applied first)")
    add("invert", cmd_invert, "table")
    add("eq", cmd_eq, "a", "b", help="decide equality of two elements")
    p = add("eval", cmd_eval, "table", help="evaluate at an eventually periodic point")
    p.add_argument("point", help='point as head(period), e.g. "10(01)"')
    p = add("push", cmd_push, "table")
    p.add_argument("--up", action="store_true", help="push up instead of down")
    p = add("expand", cmd_expand, "table")
    p.add_argument("--column", type=int, required=True)

    p = add("successors", cmd_successors, help="successor assignment of a code")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--code", required=True, help="comma separated words")
    p.add_argument("--order", choices=["reverse-dict", "given"], default="reverse-dict")

    p = add("embed-alg", cmd_embed_alg, "table", help="V_m(G) -> V_n(G_ext)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--range-order", choices=["domain", "reverse-dict"], default="domain")

    p = add("embed-topo", cmd_embed_topo, "table", help="V_n(H) -> V_m(G)")
    p.add_argument("--context", required=True, help='JSON {"m","n","G","H","S","conj"}')

    p = add("find-code", cmd_find_code, help="search for a G-invariant code of size n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", default="trivial")
    p.add_argument("--depth", type=int, default=3)

    p = add("root-group", cmd_root_group)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--code", required=True, help='JSON list or comma separated words')

    p = add("verify-hom", cmd_verify_hom, help="random homomorphism check of an embedding")
    p.add_argument("--mode", choices=["alg", "topo"], required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--group", default="trivial")
    p.add_argument("--context")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--range-order", choices=["domain", "reverse-dict"], default="domain")
    p.add_argument("--stop", action="store_true", help="stop at the first counterexample")

    p = add("random", cmd_random, help="random element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", default="trivial")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)

    add("dot", cmd_dot, "table", help="Graphviz tree-pair diagram")
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (DomainError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0 if code is None else code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
