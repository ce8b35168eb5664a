"""Command-line interface: park, check, convert, count, render, verify.

Exit codes: 0 success, 1 usage error (bad flags or malformed literals),
2 domain error (valid input outside an operation's range), 3 verification
failure.  All object literals use the text grammars of their modules;
`--json` emits the documented stable schema instead of plain text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalan_objects as co
from . import counting, render, series, theorems, trees
from .parking import (format_preference, minimal_k, is_k_naples, park,
                      parse_preference, rearrangements_all_k_naples)
from .paths import (ascending_pref_from_path, descending_pref_from_path,
                    embed, is_dyck_path, is_k_dyck_path, max_deficit,
                    path_from_ascending_pref, path_from_descending_pref,
                    unembed, validate_step_word)

PREF_KINDS = ("pref-asc", "pref-desc", "kdyck")
GENERIC_KINDS = ("dyck", "full-tree", "tree")
STRICT_KINDS = ("strict-tree", "dissection", "ncp")
ALL_KINDS = PREF_KINDS + GENERIC_KINDS + STRICT_KINDS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        raise UsageError(message)


# -- convert machinery --------------------------------------------------------

def _need_k(k: int | None) -> int:
    if k is None:
        raise UsageError("this conversion requires --k")
    return k


def _parse_kdyck(text: str) -> str:
    word = validate_step_word(text.strip())
    if not is_k_dyck_path(word, max_deficit(word)):
        raise ValueError(f"not a k-Dyck path (balanced, ending in D): {word!r}")
    return word


def _to_kdyck(kind: str, text: str, k: int | None) -> str:
    if kind == "pref-asc":
        return path_from_ascending_pref(parse_preference(text))
    if kind == "pref-desc":
        return path_from_descending_pref(parse_preference(text))
    if kind == "kdyck":
        return _parse_kdyck(text)
    if kind == "dyck":
        return unembed(text.strip(), _need_k(k))
    if kind in ("full-tree", "tree"):
        return unembed(_to_generic_dyck(kind, text), _need_k(k))
    # strict kinds
    tree = _to_strict_tree(kind, text, k)
    return path_from_descending_pref(
        trees.descending_from_strict_tree(tree, _need_k(k)))


def _to_generic_dyck(kind: str, text: str) -> str:
    if kind == "dyck":
        word = validate_step_word(text.strip())
        if not is_dyck_path(word):
            raise ValueError(f"not a Dyck path: {word!r}")
        return word
    if kind == "full-tree":
        return trees.dyck_from_full_tree(trees.parse_full_tree(text.strip()))
    if kind == "tree":
        return trees.dyck_from_tree(trees.parse_tree(text.strip()))
    raise UsageError(f"cannot read {kind!r} as a plain Dyck object")


def _to_strict_tree(kind: str, text: str, k: int | None):
    k = _need_k(k)
    if kind == "strict-tree":
        tree = trees.parse_tree(text.strip())
        n = trees.tree_size(tree) - k
        if not trees.is_strict_descending_tree(tree, n, k):
            raise ValueError(f"tree is not strict descending for k={k}")
        return tree
    if kind == "dissection":
        d = co.parse_dissection(text)
        return co.strict_from_dissection(d, d.s - k - 1, k)
    if kind == "ncp":
        p = co.parse_ncp(text)
        return co.strict_from_ncp(p, p.m - k - 1, k)
    word = _to_kdyck(kind, text, k)
    return trees.strict_tree_from_descending(
        descending_pref_from_path(word), k)


def convert(from_kind: str, to_kind: str, text: str, k: int | None) -> str:
    """Convert between representation text forms (see ALL_KINDS)."""
    for kind in (from_kind, to_kind):
        if kind not in ALL_KINDS:
            raise UsageError(f"unknown representation {kind!r}")
    if to_kind in ("pref-asc", "pref-desc", "kdyck"):
        word = _to_kdyck(from_kind, text, k)
        if to_kind == "pref-asc":
            return format_preference(ascending_pref_from_path(word))
        if to_kind == "pref-desc":
            return format_preference(descending_pref_from_path(word))
        return word
    if to_kind in ("dyck", "full-tree", "tree"):
        if from_kind in GENERIC_KINDS:
            word = _to_generic_dyck(from_kind, text)
        else:
            word = embed(_to_kdyck(from_kind, text, k), _need_k(k))
        if to_kind == "dyck":
            return word
        if to_kind == "full-tree":
            return trees.format_full_tree(trees.full_tree_from_dyck(word))
        return trees.format_tree(trees.tree_from_dyck(word))
    # strict targets
    tree = _to_strict_tree(from_kind, text, k)
    kk = _need_k(k)
    n = trees.tree_size(tree) - kk
    if to_kind == "strict-tree":
        return trees.format_tree(tree)
    if to_kind == "dissection":
        return co.format_dissection(co.dissection_from_strict(tree, n, kk))
    return co.format_ncp(co.ncp_from_strict(tree, n, kk))


# -- subcommand handlers ------------------------------------------------------

def _cmd_park(args) -> int:
    outcome = park(parse_preference(args.pref), args.k)
    if args.json:
        payload = {"pref": list(parse_preference(args.pref)), "k": args.k,
                   "ok": outcome.ok,
                   "assignment": list(outcome.assignment) if outcome.ok else None,
                   "failed_car": outcome.failed_car}
        print(json.dumps(payload))
    else:
        print(outcome)
    return 0


def _cmd_check(args) -> int:
    pref = parse_preference(args.pref)
    k = args.k
    naples = is_k_naples(pref, k)
    least = minimal_k(pref) if pref else 0
    strictly = naples and (k == 0 or least == k)
    closed = rearrangements_all_k_naples(pref, k)
    if args.json:
        print(json.dumps({"pref": list(pref), "k": k, "k_naples": naples,
                          "strictly_k_naples": strictly,
                          "rearrangement_closed": closed,
                          "minimal_k": least}))
    else:
        print(f"k-naples: {str(naples).lower()}")
        print(f"strictly-k-naples: {str(strictly).lower()}")
        print(f"rearrangement-closed: {str(closed).lower()}")
        print(f"minimal-k: {least}")
    return 0


def _cmd_convert(args) -> int:
    out = convert(args.from_kind, args.to_kind, args.literal, args.k)
    if args.json:
        print(json.dumps({"from": args.from_kind, "to": args.to_kind,
                          "k": args.k, "input": args.literal, "output": out}))
    else:
        print(out)
    return 0


_TABLES = {
    "I": (counting.count_ascending, 0),
    "U": (counting.count_ascending_starts_one, 0),
    "strict": (counting.count_descending_strict, 1),
    "total": (counting.count_descending_total, 1),
}

_SEQUENCES = {
    "catalan": (series.catalan, 0),
    "fine": (series.fine, 0),
    "catalan-fine": (series.catalan_fine_convolution, 0),
}


def _cmd_count(args) -> int:
    if args.sequence:
        if args.sequence in _SEQUENCES:
            func, start = _SEQUENCES[args.sequence]
            rows = [(n, func(n)) for n in range(start, args.n + 1)]
        elif args.sequence in _TABLES:
            func, start = _TABLES[args.sequence]
            k = args.k if args.k is not None else 0
            rows = [(n, func(n, k)) for n in range(start, args.n + 1)]
        else:
            raise UsageError(f"unknown sequence {args.sequence!r}")
        if args.json:
            print(json.dumps({"sequence": args.sequence,
                              "values": [[n, v] for n, v in rows]}))
        else:
            for n, v in rows:  # OEIS b-file style: index value
                print(n, v)
        return 0
    if not args.table:
        raise UsageError("count needs --table or --sequence")
    func, start = _TABLES[args.table]
    k_max = args.k if args.k is not None else 0
    ns = range(start, args.n + 1)
    grid = [[func(n, k) for k in range(k_max + 1)] for n in ns]
    if args.json:
        print(json.dumps({"table": args.table, "n_max": args.n,
                          "k_max": k_max, "rows": grid}))
    else:
        print("n," + ",".join(f"k={k}" for k in range(k_max + 1)))
        for n, row in zip(ns, grid):
            print(f"{n}," + ",".join(str(v) for v in row))
    return 0


def _cmd_render(args) -> int:
    if args.type == "path":
        word = validate_step_word(args.literal.strip())
        print(render.render_path_svg(word) if args.svg
              else render.render_path_ascii(word))
        return 0
    parse = trees.parse_full_tree if args.type == "full-tree" else trees.parse_tree
    tree = parse(args.literal.strip())
    if args.type == "full-tree":
        tree = trees.prune(tree)
    if args.svg:
        print(render.render_tree_svg(tree))
    elif args.dot:
        print(render.render_tree_dot(tree))
    else:
        print(render.render_tree_ascii(tree))
    return 0


def _cmd_verify(args) -> int:
    names = args.theorem or theorems.theorem_ids()
    failed = False
    for name in names:
        rep = theorems.check_theorem(name, args.n_max, args.k_max)
        print(rep.line())
        for bad in rep.counterexamples:
            print(f"  counterexample: {bad}")
        failed = failed or not rep.passed
    if not args.theorem:
        for idrep in counting.verify_identities(args.order):
            verdict = "PASS" if idrep.ok else "FAIL"
            print(f"{idrep.name:24s} order<={idrep.order} {verdict}")
            for bad in idrep.failures[:20]:
                print(f"  failing coefficient: {bad}")
            failed = failed or not idrep.ok
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="knaples",
                     description="k-Naples parking functions toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("park", help="run the parking simulation")
    p.add_argument("--pref", required=True, help="comma-separated preference")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_park)

    p = sub.add_parser("check", help="membership tests for one preference")
    p.add_argument("--pref", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="from_kind", required=True,
                   choices=ALL_KINDS)
    p.add_argument("--to", dest="to_kind", required=True, choices=ALL_KINDS)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("literal")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("count", help="exact counting tables and sequences")
    p.add_argument("--table", choices=sorted(_TABLES), default=None)
    p.add_argument("--sequence", default=None,
                   help="b-file output: catalan, fine, catalan-fine, "
                        "or a table name with --k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--csv", action="store_true",
                   help="CSV table output (the default for --table)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("render", help="draw a path or tree")
    p.add_argument("--type", choices=("path", "tree", "full-tree"),
                   required=True)
    p.add_argument("--svg", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("literal")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="run the exhaustive theorem checks")
    p.add_argument("--theorem", action="append", default=None,
                   help="run only this check (repeatable); "
                        f"ids: {', '.join(theorems.theorem_ids())}")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--order", type=int, default=30,
                   help="truncation order for series identities")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if "NAPLES_MAX_N" in os.environ:  # oracle reads it per sweep
            int(os.environ["NAPLES_MAX_N"])
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
