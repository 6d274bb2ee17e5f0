"""Command-line front end.

Exit status: 0 on success or a positive decision, 1 on a negative
decision (or a failing suite), 2 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .clones import INFINITE, CloneId, clone_superpose, dims, enumerate_classes, equiv, normal_form, parse_clone, term_equiv
from .errors import CloneError
from .monoid import parse_monoid
from .suites import SUITES, Budget, check_suite
from .terms import format_term, frontier, parse_term, right_comb
from .words import parse_word, parse_words, superpose

VERBS = ("normalize", "equiv", "superpose", "frontier", "rc", "term-equiv", "dims", "check")

_OPERANDS = {
    "normalize": 1,
    "equiv": 2,
    "superpose": 1,
    "frontier": 1,
    "rc": 1,
    "term-equiv": 2,
    "dims": 1,
    "check": 0,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CloneError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pwclone", description="Pigmented-word clones and their quotients.")
    p.add_argument("--monoid", default="trivial", help="trivial | free:<symbols> | zmod:<n> | int-add | nat-max | table:<path>")
    p.add_argument("--clone", default="p", help="p | winc | arra:k | arra-rev:k | inc:k | magn[:k,k'] | stal:k | stal-rev:k | pill[:k,k']")
    p.add_argument("--arity", type=int, help="arity of the operand words or terms")
    p.add_argument("--args", help="superposition arguments separated by ';'")
    p.add_argument("--args-arity", type=int, help="common arity of the superposition arguments")
    p.add_argument("--json", action="store_true", help="print a JSON object")
    p.add_argument("--brute-force", action="store_true", help="count classes by enumeration")
    p.add_argument("--max-len", type=int, help="length bound for enumeration and suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-arity", type=int, default=2)
    p.add_argument("--suite", choices=SUITES)
    p.add_argument("command", choices=VERBS)
    p.add_argument("operands", nargs="*")
    return p


def _emit(out, result, clone: CloneId, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"result": result, "clone": str(clone), "monoid": str(clone.monoid)}), file=out)
    else:
        print(result, file=out)


def _run(opts, out) -> int:
    monoid = parse_monoid(opts.monoid)
    clone = parse_clone(opts.clone, monoid)
    verb, ops = opts.command, opts.operands
    if len(ops) != _OPERANDS[verb]:
        raise CloneError(f"{verb} takes {_OPERANDS[verb]} operand(s), got {len(ops)}")

    if verb == "normalize":
        p = parse_word(ops[0], monoid, opts.arity)
        _emit(out, str(normal_form(clone, p)), clone, opts.json)
        return 0
    if verb == "equiv":
        p, q = parse_word(ops[0], monoid, opts.arity), parse_word(ops[1], monoid, opts.arity)
        same = equiv(clone, p, q)
        _emit(out, same, clone, opts.json) if opts.json else print("true" if same else "false", file=out)
        return 0 if same else 1
    if verb == "superpose":
        if opts.args is None:
            raise CloneError("superpose needs --args")
        p = parse_word(ops[0], monoid, opts.arity)
        texts = opts.args.split(";") if opts.args.strip() else []
        args = parse_words(texts, monoid, opts.args_arity) if texts else []
        arity = opts.args_arity if not args else None
        if clone.variety == "P":
            result = superpose(p, args, arity)
        else:
            result = clone_superpose(clone, p, args, arity)
        _emit(out, str(result), clone, opts.json)
        return 0
    if verb == "frontier":
        t = parse_term(ops[0], monoid, opts.arity)
        _emit(out, str(frontier(t, monoid)), clone, opts.json)
        return 0
    if verb == "rc":
        p = parse_word(ops[0], monoid, opts.arity)
        _emit(out, format_term(right_comb(p)), clone, opts.json)
        return 0
    if verb == "term-equiv":
        t, s = parse_term(ops[0], monoid, opts.arity), parse_term(ops[1], monoid, opts.arity)
        same = term_equiv(clone, t, s)
        _emit(out, same, clone, opts.json) if opts.json else print("true" if same else "false", file=out)
        return 0 if same else 1
    if verb == "dims":
        try:
            n = int(ops[0])
        except ValueError:
            raise CloneError(f"dims needs an integer arity, got {ops[0]!r}") from None
        if opts.brute_force:
            count = len(enumerate_classes(clone, n, opts.max_len))
        else:
            count = dims(clone, n)
        if opts.json:
            _emit(out, str(count) if count is INFINITE else count, clone, True)
        else:
            print(count, file=out)
        return 0
    # check
    if opts.suite is None:
        raise CloneError("check needs --suite")
    budget = Budget(
        max_arity=opts.max_arity,
        max_len=3 if opts.max_len is None else opts.max_len,
        samples=opts.samples,
        seed=opts.seed,
    )
    report = check_suite(clone, opts.suite, budget)
    if opts.json:
        _emit(out, report.to_json(), clone, True)
    else:
        print(report.render(), file=out)
    return 0 if report.passed else 1


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        opts = build_parser().parse_intermixed_args(argv)
        return _run(opts, out)
    except CloneError as exc:
        print(f"pwclone: error: {exc}", file=sys.stderr)
        return 2


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
