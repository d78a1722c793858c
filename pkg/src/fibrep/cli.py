"""fibrep command line: decompositions, the golden string, index sets, verification."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .chung_graham import cg_decompose
from .golden import DEFAULT_PREFIX_CAP, ResourceLimitError, beta, letter_at, prefix
from .index_sets import SetHandle, enumerate_set, ranked
from .verify import TARGETS, run_target
from .zeckendorf import z_decompose


def natural(text: str) -> int:
    if not re.fullmatch(r"\d+", text.strip()):
        raise argparse.ArgumentTypeError(f"not a nonnegative decimal integer: {text!r}")
    return int(text)


def positive(text: str) -> int:
    n = natural(text)
    if n == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def k_range(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected K or A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad k range {text!r} (k >= 1, A <= B)")
    return list(range(lo, hi + 1))


def _emit(obj) -> None:
    print(json.dumps(obj), flush=True)


def cmd_decompose(args) -> int:
    n = args.n
    if args.system == "zeckendorf":
        terms = [(i, 1) for i in reversed(z_decompose(n).indices)]
    else:
        terms = list(reversed(cg_decompose(n).terms))
    if args.json:
        _emit({"n": str(n), "system": args.system,
               "terms": [{"index": i, "coeff": c} for i, c in terms]})
    else:
        body = " + ".join(f"{'2' if c == 2 else ''}F{i}" for i, c in terms) or "(empty)"
        print(f"{n} = {body}")
    return 0


def cmd_string(args) -> int:
    if args.prefix is not None:
        s = prefix(args.prefix, args.max_prefix)
        _emit({"length": args.prefix, "prefix": s}) if args.json else print(s)
    elif args.letter is not None:
        c = letter_at(args.letter)
        _emit({"position": str(args.letter), "letter": c}) if args.json else print(c)
    else:
        pos = beta(args.beta)
        _emit({"j": str(args.beta), "position": str(pos)}) if args.json else print(pos)
    return 0


def cmd_set(args) -> int:
    h = SetHandle(args.kind, args.k)
    if args.count is not None:
        pairs = ranked(h, args.count)
    else:
        pairs = enumerate(enumerate_set(h, args.upto), start=1)
    for rank, value in pairs:
        if args.json:
            _emit({"rank": rank, "value": str(value)})
        else:
            print(value)
    return 0


def cmd_verify(args) -> int:
    failed = total = 0
    for res in run_target(args.target, args.k, args.limit, args.max_prefix):
        total += 1
        failed += not res.ok
        if args.json:
            _emit({"check": res.check, "k": res.k, "cases": res.cases,
                   "failures": res.failures, "status": res.status})
        else:
            k = "-" if res.k is None else res.k
            line = f"{res.status}  {res.check:<24} k={k:<3} cases={res.cases}"
            if not res.ok:
                line += f"  failures={res.failures}  {res.detail}"
            print(line, flush=True)
    if not args.json:
        print(f"{total} checks, {failed} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibrep",
        description="Zeckendorf and Chung-Graham decompositions, the golden string, and related index sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose a nonnegative integer")
    d.add_argument("n", type=natural)
    d.add_argument("--system", choices=("zeckendorf", "chung-graham"), default="zeckendorf")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decompose)

    s = sub.add_parser("string", help="query the golden string")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--prefix", type=natural, metavar="L", help="first L letters")
    g.add_argument("--letter", type=positive, metavar="I", help="letter at 1-based position I")
    g.add_argument("--beta", type=positive, metavar="J", help="position of the J-th B")
    s.add_argument("--max-prefix", type=natural, default=DEFAULT_PREFIX_CAP)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_string)

    e = sub.add_parser("set", help="list elements of A_2k, B_2k, C_2k or I_2k")
    e.add_argument("--kind", choices=("A", "B", "C", "I"), required=True)
    e.add_argument("--k", type=positive, required=True)
    m = e.add_mutually_exclusive_group(required=True)
    m.add_argument("--count", type=natural, metavar="M", help="first M elements")
    m.add_argument("--upto", type=natural, metavar="N", help="all elements <= N")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_set)

    v = sub.add_parser("verify", help="check the theorems against brute force")
    v.add_argument("target", choices=("all",) + TARGETS)
    v.add_argument("--k", type=k_range, default=[1, 2, 3, 4], metavar="A..B")
    v.add_argument("--limit", type=positive, default=10**5)
    v.add_argument("--max-prefix", type=natural, default=DEFAULT_PREFIX_CAP)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        parser.exit(2, f"fibrep: error: {exc}\n")
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
