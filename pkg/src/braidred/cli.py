"""Command-line surface.

Words are passed as a quoted argument ("1 -2 1" / "0:1 -1:2") or through
@file indirection; text is UTF-8 and newline-insensitive.  Exit codes:
0 success (or equal, in check modes), 1 not equal, 2 parse error,
3 invalid strand count or index.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import ALGORITHMS, format_table, run_bench, write_csv
from .bridge import fsd, fsd_symmetric
from .extended import RULE_CORRECTED, RULE_LITERAL, ExtendedWord, ged_details
from .garside import equal_group, equal_monoid
from .reductions import (
    conjugacy_search_instance,
    reduce_word_problem,
    search_conjugator,
)
from .words import (
    LetterRangeError,
    ParseError,
    StandardWord,
    StrandCountError,
    StrandMismatchError,
)

EXIT_OK = 0
EXIT_NOT_EQUAL = 1
EXIT_PARSE = 2
EXIT_STRANDS = 3


def _word_text(argument: str) -> str:
    if argument.startswith("@"):
        return Path(argument[1:]).read_text(encoding="utf-8")
    return argument


def _cmd_divide(args: argparse.Namespace) -> int:
    word = StandardWord.parse(_word_text(args.word), args.n)
    pair = fsd_symmetric(word) if args.form == "qp" else fsd(word)
    print(pair.p.serialize())
    print(pair.q.serialize())
    return EXIT_OK


def _cmd_ged(args: argparse.Namespace) -> int:
    word = ExtendedWord.parse(_word_text(args.word), args.n)
    if args.separation == RULE_LITERAL:
        print(
            "warning: literal separation constants; output is not guaranteed "
            "equivalent to the input",
            file=sys.stderr,
        )
    result = ged_details(word, rule=args.separation)
    print(result.pair.p.serialize())
    print(result.pair.q.serialize())
    if args.trace:
        trip = result.trip
        print(f"trip: L={list(trip.leading)} delta={trip.delta} L'={list(trip.trailing)}")
    return EXIT_OK


def _cmd_reduce_word(args: argparse.Namespace) -> int:
    x = StandardWord.parse(_word_text(args.x), args.n)
    y = StandardWord.parse(_word_text(args.y), args.n)
    pair = reduce_word_problem(x, y)
    print(pair.p.serialize())
    print(pair.q.serialize())
    if not args.check:
        return EXIT_OK
    group_equal = equal_group(x, y)
    monoid_equal = equal_monoid(pair.p, pair.q)
    print(f"group-equal: {'yes' if group_equal else 'no'}")
    print(f"monoid-equal: {'yes' if monoid_equal else 'no'}")
    return EXIT_OK if group_equal else EXIT_NOT_EQUAL


def _cmd_reduce_conj(args: argparse.Namespace) -> int:
    u = StandardWord.parse(_word_text(args.u), args.n)
    v = StandardWord.parse(_word_text(args.v), args.n)
    instance = conjugacy_search_instance(u, v)
    equation = instance.equation
    for word in (equation.a, equation.b, equation.c, equation.d):
        print(word.serialize())
    if args.search is None:
        return EXIT_OK
    found = search_conjugator(instance, args.search)
    if found is None:
        print(f"none up to {args.search}")
        return EXIT_NOT_EQUAL
    print(found.serialize())
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    w1 = StandardWord.parse(_word_text(args.w1), args.n)
    w2 = StandardWord.parse(_word_text(args.w2), args.n)
    equal = equal_monoid(w1, w2) if args.monoid else equal_group(w1, w2)
    print(f"equal: {'yes' if equal else 'no'}")
    return EXIT_OK if equal else EXIT_NOT_EQUAL


def _cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(
        args.algo,
        ns=args.n,
        sizes=args.sizes,
        trials=args.trials,
        seed=args.seed,
    )
    print(format_table(rows))
    if args.csv is not None:
        if args.csv == "-":
            write_csv(rows, sys.stdout)
        else:
            with open(args.csv, "w", encoding="utf-8", newline="") as stream:
                write_csv(rows, stream)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidred",
        description="Divide braid words into positive quotient form and reduce "
        "group problems to the positive monoid.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    divide = commands.add_parser(
        "divide", help="divide a standard word into positive words P, Q"
    )
    divide.add_argument("--n", type=int, required=True, help="strand count")
    divide.add_argument(
        "--form",
        choices=("pq", "qp"),
        default="pq",
        help="pq: V = P*Q^-1 (default); qp: V = Q^-1*P",
    )
    divide.add_argument("word", help="word text or @file")
    divide.set_defaults(handler=_cmd_divide)

    ged_cmd = commands.add_parser(
        "ged", help="divide an extended word into positive extended words"
    )
    ged_cmd.add_argument("--n", type=int, required=True)
    ged_cmd.add_argument("--trace", action="store_true", help="print the trip")
    ged_cmd.add_argument(
        "--separation",
        choices=(RULE_CORRECTED, RULE_LITERAL),
        default=RULE_CORRECTED,
        help="rule-three constants; 'literal' is not equivalence-preserving",
    )
    ged_cmd.add_argument("word", help="extended word text (a:i tokens) or @file")
    ged_cmd.set_defaults(handler=_cmd_ged)

    reduce_word = commands.add_parser(
        "reduce-word", help="reduce X = Y to a positive-word question P = Q"
    )
    reduce_word.add_argument("--n", type=int, required=True)
    reduce_word.add_argument("--check", action="store_true", help="print oracle verdicts")
    reduce_word.add_argument("x", help="word text or @file")
    reduce_word.add_argument("y", help="word text or @file")
    reduce_word.set_defaults(handler=_cmd_reduce_word)

    reduce_conj = commands.add_parser(
        "reduce-conj", help="reduce conjugacy of U, V to A*M*B = C*M*D"
    )
    reduce_conj.add_argument("--n", type=int, required=True)
    reduce_conj.add_argument(
        "--search",
        type=int,
        metavar="L",
        help="brute-force search for M up to this length",
    )
    reduce_conj.add_argument("u", help="word text or @file")
    reduce_conj.add_argument("v", help="word text or @file")
    reduce_conj.set_defaults(handler=_cmd_reduce_conj)

    check = commands.add_parser("check", help="oracle equality of two words")
    check.add_argument("--n", type=int, required=True)
    check.add_argument(
        "--monoid", action="store_true", help="compare as positive monoid words"
    )
    check.add_argument("w1", help="word text or @file")
    check.add_argument("w2", help="word text or @file")
    check.set_defaults(handler=_cmd_check)

    bench = commands.add_parser("bench", help="time the division on random words")
    bench.add_argument("--algo", choices=ALGORITHMS, default="ged")
    bench.add_argument(
        "--n", type=_int_list, default=[8], help="comma-separated strand counts"
    )
    bench.add_argument(
        "--sizes",
        type=_int_list,
        required=True,
        help="comma-separated ascending word lengths",
    )
    bench.add_argument("--trials", type=int, default=5)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--csv", help="write rows as CSV to this path ('-' for stdout)")
    bench.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE
    except (StrandCountError, LetterRangeError, StrandMismatchError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_STRANDS
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
