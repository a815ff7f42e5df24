"""Command-line entry point: ``graphdeck <subcommand> ...``.

Exit codes: 0 success, 1 a theorem-tagged bound failed, 2 usage error,
3 malformed graph6 or deck input, 4 enumeration or oracle cap exceeded,
5 any other rejected input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from . import __version__
from .deck import DeckError, common_card_breakdown, common_card_count, format_deck, full_deck, read_deck
from .families import FAMILY_IDS, family
from .generate import CapExceeded
from .graph import GraphClass, GraphError
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .recognize import DEFAULT_ORACLE_CAP, PROPERTIES, RecognitionError, UndecidableAtScale, preimage_search, recognize
from .search import BOUND_ALIASES, BOUNDS, max_common_cards, resolve_bound, verify_bound

EXIT_BOUND_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3
EXIT_CAP = 4
EXIT_REJECTED = 5

THREADS_ENV = "GRAPHDECK_THREADS"


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _read_graph6(arg: str | None, stdin: TextIO):
    if arg is None or arg == "-":
        line = stdin.readline()
        if not line.strip():
            raise Graph6Error("no graph6 line on standard input", 0)
        return decode_graph6(line)
    return decode_graph6(arg)


def _open_deck(path: str, stdin: TextIO):
    if path == "-":
        return read_deck(stdin)
    with open(path, encoding="ascii") as fh:
        return read_deck(fh)


def _cmd_deck(args, out, stdin) -> int:
    g = _read_graph6(args.graph6, stdin)
    out.write(format_deck(full_deck(g)))
    return 0


def _cmd_common(args, out, stdin) -> int:
    a = decode_graph6(args.g6_a)
    b = decode_graph6(args.g6_b)
    rows = common_card_breakdown(a, b)
    total = sum(min(x, y) for _, x, y in rows)
    if args.pretty:
        out.write(f"common cards: {total}\n")
        out.write(f"{'card':<16} {'in A':>5} {'in B':>5} {'shared':>6}\n")
        for card, x, y in rows:
            out.write(f"{encode_graph6(card):<16} {x:>5} {y:>5} {min(x, y):>6}\n")
        return 0
    out.write(f"{total}\n")
    for card, x, y in rows:
        out.write(_dump({"card": encode_graph6(card), "mult_a": x, "mult_b": y, "shared": min(x, y)}) + "\n")
    return 0


def _cmd_family(args, out, stdin) -> int:
    inst = family(args.id, args.k)
    measured = None
    if args.check:
        measured = common_card_count(inst.forest, inst.unicyclic)
    out.write(encode_graph6(inst.forest) + "\n")
    out.write(encode_graph6(inst.unicyclic) + "\n")
    out.write(_dump({
        "family": inst.family_id,
        "k": inst.k,
        "n": inst.n,
        "expected_common": inst.expected_common,
        "measured_common": measured,
    }) + "\n")
    if measured is not None and measured != inst.expected_common:
        return EXIT_BOUND_FAILED
    return 0


def _cmd_recognize(args, out, stdin) -> int:
    sub = _open_deck(args.deck, stdin)
    if sub.n != args.n:
        raise DeckError(f"deck file declares n={sub.n}, --n is {args.n}")
    verdict = recognize(sub, args.n, args.property, oracle_cap=args.oracle_cap)
    out.write(_dump(verdict.to_json()) + "\n")
    return 0


def _cmd_preimages(args, out, stdin) -> int:
    sub = _open_deck(args.deck, stdin)
    if sub.n != args.n:
        raise DeckError(f"deck file declares n={sub.n}, --n is {args.n}")
    for g in preimage_search(sub, args.n, cap=args.oracle_cap).values():
        out.write(encode_graph6(g) + "\n")
    return 0


def _cmd_search(args, out, stdin) -> int:
    rec = max_common_cards(args.n, args.class_a, args.class_b, workers=args.workers)
    if args.pretty:
        out.write(f"n={rec.n} {rec.label_a} vs {rec.label_b}: max common cards {rec.max_common}"
                  f" ({rec.witness_total} extremal pairs, {rec.pairs_examined}/{rec.pairs_total} pairs share a card)\n")
        for a, b in rec.witnesses:
            out.write(f"  {encode_graph6(a)}  {encode_graph6(b)}\n")
        return 0
    out.write(_dump(rec.to_json(timing=args.timing)) + "\n")
    return 0


def _cmd_verify(args, out, stdin) -> int:
    if args.n_min > args.n_max:
        raise ValueError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    rows = verify_bound(args.bound, range(args.n_min, args.n_max + 1), workers=args.workers)
    failed = False
    if args.pretty:
        spec = resolve_bound(args.bound)
        out.write(f"{spec.name} ({spec.kind}): {spec.source}\n")
        out.write(f"{'n':>3} {'max':>5} {'bound':>6} {'result':>8} {'tight':>6} {'witnesses':>10}\n")
    for row in rows:
        if row.asserted and not row.holds:
            failed = True
        if args.pretty:
            result = ("pass" if row.holds else "FAIL") if row.asserted else ("ok" if row.holds else "exceeds")
            mx = "-" if row.record.max_common is None else row.record.max_common
            out.write(f"{row.record.n:>3} {mx:>5} {row.bound_value:>6} {result:>8} "
                      f"{str(row.tight).lower():>6} {row.record.witness_total:>10}\n")
        else:
            out.write(_dump(row.to_json(timing=args.timing)) + "\n")
    return EXIT_BOUND_FAILED if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphdeck", description="Decks, common cards and partial-deck recognition.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker processes for deck precomputation (default: ${THREADS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", help="print the deck of a graph as a deck file")
    p.add_argument("graph6", nargs="?", help="graph6 string; read from stdin when omitted or '-'")
    p.set_defaults(func=_cmd_deck)

    p = sub.add_parser("common", help="count common cards of two graphs")
    p.add_argument("g6_a")
    p.add_argument("g6_b")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_common)

    p = sub.add_parser("family", help="emit a forest/unicyclic extremal pair")
    p.add_argument("--id", type=int, required=True, choices=FAMILY_IDS)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true", help="recompute the common-card count")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("recognize", help="decide a property from a (partial) deck file")
    p.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deck", required=True, help="deck file, or '-' for stdin")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("preimages", help="list all graphs whose deck contains the given cards")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deck", required=True, help="deck file, or '-' for stdin")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=_cmd_preimages)

    classes = [c.value for c in GraphClass]
    p = sub.add_parser("search", help="maximum common cards between two graph classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class-a", required=True, choices=classes)
    p.add_argument("--class-b", required=True, choices=classes)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (output no longer byte-stable)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="check a common-card bound exhaustively over a range of orders")
    p.add_argument("--bound", required=True, choices=sorted(BOUNDS) + sorted(BOUND_ALIASES))
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (output no longer byte-stable)")
    p.set_defaults(func=_cmd_verify)
    return parser


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    args.workers = _threads(args)
    try:
        return args.func(args, out, stdin)
    except (Graph6Error, DeckError) as exc:
        code, msg = EXIT_BAD_INPUT, str(exc)
    except (CapExceeded, UndecidableAtScale) as exc:
        code, msg = EXIT_CAP, str(exc)
    except (GraphError, RecognitionError, ValueError) as exc:
        code, msg = EXIT_REJECTED, str(exc)
    print(f"graphdeck: error: {msg}", file=sys.stderr)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
