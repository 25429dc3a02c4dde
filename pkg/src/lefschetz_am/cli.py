"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 orbit cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .arcs import ArcError, SegmentChord, make_arc, parse_arc
from .braid import BraidError, normal_form, parse_word
from .classify import ClassificationError, classify
from .hurwitz import CapExceeded, orbit, standard_tuple, total_monodromy
from .lattice import LatticeError
from .quiver import QuiverError, QuiverRep, Barcode, decompose, iterated_twist, reduce, split_by_degree

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3

DEFAULT_CAP = 10**6


class InputError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_base(text: str, m: int) -> SegmentChord:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise InputError(f"--base expects k,l, got {text!r}")
    try:
        k, l = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputError(f"--base expects integers, got {text!r}") from exc
    return SegmentChord.of(k, l, m)


def cmd_classify(args, out) -> int:
    if args.arc is not None:
        if args.base is not None:
            raise InputError("give either --arc or --base/--conj, not both")
        a = parse_arc(args.arc, args.m, args.handedness)
    else:
        if args.base is None:
            raise InputError("--base (or --arc) is required")
        word = parse_word(args.conj, args.m + 1)
        a = make_arc(args.m, _parse_base(args.base, args.m), word, args.handedness)
    report = classify(args.m, args.n, a)
    if args.json:
        print(_dumps(report.to_json()), file=out)
    else:
        print(report.to_text(), file=out)
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    if args.m < 1:
        raise InputError(f"m must be at least 1, got {args.m}")
    if args.cap < 1:
        raise InputError("--cap must be positive")
    start = standard_tuple(args.m, args.handedness)
    tuples = orbit(start, args.cap)
    rows = sorted((t.to_json() for t in tuples), key=_dumps)
    for row in rows:
        if args.json:
            print(_dumps(row), file=out)
        else:
            print(" ".join(f"({c[0]},{c[1]})" if c else "?" for c in row["chords"]), file=out)
    mono = str(total_monodromy(start))
    if args.json:
        print(_dumps({"summary": {"count": len(rows), "monodromy": mono}}), file=out)
    else:
        print(f"count={len(rows)} monodromy={mono}", file=out)
    return EXIT_OK


def _rep_items(data) -> list[tuple[QuiverRep, int]]:
    items = data if isinstance(data, list) else [data]
    if not items:
        raise InputError("no representation given")
    out = []
    for item in items:
        if not isinstance(item, dict):
            raise InputError("representation must be a JSON object")
        out.append((QuiverRep.from_json(item), int(item.get("shift", 0))))
    return out


def cmd_decompose(args, out, stdin) -> int:
    text = stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    total = Barcode()
    for rep, shift in _rep_items(data):
        total = total + decompose(rep, shift)
    print(_dumps(total.to_json()), file=out)
    return EXIT_OK


def cmd_nf(args, out) -> int:
    if args.strands < 1:
        raise InputError("--strands must be positive")
    print(str(normal_form(parse_word(args.word, args.strands))), file=out)
    return EXIT_OK


def cmd_twist(args, out) -> int:
    c = reduce(iterated_twist(args.m, args.k, args.l))
    pieces = []
    for degree, rep in split_by_degree(c):
        item = rep.to_json()
        item["shift"] = -degree
        pieces.append(item)
    payload = pieces[0] if len(pieces) == 1 else pieces
    print(_dumps(payload), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lefschetz-am",
        description="Arcs, Hurwitz orbits and exotic cotangent bundles over A_m Milnor fibres.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify the total space for one extra arc")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--base", help="base chord k,l")
    c.add_argument("--conj", default="", help='conjugator braid word, e.g. "1 -2 1"')
    c.add_argument("--arc", help='arc text, e.g. base=1,2; conj="1 1"')
    c.add_argument("--handedness", type=int, choices=(1, -1), default=1)
    c.add_argument("--json", action="store_true")

    o = sub.add_parser("orbit", help="Hurwitz orbit of the standard chain")
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--cap", type=int, default=DEFAULT_CAP)
    o.add_argument("--handedness", type=int, choices=(1, -1), default=1)
    o.add_argument("--json", action="store_true")

    sub.add_parser("decompose", help="barcode of a quiver representation read from stdin")

    n = sub.add_parser("nf", help="normal form of a braid word")
    n.add_argument("--strands", type=int, required=True)
    n.add_argument("word", nargs="?", default="")

    t = sub.add_parser("twist", help="representation of an iterated Dehn twist")
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--l", type=int, required=True)
    return p


_INPUT_ERRORS = (InputError, ArcError, BraidError, ClassificationError, LatticeError,
                 QuiverError, ValueError)


def main(argv: Optional[Sequence[str]] = None, out=None, stdin=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "classify":
            return cmd_classify(args, out)
        if args.command == "orbit":
            return cmd_orbit(args, out)
        if args.command == "decompose":
            return cmd_decompose(args, out, stdin)
        if args.command == "nf":
            return cmd_nf(args, out)
        return cmd_twist(args, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
