"""Command-line front end: ``codeposet <subcommand> ...``.

Usage errors exit with status 2 (argparse), domain errors with status 1 and
the error class name on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import diagram as dg
from .composition import Composition, c_matrix, decode
from .errors import CodePosetError, InvalidWitness
from .monk import monk_terms, monk_terms_stable
from .permutation import Permutation, encode
from .poset import (
    check_cover,
    hasse,
    insertion,
    is_insertable,
    is_removable,
    lower_covers,
    removing,
    upper_covers,
)
from .verify import DEFAULT_SEED, verify_geometric, verify_monk, verify_product, verify_theorem
from .words import cover_index, delete_letter, format_rows, move_schedule, replay, row_reading


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def cmd_code(args):
    alpha = encode(Permutation.parse(args.perm))
    _emit(alpha.to_json()) if args.json else print(alpha)


def cmd_decode(args):
    w = decode(Composition.parse(args.code))
    _emit({"n": w.n, "values": list(w.values)}) if args.json else print(w)


def cmd_cmatrix(args):
    m = c_matrix(Composition.parse(args.code))
    if args.json:
        _emit(m)
    else:
        for row in m:
            print(" ".join(map(str, row)))


def cmd_covers(args):
    alpha = Composition.parse(args.code)
    covers = upper_covers(alpha) if args.up else lower_covers(alpha)
    for other, w in covers:
        if args.json:
            _emit({"code": str(other), "i": w.i, "j": w.j, "z": w.z})
        else:
            print(f"{other}\t{w}")


def cmd_query(args):
    alpha = Composition.parse(args.code)
    fn = is_removable if args.command == "removable" else is_insertable
    answer = fn(alpha, args.i, args.z)
    _emit({"answer": answer}) if args.json else print(str(answer).lower())


def cmd_apply(args):
    alpha = Composition.parse(args.code)
    fn = removing if args.command == "remove" else insertion
    out = fn(alpha, args.i, args.z)
    _emit(out.to_json()) if args.json else print(out)


def cmd_word(args):
    alpha = Composition.parse(args.code)
    word = row_reading(alpha)
    if args.json:
        _emit({"n": word.n, "letters": list(word.letters)})
    elif args.flat:
        print(word)
    else:
        print(format_rows(alpha))


def cmd_schedule(args):
    upper, lower = Composition.parse(args.upper), Composition.parse(args.lower)
    witness = check_cover(upper, lower)
    if witness is None:
        raise InvalidWitness(f"{upper} does not cover {lower}")
    index = cover_index(upper, witness)
    schedule = move_schedule(upper, witness)
    if args.json:
        _emit({
            "witness": [witness.i, witness.j, witness.z],
            "deleted": index,
            "moves": [[pos, kind.value] for pos, kind in schedule],
        })
        return
    start = delete_letter(row_reading(upper), index)
    print(f"witness {witness}, delete letter {index}")
    words = replay(start, schedule)
    print(f"  {words[0]}")
    for (pos, kind), word in zip(schedule, words[1:]):
        print(f"{kind.value[0]}@{pos}\t{word}")


def _path_marks(alpha: Composition, i: int) -> dict:
    marks = {}
    prev = None
    for r, c in dg.c_path(alpha, i):
        if c >= 1:
            marks[(r, c)] = "*" if prev is None else ("|" if c == prev else "/")
        prev = c
    return marks


def cmd_diagram(args):
    alpha = Composition.parse(args.code)
    glyph = args.glyph
    if args.ladder:
        i, z = args.ladder
        frames, ok = dg.ladder_sequence(alpha, i, z)
        for k, frame in enumerate(frames):
            print(f"-- step {k}")
            print(dg.render(frame, glyph, args.top_down))
        result = frames[-1].to_composition() if ok else None
        print(f"-- result: {result if result is not None else 'not removable'}")
    else:
        marks = _path_marks(alpha, args.path) if args.path else None
        print(dg.render(alpha, glyph, args.top_down, marks))
    if args.figure:
        from .plotting import plot_diagram

        plot_diagram(alpha, args.figure, path_row=args.path)
        print(f"figure written to {args.figure}", file=sys.stderr)


def cmd_hasse(args):
    hd = hasse(args.n, force=args.force, workers=args.workers)
    if args.dot:
        sys.stdout.write(hd.to_dot())
    elif args.jsonl or args.json:
        sys.stdout.write(hd.to_jsonl())
    else:
        print(f"n={hd.n} nodes={len(hd.nodes)} edges={len(hd.edges)}")
        for upper, lower, w in hd.edges:
            print(f"{upper} > {lower}\t{w}")
    if args.figure:
        from .plotting import plot_hasse

        plot_hasse(hd, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)


def cmd_monk(args):
    alpha = Composition.parse(args.code)
    if args.stable:
        n, terms = monk_terms_stable(alpha, args.r)
    else:
        n, terms = alpha.n, monk_terms(alpha, args.r)
    for t in terms:
        if args.json:
            _emit({**t.to_json(), "n": n})
        else:
            print(f"({t.i},{t.j})\t{t.target}")


def cmd_verify(args) -> int:
    checks = [name for name in ("theorem", "monk", "geometric", "product") if getattr(args, name)]
    reports = []
    for name in checks or ["theorem"]:
        if name == "theorem":
            reports.append(verify_theorem(args.n, args.force))
        elif name == "monk":
            reports.append(verify_monk(args.n, args.force))
        elif name == "geometric":
            reports.append(verify_geometric(args.n, args.force))
        else:
            reports.append(verify_product(args.n, args.samples, args.seed, args.force))
    for rep in reports:
        if args.json:
            print(rep.to_json(timing=args.timing))
        else:
            print(rep.summary())
            for m in rep.mismatches[:20]:
                print("  mismatch: " + " | ".join(map(str, m)))
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="codeposet",
        description="Bruhat covers on Lehmer codes of permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", parents=[common], help="Lehmer code of a permutation")
    p.add_argument("perm", help="one-line notation, e.g. 5,7,6,2,1,8,3,4")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("decode", parents=[common], help="permutation of a code")
    p.add_argument("code", help="e.g. 4,5,4,1,0,2,0@8")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("cmatrix", parents=[common], help="the (n-1) x (n+1) c-matrix")
    p.add_argument("code")
    p.set_defaults(func=cmd_cmatrix)

    p = sub.add_parser("covers", parents=[common], help="lower or upper covers")
    p.add_argument("code")
    side = p.add_mutually_exclusive_group(required=True)
    side.add_argument("--up", action="store_true")
    side.add_argument("--down", action="store_true")
    p.set_defaults(func=cmd_covers)

    for name, fn in (("removable", cmd_query), ("insertable", cmd_query),
                     ("remove", cmd_apply), ("insert", cmd_apply)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("code")
        p.add_argument("i", type=int)
        p.add_argument("z", type=int)
        p.set_defaults(func=fn)

    p = sub.add_parser("word", parents=[common], help="row-reading reduced word")
    p.add_argument("code")
    p.add_argument("--flat", action="store_true", help="space-separated indices")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("schedule", parents=[common], help="moves from a deleted reading to the lower reading")
    p.add_argument("upper")
    p.add_argument("lower")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("diagram", help="box diagram of a code")
    p.add_argument("code")
    p.add_argument("--path", type=int, metavar="I", help="overlay the c-path of row I")
    p.add_argument("--ladder", type=int, nargs=2, metavar=("I", "Z"),
                   help="show the ladder moves resolving an (I, Z) removal")
    p.add_argument("--top-down", action="store_true")
    p.add_argument("--glyph", default=dg.GLYPH)
    p.add_argument("--figure", metavar="PATH", help="also write a matplotlib figure")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of all codes of S_n")
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--jsonl", action="store_true")
    p.add_argument("--force", action="store_true", help="allow n > 9")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--figure", metavar="PATH", help="also write a matplotlib figure")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("monk", parents=[common], help="Monk's rule index set")
    p.add_argument("--code", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--stable", action="store_true",
                   help="embed into a larger degree so no term is cut off")
    p.set_defaults(func=cmd_monk)

    p = sub.add_parser("verify", parents=[common], help="exhaustive cross-checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theorem", action="store_true")
    p.add_argument("--monk", action="store_true")
    p.add_argument("--geometric", action="store_true")
    p.add_argument("--product", action="store_true")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--timing", action="store_true", help="include elapsed time in JSON")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except CodePosetError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
