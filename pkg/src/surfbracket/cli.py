"""Command-line front end.

Exit codes: 0 success or geometric, 1 usage, 2 parse/validation error,
3 not an isomorphism, 4 non-geometric (or a witness was found),
5 not peripheral.  A failing selftest also exits 1.
"""

from __future__ import annotations

import argparse
import sys

from surfbracket.bracket import bracket, render_chain
from surfbracket.geometricity import GeometricityError, find_witness, is_geometric
from surfbracket.maps import MapError, parse_map
from surfbracket.selftest import run_selftest
from surfbracket.surface import SurfaceError, is_peripheral, load_surface, topology_summary
from surfbracket.words import CyclicWord, WordError, parse_word

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NOT_ISO = 3
EXIT_NON_GEOMETRIC = 4
EXIT_NOT_PERIPHERAL = 5
EXIT_SELFTEST_FAILED = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _class(text: str, rank: int) -> CyclicWord:
    c = CyclicWord(parse_word(text, rank).letters)
    if not c:
        raise WordError(f"{text!r} is the trivial class")
    return c


def cmd_info(args) -> int:
    s = load_surface(args.surface)
    chi, genus, b = topology_summary(s)
    print(f"rank {s.rank}")
    print(f"chi {chi}")
    print(f"genus {genus}")
    print(f"boundary {b}: {' '.join(str(w) for w in s.boundary)}")
    for i, w in enumerate(s.boundary):
        print(f"C{i}: {w}")
    return EXIT_OK


def cmd_bracket(args) -> int:
    s = load_surface(args.surface)
    x = CyclicWord(parse_word(args.x, s.rank).letters)
    y = CyclicWord(parse_word(args.y, s.rank).letters)
    print(render_chain(bracket(s, x, y)))
    return EXIT_OK


def cmd_peripheral(args) -> int:
    s = load_surface(args.surface)
    info = is_peripheral(s, _class(args.word, s.rank))
    print(info)
    return EXIT_OK if info.peripheral else EXIT_NOT_PERIPHERAL


def _load_map_args(args):
    s1 = load_surface(args.source)
    s2 = load_surface(args.target)
    f = parse_map(args.map, s1.rank, s2.rank)
    return s1, s2, f


def cmd_mapcheck(args) -> int:
    s1, s2, f = _load_map_args(args)
    report = is_geometric(f, s1, s2, budget=args.samples)
    print(report.render())
    if report.reason == "not-isomorphism":
        return EXIT_NOT_ISO
    if not report.geometric:
        w = find_witness(f, s1, s2, args.maxlen, args.samples)
        if w is not None:
            print(f"witness: ({w[0]}, {w[1]})")
        return EXIT_NON_GEOMETRIC
    if args.strict:
        if report.orientation_sign == 1:
            print("strict: bracket-commuting")
            return EXIT_OK
        if report.orientation_sign == -1:
            print("strict: not bracket-commuting")
            w = find_witness(f, s1, s2, args.maxlen, args.samples, strict=True)
            if w is not None:
                print(f"witness: ({w[0]}, {w[1]})")
            return EXIT_NON_GEOMETRIC
        print("strict: undetermined")
    return EXIT_OK


def cmd_witness(args) -> int:
    s1, s2, f = _load_map_args(args)
    w = find_witness(f, s1, s2, args.maxlen, args.samples, strict=args.strict)
    if w is None:
        print("witness: none")
        return EXIT_OK
    print(f"witness: ({w[0]}, {w[1]})")
    return EXIT_NON_GEOMETRIC


def cmd_selftest(args) -> int:
    print(f"seed {args.seed}")
    print(f"rank-max {args.rank_max} len-max {args.len_max} trials {args.trials}")
    report = run_selftest(args.rank_max, args.len_max, args.trials, args.seed)
    for suite in report.suites:
        print(suite.line())
    total = sum(s.cases for s in report.suites)
    failed = sum(s.failures for s in report.suites)
    print(f"total: {total} cases, {failed} failures")
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_SELFTEST_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="surfbracket", description="Goldman bracket and geometricity on surfaces with boundary.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("info", help="rank, Euler characteristic, genus and boundary words")
    q.add_argument("surface")
    q.set_defaults(func=cmd_info)

    q = sub.add_parser("bracket", help="Goldman bracket of two classes")
    q.add_argument("surface")
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(func=cmd_bracket)

    q = sub.add_parser("peripheral", help="is a class a power of a boundary class")
    q.add_argument("surface")
    q.add_argument("word")
    q.set_defaults(func=cmd_peripheral)

    for name, func, helptext in (
        ("mapcheck", cmd_mapcheck, "decide whether a map is homotopic to a homeomorphism"),
        ("witness", cmd_witness, "search for a pair on which the map breaks bracket commutation"),
    ):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("source")
        q.add_argument("target")
        q.add_argument("map", help="generator images, e.g. 'a->a,b->ba'")
        q.add_argument("--samples", type=int, default=20000, help="bracket evaluation budget")
        q.add_argument("--maxlen", type=int, default=3, help="longest class tried in witness search")
        q.add_argument("--strict", action="store_true", help="count orientation-reversing maps as non-commuting")
        q.set_defaults(func=func)

    q = sub.add_parser("selftest", help="run the seeded property suites")
    q.add_argument("--rank-max", type=int, default=3)
    q.add_argument("--len-max", type=int, default=5)
    q.add_argument("--trials", type=int, default=200)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors and --help; keep main() callable as a function
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (SurfaceError, WordError, MapError, GeometricityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
