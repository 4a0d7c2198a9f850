"""Command-line interface.

Input files use a small key/value grammar::

    # integer points, one configuration per file
    points: [[0,0],[1,0],[1,1],[0,1]]
    symmetry: [[1,2,3,0]]          # optional label permutations (generators)

`#` starts a comment; coordinates must be integers.  Syntax problems report
an exact line and column and exit with code 2; semantically bad input
(duplicate points, invalid permutations, invalid triangulations) exits with
code 3; usage errors exit 1; explicit resource-budget breaches exit 4.
All output is deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    InvalidInputError,
    RegulartriError,
    ResourceLimitError,
)
from .flips import find_flips
from .points import PointConfiguration
from .regularity import is_regular, regular_flips
from .search import SearchMode, enumerate_triangulations
from .symmetry import canonical_form, expand_group
from .triangulation import parse_triangulation, validate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_RESOURCE = 4


class ParseError(RegulartriError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"parse error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str):
        raise ParseError(self.line, self.col, message)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self):
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_blank(self):
        while self.pos < len(self.text):
            ch = self.peek()
            if ch == "#":
                while self.pos < len(self.text) and self.peek() != "\n":
                    self.advance()
            elif ch.isspace():
                self.advance()
            else:
                return

    def expect(self, ch: str):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {got}")
        self.advance()

    def parse_int(self) -> int:
        digits = ""
        if self.peek() == "-":
            digits = self.advance()
        if not self.peek().isdigit():
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected an integer, found {got}")
        while self.peek().isdigit():
            digits += self.advance()
        if self.peek() == ".":
            self.error("floating point numbers are not supported; use integers")
        return int(digits)

    def parse_int_list(self) -> list:
        self.expect("[")
        self.skip_blank()
        out = []
        if self.peek() == "]":
            self.advance()
            return out
        while True:
            self.skip_blank()
            out.append(self.parse_int())
            self.skip_blank()
            if self.peek() == ",":
                self.advance()
                continue
            self.expect("]")
            return out

    def parse_list_of_lists(self) -> list:
        self.expect("[")
        self.skip_blank()
        out = []
        if self.peek() == "]":
            self.advance()
            return out
        while True:
            self.skip_blank()
            out.append(self.parse_int_list())
            self.skip_blank()
            if self.peek() == ",":
                self.advance()
                continue
            self.expect("]")
            return out

    def parse_key(self) -> str:
        word = ""
        while self.peek().isalpha() or self.peek() == "_":
            word += self.advance()
        if not word:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected a key ('points' or 'symmetry'), found {got}")
        return word


def parse_input(text: str) -> dict:
    """Parse an input file into {'points': [...], 'symmetry': [...] or None}."""
    sc = _Scanner(text)
    seen = {}
    while True:
        sc.skip_blank()
        if sc.pos >= len(sc.text):
            break
        key = sc.parse_key()
        if key not in ("points", "symmetry"):
            sc.error(f"unknown key {key!r} (expected 'points' or 'symmetry')")
        if key in seen:
            sc.error(f"duplicate key {key!r}")
        sc.skip_blank()
        sc.expect(":")
        sc.skip_blank()
        seen[key] = sc.parse_list_of_lists()
    if "points" not in seen:
        raise ParseError(sc.line, sc.col, "missing required key 'points'")
    return {"points": seen["points"], "symmetry": seen.get("symmetry")}


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_input(fh.read())
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror}") from None


def _load_triangulation(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_triangulation(fh.read())
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror}") from None


def _format_tuple(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _format_index_set(indices) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


# -- subcommands --------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    data = _load(args.input)
    config = PointConfiguration(data["points"])
    group = None
    if args.orbits:
        if not data["symmetry"]:
            raise InvalidInputError("--orbits requires a 'symmetry' key in the input")
        group = expand_group(config, data["symmetry"])

    mode = SearchMode.ALL_FLIPS if args.all else SearchMode.REGULAR_ONLY
    lines = []
    forms = set()

    def visitor(canonical, gkz_vec, depth):
        if args.print_triangulations:
            lines.append(f"{canonical} {_format_tuple(gkz_vec)}")
        if group is not None:
            forms.add(canonical_form(parse_triangulation(canonical), group))

    count, stats = enumerate_triangulations(
        config,
        mode=mode,
        visitor=visitor,
        cache_capacity=args.flip_cache,
        baseline=args.baseline,
    )
    for line in sorted(lines):
        out.write(line + "\n")
    out.write(f"triangulations: {count}\n")
    if group is not None:
        out.write(f"orbits: {len(forms)}\n")
    if args.stats:
        out.write(f"nodes: {stats.nodes}\n")
        out.write(f"flips_evaluated: {stats.flips_evaluated}\n")
        out.write(f"reductions_r1: {stats.rays.r1}\n")
        out.write(f"reductions_r2: {stats.rays.r2}\n")
        out.write(f"reductions_r3: {stats.rays.r3}\n")
        out.write(f"reductions_r4: {stats.rays.r4}\n")
        out.write(f"scalar_tests: {stats.rays.scalar_tests}\n")
        out.write(f"lps_solved: {stats.rays.lps_solved}\n")
        out.write(f"cache_hits: {stats.cache_hits}\n")
        out.write(f"cache_misses: {stats.cache_misses}\n")
    return EXIT_OK


def cmd_regular(args, out) -> int:
    data = _load(args.input)
    config = PointConfiguration(data["points"])
    t = _load_triangulation(args.triangulation)
    check = validate(config, t)
    if not check:
        raise InvalidInputError(f"invalid triangulation ({check.kind}): {check.detail}")
    verdict = is_regular(config, t)
    if verdict.regular:
        out.write("regular\n")
        out.write(f"heights: {_format_tuple(verdict.heights)}\n")
    else:
        out.write("non-regular\n")
        out.write(f"certificate: {_format_tuple(verdict.certificate)}\n")
    return EXIT_OK


def cmd_flips(args, out) -> int:
    data = _load(args.input)
    config = PointConfiguration(data["points"])
    t = _load_triangulation(args.triangulation)
    check = validate(config, t)
    if not check:
        raise InvalidInputError(f"invalid triangulation ({check.kind}): {check.detail}")
    flips = find_flips(config, t)
    verdicts = None
    if is_regular(config, t).regular:
        good = regular_flips(config, t, flips)
        verdicts = [f in good for f in flips]
    for k, f in enumerate(flips):
        circuit = (
            f"{_format_index_set(f.circuit.plus)}"
            f"|{_format_index_set(f.circuit.zero)}"
            f"|{_format_index_set(f.circuit.minus)}"
        )
        line = f"circuit: {circuit} delta: {_format_tuple(f.delta)}"
        if verdicts is not None:
            line += f" regular: {'yes' if verdicts[k] else 'no'}"
        out.write(line + "\n")
    return EXIT_OK


# -- entry point ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="regulartri",
        description="Enumerate triangulations of integer point configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="enumerate triangulations by reverse search")
    enum.add_argument("--input", required=True, help="input file with points/symmetry")
    scope = enum.add_mutually_exclusive_group()
    scope.add_argument(
        "--regular", action="store_true",
        help="enumerate regular triangulations only (default)",
    )
    scope.add_argument(
        "--all", action="store_true",
        help="follow all flips, not only those with regular targets "
             "(reverse search then covers one sink's tree; combine with "
             "--baseline for the full connected component)",
    )
    enum.add_argument(
        "--print", dest="print_triangulations", action="store_true",
        help="print one canonical triangulation and GKZ-vector per line",
    )
    enum.add_argument("--stats", action="store_true", help="print run counters")
    enum.add_argument(
        "--flip-cache", type=int, default=40000, metavar="N",
        help="flip-list cache capacity (0 disables caching; default 40000)",
    )
    enum.add_argument(
        "--orbits", action="store_true",
        help="count orbits under the input's symmetry group",
    )
    enum.add_argument(
        "--baseline", action="store_true",
        help="use the visited-set DFS instead of reverse search (cross-check)",
    )

    reg = sub.add_parser("regular", help="decide regularity of one triangulation")
    reg.add_argument("--input", required=True)
    reg.add_argument("--triangulation", required=True,
                     help="file containing a {{...},{...}} triangulation literal")

    fl = sub.add_parser("flips", help="list the flips of one triangulation")
    fl.add_argument("--input", required=True)
    fl.add_argument("--triangulation", required=True)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "regular":
            return cmd_regular(args, out)
        return cmd_flips(args, out)
    except ParseError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_PARSE
    except ResourceLimitError as e:
        sys.stderr.write(f"resource limit: {e}\n")
        return EXIT_RESOURCE
    except RegulartriError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
