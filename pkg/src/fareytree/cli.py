"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
domain errors.  Every failure writes a single ``error: ...`` line to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import tree as tree_engine
from .errors import DomainError, GuardError
from .exact_rational import ExtendedRational, parse
from .farey import FareyVertex, farey_intervals, farey_sequence
from .terminal import DEFAULT_ENUMERATION_GUARD, TerminalPair, decompress, enumerate_E_lshapes
from .young import delta, delta_one_sided, ranking_table, suranyi_terminal

__all__ = ["main", "run", "CliConfig", "LARGE_HEIGHT", "DEFAULT_VERIFY_HEIGHT"]

DEFAULT_VERIFY_HEIGHT = 60
LARGE_HEIGHT = 300


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    """Settings shared by the tree subcommands."""

    height: int = DEFAULT_VERIFY_HEIGHT
    guard: int = DEFAULT_ENUMERATION_GUARD
    stream: bool = False
    jobs: int = 1
    output: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if self.height < 0:
            raise DomainError(f"height must be nonnegative, got {self.height}")
        if self.guard < 2:
            raise DomainError(f"guard must be at least 2, got {self.guard}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be at least 1, got {self.jobs}")


def _rational(text: str) -> ExtendedRational:
    try:
        return parse(text)
    except (ValueError, OverflowError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _count(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fareytree", description="Farey intervals, terminal pairs and Young ranking tables.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", help="print the sorted terms of G(m, n)")
    s.add_argument("m", type=_count)
    s.add_argument("n", type=_count)

    s = sub.add_parser("intervals", help="print the gaps between adjacent terms of G(m, n)")
    s.add_argument("m", type=_count)
    s.add_argument("n", type=_count)

    s = sub.add_parser("table", help="print the ranking table of size (m, n) at slope p/q")
    s.add_argument("m", type=_positive)
    s.add_argument("n", type=_positive)
    s.add_argument("xi", type=_rational)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("delta", help="print tau(m,1) - tau(1,n) at a slope, or a one-sided limit")
    s.add_argument("m", type=_positive)
    s.add_argument("n", type=_positive)
    s.add_argument("xi", type=_rational)
    side = s.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")

    s = sub.add_parser("suranyi", help="map a tagged interval ((a,b),(m,n)) to its terminal pair")
    s.add_argument("a", type=_rational)
    s.add_argument("b", type=_rational)
    s.add_argument("m", type=_count)
    s.add_argument("n", type=_count)

    s = sub.add_parser("decompress", help="rebuild the L-shape of a terminal pair")
    s.add_argument("s", type=_positive)
    s.add_argument("t", type=_positive)
    s.add_argument("m", type=_positive)
    s.add_argument("n", type=_positive)

    tree = sub.add_parser("tree", help="build, export or verify the trees")
    tsub = tree.add_subparsers(dest="tree_command", required=True, parser_class=_Parser)
    b = tsub.add_parser("build")
    b.add_argument("--kind", choices=tree_engine.KINDS, required=True)
    b.add_argument("--height", type=_count, required=True)
    b.add_argument("--format", choices=("json", "dot"), default="json")
    b.add_argument("-o", "--output")
    b.add_argument("--max-vertices", type=_positive, default=tree_engine.DEFAULT_RESIDENT_BUDGET)
    v = tsub.add_parser("verify")
    v.add_argument("--height", type=_count, default=DEFAULT_VERIFY_HEIGHT)
    v.add_argument("--mode", choices=tree_engine.MODES, default="all")
    v.add_argument("--stream", action="store_true", help="keep only adjacent levels in memory")
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--max-sum", type=_positive, default=8, help="largest m+n for the L-shape enumeration")
    v.add_argument("--guard", type=_count, default=DEFAULT_ENUMERATION_GUARD)
    v.add_argument("--max-vertices", type=_positive)
    v.add_argument("--yes-large", action="store_true", help=f"allow heights above {LARGE_HEIGHT}")

    o = sub.add_parser("oracle", help="brute-force enumerations")
    osub = o.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    ls = osub.add_parser("lshapes", help="every normalized injective L-shape of size (m, n)")
    ls.add_argument("m", type=_positive)
    ls.add_argument("n", type=_positive)
    ls.add_argument("--guard", type=_count, default=DEFAULT_ENUMERATION_GUARD)
    return p


def _emit(text: str | bytes, path: str | None, out) -> None:
    if path:
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(path, mode) as fh:
            fh.write(text)
        return
    if isinstance(text, bytes):
        text = text.decode()
    out.write(text if text.endswith("\n") else text + "\n")


def _join(xs) -> str:
    return " ".join(str(x) for x in xs)


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "seq":
        _emit(str(farey_sequence(args.m, args.n)), None, out)
    elif cmd == "intervals":
        _emit("\n".join(f"({v.a},{v.b})" for v in farey_intervals(args.m, args.n)), None, out)
    elif cmd == "table":
        table = ranking_table(args.m, args.n, args.xi)
        _emit(json.dumps(table.to_json()) if args.json else str(table), None, out)
    elif cmd == "delta":
        if args.left or args.right:
            value = delta_one_sided(args.m, args.n, args.xi, "left" if args.left else "right")
        else:
            value = delta(args.m, args.n, args.xi)
        _emit(str(value), None, out)
    elif cmd == "suranyi":
        p = suranyi_terminal(FareyVertex(args.a, args.b, args.m, args.n))
        _emit(_join(p.as_tuple()), None, out)
    elif cmd == "decompress":
        shape = decompress(TerminalPair.of(args.s, args.t, args.m, args.n))
        _emit(f"bottom {_join(shape.bottom)}\nleft {_join(shape.left)}", None, out)
    elif cmd == "oracle":
        if args.guard < 2:
            raise DomainError(f"guard must be at least 2, got {args.guard}")
        shapes = enumerate_E_lshapes(args.m, args.n, guard=args.guard)
        _emit("\n".join(f"{_join(s.bottom)} | {_join(s.left)}" for s in shapes) or "", None, out)
    elif cmd == "tree" and args.tree_command == "build":
        cfg = CliConfig(height=args.height, output=args.output, fmt=args.format)
        t = tree_engine.build_tree(args.kind, cfg.height, max_vertices=args.max_vertices)
        _emit(tree_engine.export(t, cfg.fmt), cfg.output, out)
    elif cmd == "tree" and args.tree_command == "verify":
        cfg = CliConfig(height=args.height, guard=args.guard, stream=args.stream, jobs=args.jobs)
        if cfg.height > LARGE_HEIGHT and not args.yes_large:
            raise GuardError(f"height {cfg.height} is above {LARGE_HEIGHT}; pass --yes-large to run it")
        report = tree_engine.verify(
            cfg.height,
            args.mode,
            stream=cfg.stream,
            jobs=cfg.jobs,
            max_vertices=args.max_vertices,
            max_sum=args.max_sum,
            guard=cfg.guard,
        )
        _emit(report.summary(), None, out)
        if not report.passed:
            print(f"error: verification failed: {report.counterexample}", file=sys.stderr)
            return 1
    return 0


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
        return _dispatch(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError, IndexError) as exc:
        # DomainError and its subclasses are ValueErrors
        print(f"error: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)
