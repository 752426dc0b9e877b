"""Command-line front end.

Exit status: 0 for success or a positive verdict, 1 for a negative verdict,
2 for usage, input or I/O errors.  Data goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

from .dot import DotFormatError, parse_dot, to_dot
from .enumeration import SOFT_MAX_ORDER, EnumerationError, count_graphs_burnside, enumerate_order
from .graph import GraphError
from .graph6 import Graph6Error, decode_graph6, encode_graph6, iter_g6
from .hereditary import COGRAPH, ClassSpec, Excluding, ForbiddenSet, ForbiddenSetError
from .search import (
    ReportFormatError,
    find_obstructions,
    load_catalog,
    parse_report,
    verify_report,
    write_report,
)

log = logging.getLogger("edgeapex")

WORKERS_ENV = "EDGEAPEX_WORKERS"
CACHE_ENV = "EDGEAPEX_CACHE"


class CliError(Exception):
    """Operational failure reported with exit status 2."""


def parse_orders(text: str) -> range:
    if ".." in text:
        lo, _, hi = text.partition("..")
        a, b = int(lo), int(hi)
    else:
        a = b = int(text)
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"bad order range {text!r}")
    return range(a, b + 1)


def positive_order(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"order must be at least 1, got {n}")
    return n


def load_class(source: str) -> ClassSpec:
    if source == "cograph":
        return COGRAPH
    try:
        return Excluding(ForbiddenSet.from_file(source))
    except OSError as exc:
        raise CliError(f"cannot read forbidden set {source}: {exc}") from None
    except (Graph6Error, ForbiddenSetError, GraphError) as exc:
        raise CliError(f"bad forbidden set {source}: {exc}") from None


def resolve_workers(requested: int | None) -> int:
    if requested is None:
        requested = int(os.environ.get(WORKERS_ENV, "1"))
    if requested == 0:
        return os.cpu_count() or 1
    return max(1, requested)


@contextmanager
def open_in(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin
    else:
        try:
            fh = open(path, encoding="latin-1")
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
        with fh:
            yield fh


@contextmanager
def open_out(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        try:
            fh = open(path, "w", encoding="ascii")
        except OSError as exc:
            raise CliError(f"cannot write {path}: {exc}") from None
        with fh:
            yield fh


def cmd_enumerate(args: argparse.Namespace) -> int:
    level = enumerate_order(args.n, cache_dir=args.cache, workers=resolve_workers(args.workers))
    with open_out(args.output) as out:
        for g in level.reps:
            out.write(to_dot(g) if args.format == "dot" else encode_graph6(g) + "\n")
    log.info("order %d: %d graphs", args.n, len(level))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    cls = load_class(args.cls)
    text = args.graph6
    if text == "-":
        text = sys.stdin.readline()
    g = decode_graph6(text)
    result = cls.apex(g)
    print(result.describe())
    return 0 if result else 1


def cmd_find_obstructions(args: argparse.Namespace) -> int:
    cls = load_class(args.cls)
    orders = args.orders
    if orders.stop - 1 > SOFT_MAX_ORDER:
        if not args.force:
            raise CliError(f"orders above {SOFT_MAX_ORDER} need --force")
        log.warning("searching up to order %d; expect a very long run", orders.stop - 1)
    report = find_obstructions(
        cls, orders, workers=resolve_workers(args.workers), cache_dir=args.cache
    )
    with open_out(args.output) as out:
        write_report(report, out, args.format)
    log.info("%d obstructions in total", report.total)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    with open_in(args.report) as fh:
        report = parse_report(fh.read())
    if args.expected is None:
        expected = load_catalog()
    else:
        with open_in(args.expected) as fh:
            expected = parse_report(fh.read())
    result = verify_report(report, expected)
    if result.ok:
        log.info("report matches expected listing")
        return 0
    print(result.describe())
    return 1


def _read_graphs(text: str) -> tuple[str, list]:
    if "{" in text and "graph" in text:
        return "dot", parse_dot(text)
    return "graph6", list(iter_g6(text.splitlines()))


def cmd_convert(args: argparse.Namespace) -> int:
    with open_in(args.input) as fh:
        kind, graphs = _read_graphs(fh.read())
    target = args.to or ("graph6" if kind == "dot" else "dot")
    with open_out(args.output) as out:
        for g in graphs:
            out.write(to_dot(g) if target == "dot" else encode_graph6(g) + "\n")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    try:
        print(count_graphs_burnside(args.n))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeapex",
        description="Cographs, edge-apex classes and their minimal forbidden induced subgraphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug diagnostics")
    parser.add_argument("-q", "--quiet", action="store_true", help="only warnings and errors")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None,
                        help=f"worker processes, 0 = all CPUs (default ${WORKERS_ENV} or 1)")
    common.add_argument("--cache", default=os.environ.get(CACHE_ENV),
                        help=f"level cache directory (default ${CACHE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="all graphs of one order as graph6")
    p.add_argument("-n", type=positive_order, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["graph6", "dot"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="edge-apex membership of one graph")
    p.add_argument("graph6", help="graph6 string, or - to read a line from stdin")
    p.add_argument("--class", dest="cls", default="cograph",
                   help="'cograph' or a graph6 file of forbidden induced subgraphs")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find-obstructions", parents=[common],
                       help="minimal obstructions of an edge-apex class")
    p.add_argument("--class", dest="cls", default="cograph",
                   help="'cograph' or a graph6 file of forbidden induced subgraphs")
    p.add_argument("--orders", type=parse_orders, required=True, help="a..b inclusive, or n")
    p.add_argument("--format", choices=["report", "json", "dot", "graph6", "summary"],
                   default="report")
    p.add_argument("-o", "--output")
    p.add_argument("--force", action="store_true", help=f"allow orders above {SOFT_MAX_ORDER}")
    p.set_defaults(func=cmd_find_obstructions)

    p = sub.add_parser("verify", help="compare a report with an expected listing")
    p.add_argument("report", help="report file, or - for stdin")
    p.add_argument("expected", nargs="?", help="expected report file (default: built-in catalog)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="translate between graph6 and DOT")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-o", "--output")
    p.add_argument("--to", choices=["graph6", "dot"])
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("count", help="number of graphs of an order (Burnside)")
    p.add_argument("n", type=positive_order)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr, force=True)
    try:
        return args.func(args)
    except (CliError, Graph6Error, DotFormatError, ReportFormatError, EnumerationError,
            GraphError, ForbiddenSetError) as exc:
        print(f"edgeapex: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"edgeapex: I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
