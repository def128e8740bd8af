"""Command-line frontend.

Exit codes: 0 success (or realizable for ``check``), 2 valid but not
realizable, 1 user error, 3 internal error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import settings
from .errors import GaussLintError
from .pipelines import check_size, enumerate_diagrams, find_discrepancies, run_table, to_tsv
from .schemas import DedupMode, FilterSpec
from .schemas.requests import parse_criterion
from .tools import (
    canonical_lintel,
    format_gauss_word,
    format_lintel,
    full_report,
    parse_diagram,
    persist,
    render_dot,
    render_svg,
    to_gauss_word,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_NOT_REALIZABLE = 2
EXIT_INTERNAL_ERROR = 3


class UsageError(Exception):
    """Bad command-line usage."""


class ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so usage errors share exit code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _sizes(value: str) -> list[int]:
    """``7``, ``3-8`` or ``3,5,7``."""
    sizes = []
    try:
        for part in value.split(","):
            if "-" in part:
                lo, hi = part.split("-", 1)
                sizes.extend(range(int(lo), int(hi) + 1))
            elif part:
                sizes.append(int(part))
    except ValueError:
        raise UsageError(f"bad --sizes value {value!r}; expected 7, 3-8 or 3,5,7")
    if not sizes:
        raise UsageError(f"--sizes {value!r} names no sizes")
    return sizes


def _read_diagram(args: argparse.Namespace) -> str:
    if getattr(args, "stdin", False) or args.diagram in (None, "-"):
        for line in sys.stdin:
            if line.strip() and not line.lstrip().startswith("#"):
                return line
        raise UsageError("no diagram on standard input")
    return args.diagram


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise type(e)(e.errno, f"cannot write output: {e.strerror}", path) from e


# =============================================================================
# Commands
# =============================================================================

def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = FilterSpec.parse(args.filter)
    check_size(args.size)
    report, lintels = enumerate_diagrams(args.size, spec, workers=args.workers, dedup=args.dedup)
    if args.out:
        persist(report, lintels, args.out, include_elapsed=not args.no_elapsed)
    print(report.summary_line())
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    lintel = parse_diagram(_read_diagram(args))
    report = full_report(lintel)
    print(report.model_dump_json() if args.json else report.summary_line())
    return EXIT_OK if report.realizable else EXIT_NOT_REALIZABLE


def cmd_canon(args: argparse.Namespace) -> int:
    print(format_lintel(canonical_lintel(parse_diagram(_read_diagram(args)))))
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    """Word to lintel, or lintel to word."""
    text = _read_diagram(args)
    lintel = parse_diagram(text)
    if text.strip().startswith("["):
        print(format_gauss_word(to_gauss_word(lintel)))
    else:
        print(format_lintel(lintel))
    return EXIT_OK


def cmd_discrepancies(args: argparse.Namespace) -> int:
    a, b = parse_criterion(args.a), parse_criterion(args.b)
    check_size(args.size)
    records = find_discrepancies(args.size, a, b, workers=args.workers)
    if args.out:
        lines = [f"# gauss-lintel v1 size={args.size} discrepancies a={a.value} b={b.value}"]
        lines.extend(record.report.summary_line() for record in records)
        lines.append(f"# count={len(records)}")
        _write(args.out, "\n".join(lines) + "\n")
    print(f"size={args.size} a={a.value} b={b.value} count={len(records)}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    lintel = parse_diagram(_read_diagram(args))
    if args.format == "dot":
        text = render_dot(lintel)
    else:
        text = render_svg(lintel, radius=args.radius, font_size=args.font_size, stroke_width=args.stroke_width)
    _write(args.out, text)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    specs = [FilterSpec.parse(f) for f in (args.filter or ["prime,ca", "prime,stz", "prime,b", "prime,gl"])]
    sizes = _sizes(args.sizes)
    for n in sizes:
        check_size(n)
    rows = run_table(sizes, specs, workers=args.workers, dedup=args.dedup)
    _write(args.out, to_tsv(rows))
    return EXIT_OK if all(row.match is not False for row in rows) else EXIT_USER_ERROR


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run(
        "gausslint.main:app",
        host=args.host or settings.HOST,
        port=args.port or settings.PORT,
        reload=settings.is_development,
    )
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="gausslint", description="Gauss diagram enumeration and realizability checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("diagram", nargs="?", help="Lintel like [[0,3],[1,4],[2,5]] or Gauss word; '-' reads stdin")
        p.add_argument("--stdin", action="store_true", help="Read the diagram from standard input")

    def sweep_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--workers", type=_positive, default=None, help="Worker processes")
        p.add_argument("--dedup", choices=[m.value for m in DedupMode], default=None, help="Class counting")

    p = sub.add_parser("enumerate", help="Count canonical diagrams passing a filter")
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--filter", default="prime", help="Comma-separated: prime,c2,b3,b,gl,stz,r,ca")
    p.add_argument("--out", help="Results file")
    p.add_argument("--no-elapsed", action="store_true", help="Omit wall time from the results footer")
    sweep_args(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("check", help="Evaluate every criterion on one diagram")
    diagram_arg(p)
    p.add_argument("--json", action="store_true", help="Print the full report as JSON")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("canon", help="Print the canonical lintel")
    diagram_arg(p)
    p.set_defaults(handler=cmd_canon)

    p = sub.add_parser("convert", help="Convert between Gauss word and lintel")
    diagram_arg(p)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("discrepancies", help="List prime diagrams where two criteria disagree")
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--a", default="b", help="First criterion")
    p.add_argument("--b", default="ca", help="Second criterion")
    p.add_argument("--out", help="Records file")
    p.add_argument("--workers", type=_positive, default=None, help="Worker processes")
    p.set_defaults(handler=cmd_discrepancies)

    p = sub.add_parser("render", help="Draw a chord diagram (SVG) or its interlacement graph (DOT)")
    diagram_arg(p)
    p.add_argument("--format", choices=["svg", "dot"], default="svg")
    p.add_argument("--out", help="Output file (default stdout)")
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--font-size", type=float, default=None)
    p.add_argument("--stroke-width", type=float, default=None)
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("table", help="Counts across sizes as TSV, checked against known values")
    p.add_argument("--sizes", default="3-8", help="e.g. 3-8 or 5,7,9")
    p.add_argument("--filter", action="append", help="Repeatable filter; default CA, STZ, B, GL (all prime)")
    p.add_argument("--out", help="TSV file (default stdout)")
    sweep_args(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("serve", help="Run the HTTP service")
    p.add_argument("--host", default=None)
    p.add_argument("--port", type=int, default=None)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except (UsageError, GaussLintError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USER_ERROR
    except Exception as e:
        logger.error(f"Command failed: {e}", exc_info=True)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
