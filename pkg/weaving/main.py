"""Command-line entry point."""

import argparse
import logging
import sys

import structlog

from weaving.commands import runner
from weaving.config import settings
from weaving.models import OutputFormat
from weaving.tables import TABLE_SELECTORS


def configure_logging() -> None:
    """Configure structured logging with structlog; log lines go to stderr."""
    level = getattr(logging, settings.log_level.upper())
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer()
            if settings.log_level.upper() == "DEBUG"
            else structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def _source_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--family",
        choices=["w3n", "wp2", "w"],
        help="w3n: W(3,n); wp2: W(p,2); w: any W(p,n) through the state sum",
    )
    parent.add_argument("--p", type=int, help="strand count of W(p,n)")
    parent.add_argument("--n", type=int, help="period count of W(p,n)")
    parent.add_argument("--braid", help='braid word "k; j1 j2 ...", e.g. "3; 1 -2 1 -2"')
    parent.add_argument(
        "--mirror", action="store_true", help="use the mirror convention (sigma_1 negative)"
    )
    return parent


def _oracle_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--threads", type=int, default=None, help="state-sum worker count")
    parent.add_argument("--budget", type=int, default=None, help="maximum states to enumerate")
    return parent


def _format_option(default: str, choices: list[str]) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=choices, default=default)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weaving-knots",
        description="Jones polynomials and related invariants of weaving knots",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    source = _source_options()
    oracle = _oracle_options()
    text_or_json = _format_option(OutputFormat.TEXT.value, ["text", "json"])
    all_formats = _format_option(OutputFormat.TEXT.value, [f.value for f in OutputFormat])

    subparsers.add_parser(
        "jones", parents=[source, oracle, text_or_json], help="Jones polynomial"
    )
    subparsers.add_parser(
        "bracket", parents=[source, oracle, text_or_json], help="Kauffman bracket state sum"
    )
    subparsers.add_parser("det", parents=[source, oracle, text_or_json], help="determinant")
    evaluate = subparsers.add_parser(
        "eval", parents=[source, oracle, text_or_json], help="exact value of the Jones polynomial"
    )
    evaluate.add_argument("--at", choices=["omega", "minus-one"], default="omega")
    subparsers.add_parser(
        "invariants", parents=[source, oracle, text_or_json], help="full invariant report"
    )
    table = subparsers.add_parser("table", parents=[all_formats], help="value or Jones table")
    table.add_argument("--which", choices=list(TABLE_SELECTORS), default="1")
    verify = subparsers.add_parser(
        "verify", parents=[oracle, text_or_json], help="run every cross-check"
    )
    verify.add_argument("--max-n", type=int, default=8)
    verify.add_argument("--max-p", type=int, default=10)
    return parser


def main(argv: list[str] | None = None) -> int:
    configure_logging()
    args = build_parser().parse_args(argv)
    return runner.run(args)


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
