"""Subcommand handlers and the exit-code contract."""

from __future__ import annotations

import argparse
import sys
import traceback
from collections.abc import Callable
from typing import Any

import structlog

from weaving.bracket import ParityError, StateBudgetError, state_sum
from weaving.braid import BraidError, BraidWord, format_braid, parse_braid, weaving_word
from weaving.config import settings
from weaving.cyclotomic import (
    AT_MINUS_ONE,
    AT_OMEGA,
    CycloInt,
    CyclotomicError,
    abs_if_real_integerlike,
    eval_at,
)
from weaving.laurent import LaurentPoly, PolynomialParseError
from weaving.models import (
    CyclotomicPayload,
    InvariantReport,
    OutputFormat,
    OutputRecord,
    PolynomialPayload,
)
from weaving.recurrences import (
    DomainError,
    det_w3n,
    det_wp2,
    eval_w3n_at_w,
    eval_wp2_at_w,
    jones_w3n,
    jones_wp2,
)
from weaving.report import KNOT_NAMES, family_label, invariant_report
from weaving.tables import TABLE_SELECTORS, render_table
from weaving.verify import VerificationHarness, format_summary

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3

Source = tuple[int, int] | BraidWord


class CommandRunner:
    """Dispatches parsed arguments to a handler and maps errors to exit codes."""

    def __init__(self) -> None:
        self._handlers: dict[str, Callable[[argparse.Namespace], int]] = {
            "jones": self.cmd_jones,
            "bracket": self.cmd_bracket,
            "det": self.cmd_det,
            "eval": self.cmd_eval,
            "invariants": self.cmd_invariants,
            "table": self.cmd_table,
            "verify": self.cmd_verify,
        }

    def run(self, args: argparse.Namespace) -> int:
        """
        Execute one subcommand.

        Args:
            args: Parsed command line

        Returns:
            0 on success, 1 on failed verification or internal invariant
            breaks, 2 on domain or parse errors, 3 when the state budget
            is exceeded
        """
        handler = self._handlers[args.command]
        try:
            return handler(args)

        except (BraidError, DomainError, PolynomialParseError) as e:
            self._report_error(e.code, e.message)
            return EXIT_USAGE

        except StateBudgetError as e:
            self._report_error(e.code, e.message)
            return EXIT_TOO_LARGE

        except (ParityError, CyclotomicError) as e:
            # Internal invariant broken; show everything
            self._report_error(e.code, e.message)
            print(traceback.format_exc(), file=sys.stderr)
            return EXIT_FAILED

    def _report_error(self, code: str, message: str) -> None:
        logger.error("Command failed", error_code=code, error_message=message)
        print(f"error [{code}]: {message}", file=sys.stderr)

    # ------------------------------------------------------------------
    # Input resolution
    # ------------------------------------------------------------------

    def _source(self, args: argparse.Namespace) -> Source:
        """Resolve exactly one of --braid or --family into a source."""
        braid = getattr(args, "braid", None)
        family = getattr(args, "family", None)
        if (braid is None) == (family is None):
            raise DomainError(
                code="DOMAIN_ERROR", message="give exactly one of --braid or --family"
            )
        if braid is not None:
            return parse_braid(braid)
        if family == "w3n":
            if args.n is None:
                raise DomainError(code="DOMAIN_ERROR", message="--family w3n needs --n")
            return (3, args.n)
        if family == "wp2":
            if args.p is None:
                raise DomainError(code="DOMAIN_ERROR", message="--family wp2 needs --p")
            return (args.p, 2)
        if args.p is None or args.n is None:
            raise DomainError(code="DOMAIN_ERROR", message="--family w needs --p and --n")
        return (args.p, args.n)

    def _word(self, source: Source, mirror: bool) -> BraidWord:
        word = source if isinstance(source, BraidWord) else weaving_word(*source)
        return word.mirror() if mirror else word

    def _label(self, source: Source) -> str:
        if isinstance(source, BraidWord):
            return format_braid(source)
        label = family_label(*source)
        name = KNOT_NAMES.get(source)
        return f"{label} = {name}" if name else label

    def _jones(self, source: Source, args: argparse.Namespace) -> LaurentPoly:
        if not isinstance(source, BraidWord):
            p, n = source
            if p == 3:
                jones = jones_w3n(n)
                return jones.mirror() if args.mirror else jones
            if n == 2:
                jones = jones_wp2(p)
                return jones.mirror() if args.mirror else jones
        word = self._word(source, args.mirror)
        return state_sum(word, budget=args.budget, threads=args.threads).jones

    def _emit(self, args: argparse.Namespace, label: str, text: str, quantities: dict[str, Any]) -> None:
        if OutputFormat(args.format) == OutputFormat.JSON:
            record = OutputRecord(label=label, quantities=quantities)
            print(record.model_dump_json(indent=settings.json_indent or None))
        else:
            print(text)

    # ------------------------------------------------------------------
    # Handlers
    # ------------------------------------------------------------------

    def cmd_jones(self, args: argparse.Namespace) -> int:
        source = self._source(args)
        jones = self._jones(source, args)
        payload = PolynomialPayload.from_poly(jones).model_dump()
        self._emit(args, self._label(source), jones.to_text(), {"jones": payload})
        return EXIT_OK

    def cmd_bracket(self, args: argparse.Namespace) -> int:
        source = self._source(args)
        word = self._word(source, args.mirror)
        result = state_sum(word, budget=args.budget, threads=args.threads)
        text = "\n".join(
            [
                f"bracket: {result.bracket.to_text(variable='A', denominator=1)}",
                f"writhe: {result.writhe}",
                f"jones: {result.jones.to_text()}",
            ]
        )
        quantities = {
            "bracket": [[e, str(c)] for e, c in result.bracket.terms],
            "writhe": result.writhe,
            "jones": PolynomialPayload.from_poly(result.jones).model_dump(),
        }
        self._emit(args, self._label(source), text, quantities)
        return EXIT_OK

    def cmd_det(self, args: argparse.Namespace) -> int:
        source = self._source(args)
        if isinstance(source, tuple) and source[0] == 3:
            determinant = det_w3n(source[1])
        elif isinstance(source, tuple) and source[1] == 2:
            determinant = det_wp2(source[0])
        else:
            determinant = abs_if_real_integerlike(eval_at(self._jones(source, args), AT_MINUS_ONE))
        self._emit(args, self._label(source), str(determinant), {"determinant": determinant})
        return EXIT_OK

    def cmd_eval(self, args: argparse.Namespace) -> int:
        source = self._source(args)
        value: CycloInt
        if args.at == "minus-one":
            value = eval_at(self._jones(source, args), AT_MINUS_ONE)
        elif isinstance(source, tuple) and (source[0] == 3 or source[1] == 2):
            p, n = source
            value = eval_w3n_at_w(n) if p == 3 else eval_wp2_at_w(p)
            if args.mirror:
                value = value.conj()
        else:
            value = eval_at(self._jones(source, args), AT_OMEGA)
        payload = CyclotomicPayload.from_value(value).model_dump()
        self._emit(args, self._label(source), str(value), {"value": payload, "at": args.at})
        return EXIT_OK

    def cmd_invariants(self, args: argparse.Namespace) -> int:
        source = self._source(args)
        report = invariant_report(
            source, budget=args.budget, threads=args.threads, mirror=args.mirror
        )
        if OutputFormat(args.format) == OutputFormat.JSON:
            print(report.model_dump_json(indent=settings.json_indent or None))
        else:
            print(format_report(report))
        return EXIT_OK

    def cmd_table(self, args: argparse.Namespace) -> int:
        print(render_table(TABLE_SELECTORS[args.which], OutputFormat(args.format)))
        return EXIT_OK

    def cmd_verify(self, args: argparse.Namespace) -> int:
        harness = VerificationHarness(
            max_n=args.max_n, max_p=args.max_p, budget=args.budget, threads=args.threads
        )
        summary = harness.run()
        if OutputFormat(args.format) == OutputFormat.JSON:
            print(summary.model_dump_json(indent=settings.json_indent or None))
        else:
            print(format_summary(summary))
        return EXIT_OK if summary.passed else EXIT_FAILED


def _bounds(report: InvariantReport) -> str:
    lower, upper = report.unknotting_lower, report.unknotting_upper
    if lower is not None and upper is not None:
        return f"{lower} <= u <= {upper}"
    if lower is not None:
        return f"u >= {lower}"
    if upper is not None:
        return f"u <= {upper}"
    return "unknown"


def format_report(report: InvariantReport) -> str:
    """Plain-text rendering of an InvariantReport."""
    title = f"{report.label} = {report.knot_name}" if report.knot_name else report.label
    sign = "+" if report.lm_sign > 0 else "-"
    lines = [
        title,
        f"  braid: {report.braid}",
        f"  jones: {report.jones.to_text() if report.jones is not None else 'n/a'}",
        f"  det: {report.determinant}",
        f"  V(w): {report.v_at_w}",
        f"  mu: {report.mu}",
        f"  n_L: {report.n_L} (sign {sign})",
        f"  unknotting: {_bounds(report)}",
    ]
    return "\n".join(lines)


# Global runner instance
runner = CommandRunner()
