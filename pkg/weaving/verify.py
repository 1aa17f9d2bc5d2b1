"""Cross-checks between the recurrences, the closed forms and the state-sum oracle."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable

import structlog

from weaving.bracket import jones_via_bracket
from weaving.braid import weaving_word
from weaving.cyclotomic import (
    AT_MINUS_ONE,
    AT_OMEGA,
    CycloInt,
    CyclotomicError,
    abs_if_real_integerlike,
    eval_at,
    lm_decompose,
)
from weaving.laurent import ONE as POLY_ONE
from weaving.laurent import LaurentPoly
from weaving.models import VerificationCheck, VerificationSummary
from weaving.recurrences import (
    DomainError,
    a_matrix,
    det_w3n,
    det_w3n_reduced,
    det_wp2,
    eval_w3n_at_w,
    eval_wp2_at_w,
    jones_w3n,
    jones_w3n_scalar_recursion,
    jones_wp2,
    minimal_polynomial_residual,
    reconcile_mirror,
    unknotting_sequence_w34,
    unknotting_sequence_wp2,
    wp2_values_at_minus_one,
)
from weaving.reference import W32_JONES, W3N_VALUES, WP2_JONES, WP2_VALUES

logger = structlog.get_logger()

# A check body returns None on success or a counterexample description
CheckBody = Callable[[], str | None]

# Moved words gain up to two crossings
_MARKOV_MAX_CROSSINGS = 12


def _first_failure(cases: Iterable[str | None]) -> str | None:
    return next((case for case in cases if case is not None), None)


class VerificationHarness:
    """
    Runs every identity for W(3,n), n <= max_n, and W(p,2), p <= max_p.

    Oracle results are cached per word so each diagram is enumerated once.
    """

    def __init__(
        self, max_n: int, max_p: int, budget: int | None = None, threads: int | None = None
    ) -> None:
        if max_n < 1:
            raise DomainError(code="DOMAIN_ERROR", message=f"--max-n must be >= 1, got {max_n}")
        if max_p < 2:
            raise DomainError(code="DOMAIN_ERROR", message=f"--max-p must be >= 2, got {max_p}")
        self._max_n = max_n
        self._max_p = max_p
        self._budget = budget
        self._threads = threads
        self._oracle_cache: dict[tuple[int, int], LaurentPoly] = {}

    def _oracle(self, p: int, n: int) -> LaurentPoly:
        key = (p, n)
        if key not in self._oracle_cache:
            self._oracle_cache[key] = jones_via_bracket(
                weaving_word(p, n), budget=self._budget, threads=self._threads
            )
        return self._oracle_cache[key]

    # ------------------------------------------------------------------
    # Individual checks
    # ------------------------------------------------------------------

    def _w3n_cross_implementation(self) -> str | None:
        def case(n: int) -> str | None:
            matrix_form = jones_w3n(n)
            scalar_form = jones_w3n_scalar_recursion(n)
            if matrix_form != scalar_form:
                return f"n={n}: matrix {matrix_form} != scalar {scalar_form}"
            oracle = self._oracle(3, n)
            if reconcile_mirror(f"W(3,{n})", matrix_form, oracle) != "match":
                return f"n={n}: recurrence {matrix_form} != state sum {oracle}"
            return None

        return _first_failure(case(n) for n in range(1, self._max_n + 1))

    def _wp2_against_oracle(self) -> str | None:
        def case(p: int) -> str | None:
            formula = jones_wp2(p)
            oracle = self._oracle(p, 2)
            if reconcile_mirror(f"W({p},2)", formula, oracle) != "match":
                return f"p={p}: recursion {formula} != state sum {oracle}"
            return None

        return _first_failure(case(p) for p in range(2, self._max_p + 1))

    def _values_at_w(self) -> str | None:
        def w3n(n: int) -> str | None:
            got = eval_at(jones_w3n(n), AT_OMEGA)
            want = eval_w3n_at_w(n)
            return None if got == want else f"W(3,{n}): V(w) = {got}, closed form {want}"

        def wp2(p: int) -> str | None:
            got = eval_at(jones_wp2(p), AT_OMEGA)
            want = eval_wp2_at_w(p)
            return None if got == want else f"W({p},2): V(w) = {got}, closed form {want}"

        return _first_failure(
            [*(w3n(n) for n in range(1, self._max_n + 1)), *(wp2(p) for p in range(2, self._max_p + 1))]
        )

    def _determinants(self) -> str | None:
        def w3n(n: int) -> str | None:
            from_poly = abs_if_real_integerlike(eval_at(jones_w3n(n), AT_MINUS_ONE))
            if not from_poly == det_w3n(n) == det_w3n_reduced(n):
                return (
                    f"W(3,{n}): |V(-1)| = {from_poly}, recurrence {det_w3n(n)}, "
                    f"reduced system {det_w3n_reduced(n)}"
                )
            return None

        def wp2(p: int) -> str | None:
            from_poly = abs_if_real_integerlike(eval_at(jones_wp2(p), AT_MINUS_ONE))
            if from_poly != det_wp2(p):
                return f"W({p},2): |V(-1)| = {from_poly}, recurrence {det_wp2(p)}"
            return None

        return _first_failure(
            [*(w3n(n) for n in range(1, self._max_n + 1)), *(wp2(p) for p in range(2, self._max_p + 1))]
        )

    def _values_at_minus_one(self) -> str | None:
        count = max(1, (self._max_p - 1) // 2)
        for index, (even, odd) in enumerate(wp2_values_at_minus_one(count), start=1):
            for p, value in ((2 * index, even), (2 * index + 1, odd)):
                exact = eval_at(jones_wp2(p), AT_MINUS_ONE)
                if value != exact:
                    return f"W({p},2): coupled recurrence {value} != V(-1) = {exact}"
        return None

    def _lm_form(self) -> str | None:
        def case(label: str, jones: LaurentPoly, mu: int, expected: int) -> str | None:
            try:
                n_l = lm_decompose(eval_at(jones, AT_OMEGA), mu).n_L
            except CyclotomicError as exc:
                return f"{label}: {exc.message}"
            return None if n_l == expected else f"{label}: n_L = {n_l}, expected {expected}"

        cases = [
            case(f"W(3,{n})", jones_w3n(n), math.gcd(3, n), 2 if n % 4 == 0 else 0)
            for n in range(1, self._max_n + 1)
        ]
        cases.extend(
            case(f"W({p},2)", jones_wp2(p), math.gcd(p, 2), 1 if p % 4 == 0 else 0)
            for p in range(2, self._max_p + 1)
        )
        return _first_failure(cases)

    def _minimal_polynomial(self) -> str | None:
        residual = minimal_polynomial_residual()
        if residual.is_zero():
            return None
        return f"residual {[[str(x) for x in row] for row in residual.rows]}"

    def _periodicity(self) -> str | None:
        for i in range(3, 17):
            if a_matrix(i + 4) != a_matrix(i):
                return f"A_{i + 4} != A_{i}"
        return None

    def _component_counts(self) -> str | None:
        for p in range(2, self._max_p + 1):
            for n in range(1, self._max_n + 1):
                mu = weaving_word(p, n).component_count()
                if mu != math.gcd(p, n):
                    return f"W({p},{n}): {mu} components, gcd {math.gcd(p, n)}"
        return None

    def _family_words(self) -> list[tuple[int, int]]:
        words = [(3, n) for n in range(1, self._max_n + 1)]
        words.extend((p, 2) for p in range(2, self._max_p + 1) if p != 3)
        return words

    def _markov_invariance(self) -> str | None:
        def case(p: int, n: int) -> str | None:
            word = weaving_word(p, n)
            jones = self._oracle(p, n)
            moved = [
                word.conjugate(1),
                word.conjugate(-(word.strands - 1)),
                word.stabilize(1),
                word.stabilize(-1),
            ]
            for other in moved:
                other_jones = jones_via_bracket(other, budget=self._budget, threads=self._threads)
                if other_jones != jones:
                    return f"W({p},{n}) -> {other}: V = {other_jones}, expected {jones}"
            return None

        return _first_failure(
            case(p, n)
            for p, n in self._family_words()
            if (p - 1) * n <= _MARKOV_MAX_CROSSINGS
        )

    def _value_at_one(self) -> str | None:
        def case(p: int, n: int) -> str | None:
            jones = self._oracle(p, n)
            mu = weaving_word(p, n).component_count()
            if jones.coefficient_sum() != (-2) ** (mu - 1):
                return f"W({p},{n}): V(1) = {jones.coefficient_sum()}, mu = {mu}"
            integral = all(e % 2 == 0 for e in jones.exponents())
            if integral != (mu % 2 == 1):
                return f"W({p},{n}): exponents of {jones} do not fit mu = {mu}"
            return None

        return _first_failure(case(p, n) for p, n in self._family_words())

    def _reference_values(self) -> str | None:
        def case(label: str, got: tuple[int, CycloInt], want: tuple[int, CycloInt]) -> str | None:
            if got == want:
                return None
            return f"{label}: (det, V(w)) = ({got[0]}, {got[1]}), reference ({want[0]}, {want[1]})"

        cases = [
            case(f"W({p},2)", (det_wp2(p), eval_wp2_at_w(p)), want)
            for p, want in WP2_VALUES.items()
        ]
        cases.extend(
            case(f"W(3,{n})", (det_w3n(n), eval_w3n_at_w(n)), want)
            for n, want in W3N_VALUES.items()
        )
        return _first_failure(cases)

    def _reference_polynomials(self) -> str | None:
        expected = {f"W({p},2)": (jones_wp2(p), text) for p, text in WP2_JONES.items()}
        expected["W(3,2)"] = (jones_w3n(2), W32_JONES)
        for label, (jones, text) in expected.items():
            if jones != LaurentPoly.parse(text):
                return f"{label}: V = {jones}, reference {text}"
        return None

    def _unknotting_witnesses(self) -> str | None:
        if self._max_n >= 4:
            final = unknotting_sequence_w34().words[-1]
            jones = jones_via_bracket(final, budget=self._budget, threads=self._threads)
            if jones != POLY_ONE:
                return f"W(3,4) after two changes: V = {jones}, expected 1"
        for m in range(1, (self._max_p - 1) // 2 + 1):
            sequence = unknotting_sequence_wp2(m)
            for k, word in enumerate(sequence.words[1:], start=1):
                jones = jones_via_bracket(word, budget=self._budget, threads=self._threads)
                p = 2 * (m - k) + 1
                expected = POLY_ONE if p == 1 else jones_wp2(p)
                if jones != expected:
                    return f"W({2 * m + 1},2) after {k} changes: V = {jones}, expected {expected}"
        return None

    # ------------------------------------------------------------------
    # Driver
    # ------------------------------------------------------------------

    def checks(self) -> list[tuple[str, CheckBody]]:
        return [
            ("reference values: det and V(w) of both families", self._reference_values),
            ("reference polynomials: Jones polynomials of W(p,2) and W(3,2)", self._reference_polynomials),
            ("W(3,n) transfer matrix: matrix = scalar recursion = state sum", self._w3n_cross_implementation),
            ("W(p,2) skein recursion: recursion = state sum", self._wp2_against_oracle),
            ("Markov invariance: conjugation and stabilization keep V", self._markov_invariance),
            ("value at one: V(1) = (-2)^(mu-1), integer exponents iff mu odd", self._value_at_one),
            ("values at w: closed forms match the polynomials", self._values_at_w),
            ("determinant formulas: |V(-1)| = integer recurrences = reduced system", self._determinants),
            ("W(p,2) at t = -1: coupled recurrence", self._values_at_minus_one),
            ("Z3-rank relation: V(w) = ±i^(mu-1)(i√3)^n_L with the expected n_L", self._lm_form),
            ("minimal polynomial of M(w): M(w)^6 + w M(w)^2 = 0", self._minimal_polynomial),
            ("periodicity: A_(i+4) = A_i for 3 <= i <= 16", self._periodicity),
            ("component count: mu = gcd(p, n)", self._component_counts),
            ("unknotting witnesses: crossing changes end at the unknot", self._unknotting_witnesses),
        ]

    def run(self) -> VerificationSummary:
        summary = VerificationSummary()
        for name, body in self.checks():
            detail = body()
            check = VerificationCheck(name=name, passed=detail is None, detail=detail or "")
            summary.checks.append(check)
            if check.passed:
                logger.info("Check passed", check=name)
            else:
                logger.error("Check failed", check=name, detail=detail)
        return summary


def format_summary(summary: VerificationSummary) -> str:
    lines = []
    for check in summary.checks:
        lines.append(f"{check.name}: {'OK' if check.passed else 'FAILED'}")
        if not check.passed:
            lines.append(f"  counterexample: {check.detail}")
    return "\n".join(lines)
