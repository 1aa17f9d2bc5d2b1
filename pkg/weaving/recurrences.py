"""Jones polynomials, values at e^(i*pi/3) and determinants for W(3,n) and W(p,2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import structlog

from weaving.braid import BraidWord, weaving_word
from weaving.cyclotomic import (
    AT_MINUS_ONE,
    AT_OMEGA,
    IMAG,
    MINUS_ONE,
    ONE,
    SQRT3,
    THREE,
    CycloInt,
)
from weaving.laurent import ONE as POLY_ONE
from weaving.laurent import T, T_INV, Z, LaurentPoly
from weaving.matrix import CycloMatrix, PolyMatrix, evaluate, poly_matrix

logger = structlog.get_logger()


class DomainError(Exception):
    """Exception raised for family parameters outside their domain."""

    def __init__(self, code: str, message: str) -> None:
        self.code = code
        self.message = message
        super().__init__(message)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(code="DOMAIN_ERROR", message=message)


# ======================================================================
# W(3,n): transfer-matrix system
# ======================================================================

_ZERO = LaurentPoly()
_T_MINUS_1 = T - 1
_T2 = T * T
_T4 = _T2 * _T2
_ONE_PLUS_T = T + 1


def matrix_m() -> PolyMatrix:
    """The 5x5 transfer matrix acting on [C0, C1, C2, C12, C21]."""
    return poly_matrix(
        [
            [_ZERO, -(T * _T_MINUS_1), _ZERO, _ZERO, _T2],
            [-_T_MINUS_1, -(_T_MINUS_1 * _T_MINUS_1), _ZERO, _ZERO, _ZERO],
            [_ZERO, T, _ZERO, _ZERO, _ZERO],
            [POLY_ONE, _T_MINUS_1, _ZERO, _ZERO, _ZERO],
            [_ZERO, _ZERO, _ZERO, T, _ZERO],
        ]
    )


def c1_vector() -> PolyMatrix:
    return poly_matrix([[_ZERO], [-_T_MINUS_1], [_ZERO], [POLY_ONE], [_ZERO]])


def z_row() -> PolyMatrix:
    return poly_matrix(
        [
            [
                _ONE_PLUS_T * _ONE_PLUS_T,
                _ONE_PLUS_T * _T2,
                _ONE_PLUS_T * _T2,
                _T4,
                _T4,
            ]
        ]
    )


def jones_w3n(n: int) -> LaurentPoly:
    """
    V_{W(3,n)} = t^(-n-1) * Z * M^(n-1) * C1.

    Raises:
        DomainError: For n < 1
    """
    _require(n >= 1, f"W(3,n) needs n >= 1, got {n}")
    column = c1_vector()
    m = matrix_m()
    for _ in range(n - 1):
        column = m @ column
    return (z_row() @ column).scalar().shift(-2 * (n + 1))


def jones_w3n_scalar_recursion(n: int) -> LaurentPoly:
    """Same value as :func:`jones_w3n`, stepping the five coefficient sequences directly."""
    _require(n >= 1, f"W(3,n) needs n >= 1, got {n}")
    c0, c1, c2, c12, c21 = _ZERO, -_T_MINUS_1, _ZERO, POLY_ONE, _ZERO
    for _ in range(n - 1):
        c0, c1, c2, c12, c21 = (
            -(T * _T_MINUS_1) * c1 + _T2 * c21,
            -_T_MINUS_1 * c0 - _T_MINUS_1 * _T_MINUS_1 * c1,
            T * c1,
            c0 + _T_MINUS_1 * c1,
            T * c12,
        )
    total = (
        _ONE_PLUS_T * _ONE_PLUS_T * c0
        + _ONE_PLUS_T * _T2 * (c1 + c2)
        + _T4 * (c12 + c21)
    )
    return total.shift(-2 * (n + 1))


def eval_w3n_at_w(n: int) -> CycloInt:
    _require(n >= 1, f"W(3,n) needs n >= 1, got {n}")
    if n % 4 == 0:
        return THREE
    if n % 4 == 2:
        return MINUS_ONE
    return ONE


def det_w3n(n: int) -> int:
    """d_n = 3 d_(n-1) - d_(n-2) + 2 with d_1 = 1, d_2 = 5."""
    _require(n >= 1, f"W(3,n) needs n >= 1, got {n}")
    previous, current = 1, 5
    if n == 1:
        return previous
    for _ in range(n - 2):
        previous, current = current, 3 * current - previous + 2
    return current


# C2 has a zero column in M and a zero weight in Z at t = -1
_DROPPED_STATE = 2

IntRows = tuple[tuple[int, ...], ...]


def _integer_rows(matrix: CycloMatrix) -> IntRows:
    rows = []
    for row in matrix.rows:
        for entry in row:
            if not entry.is_rational_integer():
                raise DomainError(
                    code="DOMAIN_ERROR", message=f"{entry.to_text()} is not a rational integer"
                )
        rows.append(tuple(entry.c0 for entry in row))
    return tuple(rows)


def _drop(rows: IntRows, rows_too: bool) -> IntRows:
    kept = [
        tuple(x for j, x in enumerate(row) if j != _DROPPED_STATE)
        for i, row in enumerate(rows)
        if not rows_too or i != _DROPPED_STATE
    ]
    return tuple(kept)


def reduced_system() -> tuple[IntRows, tuple[int, ...], tuple[int, ...]]:
    """
    The 4x4 integer system (M, C1, Z) at t = -1 with the C2 state removed.

    Evaluated from :func:`matrix_m`, :func:`c1_vector` and :func:`z_row`.
    """
    m = _drop(_integer_rows(evaluate(matrix_m(), AT_MINUS_ONE)), rows_too=True)
    c1 = _drop(_integer_rows(evaluate(c1_vector(), AT_MINUS_ONE)), rows_too=True)
    z = _drop(_integer_rows(evaluate(z_row(), AT_MINUS_ONE)), rows_too=False)
    return m, tuple(row[0] for row in c1), z[0]


def det_w3n_reduced(n: int) -> int:
    """Determinant of W(3,n) from the 4x4 integer system |Z M(-1)^(n-1) C1|."""
    _require(n >= 1, f"W(3,n) needs n >= 1, got {n}")
    m, column, z = reduced_system()
    for _ in range(n - 1):
        column = tuple(sum(a * b for a, b in zip(row, column, strict=True)) for row in m)
    return abs(sum(a * b for a, b in zip(z, column, strict=True)))


def a_matrix(i: int) -> CycloMatrix:
    """A_i = w^(-i-1) * M(w)^(i-1) over Z[zeta]."""
    _require(i >= 1, f"A_i needs i >= 1, got {i}")
    m_at_w = evaluate(matrix_m(), AT_OMEGA)
    return m_at_w.power(i - 1, ONE).scale(CycloInt.zeta_power(-2 * (i + 1)))


def minimal_polynomial_residual() -> CycloMatrix:
    """M(w)^6 + w * M(w)^2; the zero matrix when M(w) satisfies x^6 + w x^2."""
    m_at_w = evaluate(matrix_m(), AT_OMEGA)
    squared = m_at_w @ m_at_w
    sixth = squared @ squared @ squared
    return sixth + squared.scale(CycloInt.zeta_power(2))


# ======================================================================
# W(p,2): interleaved even/odd recursion
# ======================================================================

_V2 = -LaurentPoly(((1, 1), (5, 1)))


def jones_wp2(p: int) -> LaurentPoly:
    """
    Jones polynomial of W(p,2).

    V(2n)   = t^2 V(2n-2) + t z V(2n-1)
    V(2n+1) = t^-2 V(2n-1) - t^-1 z V(2n)
    with z = t^(1/2) - t^(-1/2).

    Raises:
        DomainError: For p < 2
    """
    _require(p >= 2, f"W(p,2) needs p >= 2, got {p}")
    values: dict[int, LaurentPoly] = {2: _V2, 3: T_INV * T_INV - T_INV * Z * _V2}
    for q in range(4, p + 1):
        if q % 2 == 0:
            values[q] = _T2 * values[q - 2] + T * Z * values[q - 1]
        else:
            values[q] = T_INV * T_INV * values[q - 2] - T_INV * Z * values[q - 1]
    return values[p]


def eval_wp2_at_w(p: int) -> CycloInt:
    _require(p >= 2, f"W(p,2) needs p >= 2, got {p}")
    m = p // 2
    if p % 2 == 0:
        if m % 2 == 1:
            k = (m + 1) // 2
            return IMAG if k % 2 == 0 else -IMAG
        k = m // 2
        return -SQRT3 if k % 2 == 0 else SQRT3
    return MINUS_ONE if m % 4 in (1, 2) else ONE


def det_wp2(p: int) -> int:
    """x_(n+1) = 6 x_n - x_(n-1); seeds 2, 12 for p = 2n and 5, 29 for p = 2n+1."""
    _require(p >= 2, f"W(p,2) needs p >= 2, got {p}")
    previous, current = (2, 12) if p % 2 == 0 else (5, 29)
    steps = p // 2 - 1
    if steps == 0:
        return previous
    for _ in range(steps - 1):
        previous, current = current, 6 * current - previous
    return current


def wp2_values_at_minus_one(count: int) -> list[tuple[CycloInt, CycloInt]]:
    """
    Exact pairs (V_{W(2n,2)}(-1), V_{W(2n+1,2)}(-1)) for n = 1..count.

    a_n = a_(n-1) - 2i b_(n-1), b_n = b_(n-1) + 2i a_n, from a_1 = -2i, b_1 = 5.
    """
    _require(count >= 1, f"need at least one pair, got {count}")
    two_i = IMAG * 2
    a, b = -two_i, CycloInt.from_int(5)
    pairs = [(a, b)]
    for _ in range(count - 1):
        a = a - two_i * b
        b = b + two_i * a
        pairs.append((a, b))
    return pairs


# ======================================================================
# Unknotting witnesses
# ======================================================================


@dataclass(frozen=True, slots=True)
class UnknottingSequence:
    """Crossing changes (letter indices) and every intermediate word, start included."""

    indices: tuple[int, ...]
    words: tuple[BraidWord, ...]

    @property
    def length(self) -> int:
        return len(self.indices)


def _apply_changes(start: BraidWord, indices: tuple[int, ...]) -> UnknottingSequence:
    words = [start]
    for index in indices:
        words.append(words[-1].crossing_change(index))
    return UnknottingSequence(indices=indices, words=tuple(words))


def unknotting_sequence_w34() -> UnknottingSequence:
    """Two crossing changes taking W(3,4) to a braid whose closure is the unknot."""
    return _apply_changes(weaving_word(3, 4), (1, 4))


def unknotting_sequence_wp2(m: int) -> UnknottingSequence:
    """
    m crossing changes taking W(2m+1,2) to the unknot.

    Each change turns a negative letter sigma_2j^-1 of the second period
    positive, last one first; after k changes the closure is W(2(m-k)+1, 2).
    """
    _require(m >= 1, f"W(2m+1,2) needs m >= 1, got {m}")
    indices = tuple(2 * m + 2 * j - 1 for j in range(m, 0, -1))
    return _apply_changes(weaving_word(2 * m + 1, 2), indices)


# ======================================================================
# Convention reconciliation
# ======================================================================

Reconciliation = Literal["match", "mirror", "mismatch"]

_mirror_reported: set[str] = set()


def reconcile_mirror(label: str, formula: LaurentPoly, oracle: LaurentPoly) -> Reconciliation:
    """Compare a formula polynomial to the oracle; a t <-> t^-1 discrepancy is logged once per label."""
    if formula == oracle:
        return "match"
    if formula.mirror() == oracle:
        if label not in _mirror_reported:
            _mirror_reported.add(label)
            logger.warning(
                "Formula and oracle differ by mirror image",
                label=label,
                formula=formula.to_text(),
                oracle=oracle.to_text(),
            )
        return "mirror"
    return "mismatch"
