"""Exact arithmetic in Z[zeta] with zeta^4 = zeta^2 - 1 (zeta = e^(i*pi/6)).

One ring holds every evaluation the toolkit needs: t^(1/2) = zeta gives
t = zeta^2 = e^(i*pi/3), and t^(1/2) = zeta^3 = i gives t = -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from weaving.laurent import LaurentPoly

# Substitutions for t^(1/2) used by eval_at
AT_OMEGA = 1
AT_MINUS_ONE = 3


class CyclotomicError(Exception):
    """Exception raised when a value is not of the shape an operation requires."""

    def __init__(self, code: str, message: str) -> None:
        self.code = code
        self.message = message
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class CycloInt:
    """The element c0 + c1*zeta + c2*zeta^2 + c3*zeta^3; the basis representation is unique."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @classmethod
    def from_int(cls, value: int) -> CycloInt:
        return cls(value, 0, 0, 0)

    @classmethod
    def zeta_power(cls, k: int) -> CycloInt:
        """Canonical image of zeta^k for any integer k (period 12)."""
        return _ZETA_POWERS[k % 12]

    def coefficients(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other: CycloInt | int) -> CycloInt:
        other = _coerce(other)
        return CycloInt(
            self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3
        )

    __radd__ = __add__

    def __neg__(self) -> CycloInt:
        return CycloInt(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other: CycloInt | int) -> CycloInt:
        return self + (-_coerce(other))

    def __rsub__(self, other: CycloInt | int) -> CycloInt:
        return _coerce(other) + (-self)

    def __mul__(self, other: CycloInt | int) -> CycloInt:
        if isinstance(other, int):
            return CycloInt(self.c0 * other, self.c1 * other, self.c2 * other, self.c3 * other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        a = self.coefficients()
        b = other.coefficients()
        r = [0] * 7
        for i in range(4):
            if a[i]:
                for j in range(4):
                    r[i + j] += a[i] * b[j]
        # zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1
        r[0] -= r[6]
        r[3] += r[5]
        r[1] -= r[5]
        r[2] += r[4]
        r[0] -= r[4]
        return CycloInt(r[0], r[1], r[2], r[3])

    __rmul__ = __mul__

    def __pow__(self, power: int) -> CycloInt:
        if power < 0:
            raise ValueError("negative powers are only defined for zeta_power")
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def times_zeta(self) -> CycloInt:
        return CycloInt(-self.c3, self.c0, self.c1 + self.c3, self.c2)

    def conj(self) -> CycloInt:
        """Complex conjugation, the automorphism zeta -> zeta^-1."""
        return CycloInt(self.c0 + self.c2, self.c1, -self.c2, -self.c1 - self.c3)

    def norm(self) -> CycloInt:
        """v * conj(v); always lies in the real subring Z[sqrt3]."""
        return self * self.conj()

    def is_rational_integer(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and self.c3 == 0

    def is_zero(self) -> bool:
        return self.coefficients() == (0, 0, 0, 0)

    def to_text(self) -> str:
        """Rendering in the basis {1, zeta, zeta^2, zeta^3}."""
        parts: list[str] = []
        for power, coeff in enumerate(self.coefficients()):
            if coeff == 0:
                continue
            symbol = ("", "ζ", "ζ^2", "ζ^3")[power]
            magnitude = abs(coeff)
            body = symbol if symbol and magnitude == 1 else f"{magnitude}{symbol}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts) or "0"

    def pretty(self) -> str | None:
        """Symbol from the value alphabet {1, -1, i, -i, √3, -√3, 3}, or None."""
        return _PRETTY.get(self)

    def __str__(self) -> str:
        return self.pretty() or self.to_text()


def _coerce(value: CycloInt | int) -> CycloInt:
    if isinstance(value, CycloInt):
        return value
    if isinstance(value, int):
        return CycloInt.from_int(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to CycloInt")


def _build_zeta_powers() -> tuple[CycloInt, ...]:
    powers = [CycloInt(1, 0, 0, 0)]
    for _ in range(11):
        powers.append(powers[-1].times_zeta())
    return tuple(powers)


_ZETA_POWERS = _build_zeta_powers()

ZERO = CycloInt()
ONE = CycloInt.from_int(1)
MINUS_ONE = CycloInt.from_int(-1)
THREE = CycloInt.from_int(3)
ZETA = CycloInt.zeta_power(1)
# w = e^(i*pi/3)
OMEGA = CycloInt.zeta_power(2)
IMAG = CycloInt.zeta_power(3)
SQRT3 = CycloInt(0, 2, 0, -1)

_PRETTY: dict[CycloInt, str] = {
    ONE: "1",
    MINUS_ONE: "-1",
    IMAG: "i",
    -IMAG: "-i",
    SQRT3: "√3",
    -SQRT3: "-√3",
    THREE: "3",
}


@dataclass(frozen=True, slots=True)
class LMDecomposition:
    """A value written as sign * i^(mu-1) * (i*sqrt3)^n_L."""

    n_L: int
    sign: int


def eval_at(poly: LaurentPoly, half_power_of_zeta: int) -> CycloInt:
    """
    Evaluate a Laurent polynomial under t^(1/2) -> zeta^half_power_of_zeta.

    Args:
        poly: Polynomial in s = t^(1/2)
        half_power_of_zeta: 1 for t = e^(i*pi/3), 3 for t = -1, 0 for t = 1

    Returns:
        The exact image in Z[zeta]
    """
    c = [0, 0, 0, 0]
    for exponent, coeff in poly.terms:
        image = _ZETA_POWERS[(exponent * half_power_of_zeta) % 12]
        c[0] += coeff * image.c0
        c[1] += coeff * image.c1
        c[2] += coeff * image.c2
        c[3] += coeff * image.c3
    return CycloInt(c[0], c[1], c[2], c[3])


def power_of_three(value: int) -> int | None:
    """Exponent k with value == 3^k, or None."""
    if value <= 0:
        return None
    k = 0
    while value % 3 == 0:
        value //= 3
        k += 1
    return k if value == 1 else None


def lm_decompose(value: CycloInt, mu: int) -> LMDecomposition:
    """
    Write a Jones value at e^(i*pi/3) as sign * i^(mu-1) * (i*sqrt3)^n_L.

    Args:
        value: V_L(e^(i*pi/3)) in Z[zeta]
        mu: Number of link components

    Returns:
        The dimension n_L and the sign

    Raises:
        CyclotomicError: NOT_LM_FORM if no such decomposition exists
    """
    if mu < 1:
        raise CyclotomicError(code="DOMAIN_ERROR", message=f"component count must be >= 1, got {mu}")
    norm = value.norm()
    n_l = power_of_three(norm.c0) if norm.is_rational_integer() else None
    if n_l is None:
        raise CyclotomicError(
            code="NOT_LM_FORM",
            message=f"norm of {value.to_text()} is {norm.to_text()}, not a power of 3",
        )
    target = CycloInt.zeta_power(3 * (mu - 1)) * (IMAG * SQRT3) ** n_l
    if value == target:
        return LMDecomposition(n_L=n_l, sign=1)
    if value == -target:
        return LMDecomposition(n_L=n_l, sign=-1)
    raise CyclotomicError(
        code="NOT_LM_FORM",
        message=f"{value.to_text()} is not ±i^{mu - 1}(i√3)^{n_l}",
    )


def abs_if_real_integerlike(value: CycloInt) -> int:
    """
    Return d >= 0 with value * conj(value) = d^2.

    Raises:
        CyclotomicError: NOT_UNIT_TIMES_INTEGER if the norm is not a square in Z
    """
    norm = value.norm()
    if norm.is_rational_integer() and norm.c0 >= 0:
        root = math.isqrt(norm.c0)
        if root * root == norm.c0:
            return root
    raise CyclotomicError(
        code="NOT_UNIT_TIMES_INTEGER",
        message=f"{value.to_text()} is not a unit times a rational integer",
    )
