"""Exact Laurent polynomials in s = t^(1/2) with arbitrary-precision integer coefficients.

Exponents are stored as integers counting halves of t, so ``(k, c)`` is the
term ``c * t^(k/2)``. Knots (integer powers of t) and two-component links
(half-odd powers) share the one type.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass


class PolynomialParseError(Exception):
    """Exception raised when polynomial text does not follow the grammar."""

    def __init__(self, code: str, message: str, position: int) -> None:
        self.code = code
        self.message = message
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """
    Sparse Laurent polynomial with terms sorted by exponent.

    The term tuple is canonical: exponents strictly increase and no
    coefficient is zero, so equality of polynomials is equality of terms.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        previous: int | None = None
        for exponent, coeff in self.terms:
            if coeff == 0:
                raise ValueError(f"zero coefficient stored at exponent {exponent}")
            if previous is not None and exponent <= previous:
                raise ValueError("terms must be sorted by strictly increasing exponent")
            previous = exponent

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> LaurentPoly:
        """Build a polynomial from an exponent -> coefficient map, dropping zeros."""
        return cls(tuple((e, c) for e, c in sorted(mapping.items()) if c != 0))

    @classmethod
    def monomial(cls, coeff: int, half_exponent: int) -> LaurentPoly:
        """Return ``coeff * s^half_exponent``; a zero coefficient gives the zero polynomial."""
        if coeff == 0:
            return cls()
        return cls(((half_exponent, coeff),))

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls.monomial(value, 0)

    @classmethod
    def from_json(cls, pairs: Iterable[Iterable[int | str]]) -> LaurentPoly:
        """Inverse of :meth:`to_json`; accepts ``[half_exponent, "coefficient"]`` pairs."""
        acc: dict[int, int] = {}
        for pair in pairs:
            exponent, coeff = pair
            acc[int(exponent)] = acc.get(int(exponent), 0) + int(coeff)
        return cls.from_mapping(acc)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the textual grammar, e.g. ``"t^-2 - t^-1 + 1 - t + t^2"``."""
        return _PolynomialParser(text).parse()

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, half_exponent: int) -> int:
        for exponent, coeff in self.terms:
            if exponent == half_exponent:
                return coeff
        return 0

    def degree(self) -> int:
        """Largest exponent in half units. Undefined for zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    def valuation(self) -> int:
        """Smallest exponent in half units. Undefined for zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return self.terms[0][0]

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self.terms)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        acc = dict(self.terms)
        for exponent, coeff in other.terms:
            acc[exponent] = acc.get(exponent, 0) + coeff
        return LaurentPoly.from_mapping(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_mapping(acc)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                exponent, coeff = self.terms[0]
                return LaurentPoly.monomial(coeff ** (-power), exponent * power)
            raise ValueError("only unit monomials have negative powers")
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, half_exponent: int) -> LaurentPoly:
        """Multiply by ``s^half_exponent``."""
        return LaurentPoly(tuple((e + half_exponent, c) for e, c in self.terms))

    def mirror(self) -> LaurentPoly:
        """Substitute t -> t^-1 (the Jones polynomial of the mirror image)."""
        return LaurentPoly(tuple((-e, c) for e, c in reversed(self.terms)))

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def to_text(self, variable: str = "t", denominator: int = 2) -> str:
        """
        Render terms in increasing exponent order.

        Args:
            variable: Symbol to print
            denominator: Stored exponent units per power of ``variable``
                (2 for t in half units, 1 for whole units such as A)

        Returns:
            Text such as ``"-t^(1/2) - t^(5/2)"``
        """
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exponent, coeff in self.terms:
            power = _render_power(variable, exponent, denominator)
            magnitude = abs(coeff)
            body = power if power and magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> list[list[int | str]]:
        """Sorted ``[half_exponent, coefficient_as_decimal_string]`` pairs."""
        return [[e, str(c)] for e, c in self.terms]


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
# t = s^2
T = LaurentPoly.monomial(1, 2)
T_INV = LaurentPoly.monomial(1, -2)
# z = t^(1/2) - t^(-1/2)
Z = LaurentPoly(((-1, -1), (1, 1)))


def _coerce(value: LaurentPoly | int) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")


def _render_power(variable: str, exponent: int, denominator: int) -> str:
    if exponent % denominator == 0:
        power = exponent // denominator
        if power == 0:
            return ""
        if power == 1:
            return variable
        return f"{variable}^{power}"
    return f"{variable}^({exponent}/{denominator})"


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<var>t)|(?P<op>[-+*^/()])"
)


class _PolynomialParser:
    """Recursive-descent parser over the term grammar."""

    def __init__(self, text: str) -> None:
        self._text = text
        self._tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None:
                raise PolynomialParseError(
                    code="PARSE_ERROR",
                    message=f"unexpected character {text[pos]!r}",
                    position=pos,
                )
            kind = match.lastgroup or ""
            if kind != "ws":
                self._tokens.append((kind, match.group(), pos))
            pos = match.end()
        self._index = 0

    def _peek(self) -> tuple[str, str, int] | None:
        if self._index < len(self._tokens):
            return self._tokens[self._index]
        return None

    def _position(self) -> int:
        token = self._peek()
        return token[2] if token else len(self._text)

    def _error(self, message: str) -> PolynomialParseError:
        return PolynomialParseError(code="PARSE_ERROR", message=message, position=self._position())

    def _accept(self, value: str) -> bool:
        token = self._peek()
        if token is not None and token[1] == value:
            self._index += 1
            return True
        return False

    def _expect_number(self) -> int:
        token = self._peek()
        if token is None or token[0] != "num":
            raise self._error("expected an integer")
        self._index += 1
        return int(token[1])

    def parse(self) -> LaurentPoly:
        if not self._tokens:
            raise self._error("empty polynomial")
        acc: dict[int, int] = {}
        sign = -1 if self._accept("-") else 1
        if sign == 1:
            self._accept("+")
        while True:
            coeff, exponent = self._term()
            acc[exponent] = acc.get(exponent, 0) + sign * coeff
            if self._peek() is None:
                break
            if self._accept("+"):
                sign = 1
            elif self._accept("-"):
                sign = -1
            else:
                raise self._error("expected '+' or '-' between terms")
        return LaurentPoly.from_mapping(acc)

    def _term(self) -> tuple[int, int]:
        token = self._peek()
        if token is None:
            raise self._error("expected a term")
        if token[0] == "num":
            coeff = self._expect_number()
            if self._accept("*"):
                return coeff, self._monomial()
            following = self._peek()
            if following is not None and following[0] == "var":
                return coeff, self._monomial()
            return coeff, 0
        if token[0] == "var":
            return 1, self._monomial()
        raise self._error(f"unexpected {token[1]!r}")

    def _monomial(self) -> int:
        token = self._peek()
        if token is None or token[0] != "var":
            raise self._error("expected 't'")
        self._index += 1
        if not self._accept("^"):
            return 2
        if self._accept("("):
            negative = self._accept("-")
            numerator = self._expect_number()
            denominator = 1
            if self._accept("/"):
                denominator = self._expect_number()
            if not self._accept(")"):
                raise self._error("expected ')'")
            if denominator not in (1, 2):
                raise self._error("exponent denominator must be 1 or 2")
            half = numerator * (2 // denominator)
            return -half if negative else half
        negative = self._accept("-")
        power = self._expect_number()
        return -2 * power if negative else 2 * power
