"""Pydantic models for command output and report schemas."""

from enum import Enum
from typing import Annotated, Any

from pydantic import (
    BaseModel,
    Field,
    PlainSerializer,
    PlainValidator,
    RootModel,
    model_validator,
)

from weaving.cyclotomic import CycloInt
from weaving.laurent import LaurentPoly, PolynomialParseError


class OutputFormat(str, Enum):
    """Render formats accepted by ``--format``."""

    TEXT = "text"
    MD = "md"
    CSV = "csv"
    JSON = "json"


# ============================================================================
# Value Payloads
# ============================================================================


class PolynomialPayload(RootModel[list[tuple[int, str]]]):
    """Sorted ``[half_exponent, coefficient_string]`` pairs."""

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "PolynomialPayload":
        return cls([(e, str(c)) for e, c in poly.terms])

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_json(self.root)


class CyclotomicPayload(BaseModel):
    """Coefficients in the basis {1, zeta, zeta^2, zeta^3}."""

    coefficients: tuple[int, int, int, int]
    pretty: str | None = None

    @classmethod
    def from_value(cls, value: CycloInt) -> "CyclotomicPayload":
        return cls(coefficients=value.coefficients(), pretty=value.pretty())

    def to_value(self) -> CycloInt:
        return CycloInt(*self.coefficients)


def _to_poly(value: Any) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, str):
        try:
            return LaurentPoly.parse(value)
        except PolynomialParseError as exc:
            raise ValueError(str(exc)) from exc
    return PolynomialPayload.model_validate(value).to_poly()


def _to_cyclo(value: Any) -> CycloInt:
    if isinstance(value, CycloInt):
        return value
    if isinstance(value, list | tuple):
        return CycloInt(*value)
    return CyclotomicPayload.model_validate(value).to_value()


Polynomial = Annotated[
    LaurentPoly,
    PlainValidator(_to_poly),
    PlainSerializer(lambda p: PolynomialPayload.from_poly(p).model_dump(), return_type=list),
]

Cyclotomic = Annotated[
    CycloInt,
    PlainValidator(_to_cyclo),
    PlainSerializer(lambda v: CyclotomicPayload.from_value(v).model_dump(), return_type=dict),
]


# ============================================================================
# Report Models
# ============================================================================


class InvariantReport(BaseModel):
    """Every invariant the toolkit derives for one knot or link."""

    label: str = Field(..., description="e.g. W(3,4) or the braid text")
    family: tuple[int, int] | None = Field(None, description="(p, n) for weaving families")
    braid: str | None = None
    knot_name: str | None = None
    jones: Polynomial | None = None
    determinant: int = Field(..., ge=0)
    v_at_w: Cyclotomic
    mu: int = Field(..., ge=1)
    n_L: int = Field(..., ge=0)
    lm_sign: int = Field(..., description="Sign in ±i^(mu-1)(i√3)^n_L")
    unknotting_lower: int | None = Field(None, ge=0)
    unknotting_upper: int | None = Field(None, ge=0)

    model_config = {"arbitrary_types_allowed": True}

    @model_validator(mode="after")
    def _check_consistency(self) -> "InvariantReport":
        norm = self.v_at_w.norm()
        if norm != CycloInt.from_int(3**self.n_L):
            raise ValueError(f"|V(w)|^2 = {norm.to_text()} is not 3^{self.n_L}")
        if self.lm_sign not in (1, -1):
            raise ValueError(f"lm_sign must be +1 or -1, got {self.lm_sign}")
        if (
            self.unknotting_lower is not None
            and self.unknotting_upper is not None
            and self.unknotting_lower > self.unknotting_upper
        ):
            raise ValueError("unknotting lower bound exceeds the upper bound")
        return self


class OutputRecord(BaseModel):
    """One command result: a label and the requested quantities."""

    label: str
    quantities: dict[str, Any]
    format: OutputFormat = OutputFormat.JSON


# ============================================================================
# Table and Verification Models
# ============================================================================


class TableRow(BaseModel):
    """A row of the value table (det, V(w)) or the Jones table."""

    label: str
    knot_name: str | None = None
    determinant: int | None = None
    value: Cyclotomic | None = None
    jones: Polynomial | None = None

    model_config = {"arbitrary_types_allowed": True}


class VerificationCheck(BaseModel):
    """Outcome of one identity checked by the harness."""

    name: str
    passed: bool
    detail: str = ""


class VerificationSummary(BaseModel):
    """All checks run by ``verify``; ``passed`` only if every check passed."""

    checks: list[VerificationCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> VerificationCheck | None:
        return next((check for check in self.checks if not check.passed), None)
