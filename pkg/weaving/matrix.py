"""Dense matrices over the exact rings (LaurentPoly and CycloInt)."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Generic, Protocol, TypeVar

if TYPE_CHECKING:
    from typing import Self

from weaving.cyclotomic import CycloInt, eval_at
from weaving.laurent import LaurentPoly


class _Ring(Protocol):
    def __add__(self, other: Self, /) -> Self: ...
    def __mul__(self, other: Self, /) -> Self: ...
    def is_zero(self) -> bool: ...


R = TypeVar("R", bound=_Ring)
S = TypeVar("S", bound=_Ring)


class MatrixShapeError(Exception):
    """Exception raised when matrix dimensions do not match."""

    def __init__(self, code: str, message: str) -> None:
        self.code = code
        self.message = message
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class Matrix(Generic[R]):
    """Row-major matrix; ``zero`` is the additive identity of the entry ring."""

    rows: tuple[tuple[R, ...], ...]
    zero: R

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise MatrixShapeError(code="SHAPE_ERROR", message="ragged rows")

    @classmethod
    def of(cls, rows: Sequence[Sequence[R]], zero: R) -> Matrix[R]:
        return cls(tuple(tuple(row) for row in rows), zero)

    @classmethod
    def identity(cls, size: int, one: R, zero: R) -> Matrix[R]:
        return cls(
            tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size)), zero
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, index: tuple[int, int]) -> R:
        i, j = index
        return self.rows[i][j]

    def __add__(self, other: Matrix[R]) -> Matrix[R]:
        if self.shape != other.shape:
            raise MatrixShapeError(
                code="SHAPE_ERROR", message=f"cannot add {self.shape} and {other.shape}"
            )
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb, strict=True))
                for ra, rb in zip(self.rows, other.rows, strict=True)
            ),
            self.zero,
        )

    def __matmul__(self, other: Matrix[R]) -> Matrix[R]:
        rows, inner = self.shape
        other_inner, cols = other.shape
        if inner != other_inner:
            raise MatrixShapeError(
                code="SHAPE_ERROR", message=f"cannot multiply {self.shape} by {other.shape}"
            )
        result: list[tuple[R, ...]] = []
        for i in range(rows):
            out: list[R] = []
            for j in range(cols):
                acc = self.zero
                for k in range(inner):
                    left = self.rows[i][k]
                    if left.is_zero():
                        continue
                    right = other.rows[k][j]
                    if right.is_zero():
                        continue
                    acc = acc + left * right
                out.append(acc)
            result.append(tuple(out))
        return Matrix(tuple(result), self.zero)

    def scale(self, scalar: R) -> Matrix[R]:
        return Matrix(tuple(tuple(scalar * x for x in row) for row in self.rows), self.zero)

    def power(self, exponent: int, one: R) -> Matrix[R]:
        """Iterated product; ``exponent`` 0 gives the identity."""
        rows, cols = self.shape
        if rows != cols:
            raise MatrixShapeError(code="SHAPE_ERROR", message="only square matrices have powers")
        result = Matrix.identity(rows, one, self.zero)
        for _ in range(exponent):
            result = result @ self
        return result

    def map(self, fn: Callable[[R], S], zero: S) -> Matrix[S]:
        return Matrix(tuple(tuple(fn(x) for x in row) for row in self.rows), zero)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def scalar(self) -> R:
        """The single entry of a 1x1 matrix."""
        if self.shape != (1, 1):
            raise MatrixShapeError(code="SHAPE_ERROR", message=f"expected 1x1, got {self.shape}")
        return self.rows[0][0]


PolyMatrix = Matrix[LaurentPoly]
CycloMatrix = Matrix[CycloInt]


def poly_matrix(rows: Sequence[Sequence[LaurentPoly]]) -> PolyMatrix:
    return Matrix.of(rows, LaurentPoly())


def evaluate(matrix: PolyMatrix, half_power_of_zeta: int) -> CycloMatrix:
    """Entrywise :func:`eval_at`."""
    return matrix.map(lambda entry: eval_at(entry, half_power_of_zeta), CycloInt())
