"""Riordan matrices.

The matrix of (mu, sigma) has the ordinary generating function of its
j-th column equal to mu * sigma^j. Multiplying such matrices reverses
the order of the ⋊-product: M(a) M(b) = M(b ⋊ a).
"""

from __future__ import annotations
import enum
import json
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple
from riordan_calculus import series as s
from riordan_calculus import riordan as r
from riordan_calculus.fields import Field, QQ
from riordan_calculus.series import DomainError, Series
from riordan_calculus.riordan import RiordanElement
from riordan_calculus.schemas import RiordanMatrixSchema


class InsufficientPrecision(DomainError):
    """The pair is not known to the precision the matrix needs."""


class Correspondence(enum.Enum):
    HOMOMORPHISM = "homomorphism"
    ANTI_HOMOMORPHISM = "anti-homomorphism"
    BOTH = "both"
    NEITHER = "neither"


# Determined by `matrix_correspondence` on random group elements.
RTIMES_ORDER = Correspondence.ANTI_HOMOMORPHISM

Rows = Tuple[Tuple[Any, ...], ...]


@dataclass(frozen=True)
class RiordanMatrix:
    rows: Rows
    source: Optional[RiordanElement] = None
    field: Field = QQ

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RiordanMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "RiordanMatrix") -> "RiordanMatrix":
        return matmul(self, other)

    def __str__(self) -> str:
        cells = [[str(c) for c in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=0)
        return "\n".join(
            " ".join(c.rjust(width) for c in row) for row in cells
        )


def to_matrix(a: RiordanElement, size: int) -> RiordanMatrix:
    if size < 1:
        raise s.InvalidPrecision(f"invalid matrix size: {size}")
    if a.precision < size:
        raise InsufficientPrecision(
            f"a {size}x{size} matrix needs O(x^{size}), but {a} is known"
            f" modulo x^{a.precision}"
        )
    columns = []
    column = a.mu
    for _ in range(size):
        columns.append(column.coeffs[:size])
        column = s.mul(column, a.sigma)
    rows = tuple(
        tuple(columns[j][i] for j in range(size)) for i in range(size)
    )
    return RiordanMatrix(rows, a, a.field)


def matmul(a: RiordanMatrix, b: RiordanMatrix) -> RiordanMatrix:
    n = a.size
    if b.size != n:
        raise s.PrecisionMismatch(
            f"can not multiply {n}x{n} and {b.size}x{b.size} matrices"
        )
    zero = a.field.zero
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            c = zero
            for k in range(n):
                c += a.rows[i][k] * b.rows[k][j]
            row.append(c)
        rows.append(tuple(row))
    return RiordanMatrix(tuple(rows), field=a.field)


def matrix_correspondence(
    a: RiordanElement, b: RiordanElement, size: int
) -> Correspondence:
    """Tell which order of the ⋊-product the matrix product follows on
    the pair (a, b)."""

    product = matmul(to_matrix(a, size), to_matrix(b, size))
    direct = product == to_matrix(r.rtimes(a, b), size)
    reversed_ = product == to_matrix(r.rtimes(b, a), size)
    if direct and reversed_:
        return Correspondence.BOTH
    if direct:
        return Correspondence.HOMOMORPHISM
    if reversed_:
        return Correspondence.ANTI_HOMOMORPHISM
    return Correspondence.NEITHER


def rtimes_matrix_check(
    a: RiordanElement, b: RiordanElement, size: int
) -> bool:
    return matrix_correspondence(a, b, size) in (
        RTIMES_ORDER,
        Correspondence.BOTH,
    )


def is_lower_unitriangular(m: RiordanMatrix) -> bool:
    return all(
        m.rows[i][j] == (1 if i == j else 0)
        for i in range(m.size)
        for j in range(i, m.size)
    )


def column_series(m: RiordanMatrix, j: int) -> Series:
    return Series([row[j] for row in m.rows], m.size, m.field)


def egf_coefficients(a: RiordanElement, size: int) -> List[List[Any]]:
    """Return the table c[i][j] of the coefficients of x^i y^j in
    mu(x) * exp(y * sigma(x)), for i, j < size.

    The exponential E = exp(y * sigma) satisfies dE/dy = sigma * E, so its
    coefficient of y^j is sigma * E_(j-1) / j.
    """

    if a.precision < size:
        raise InsufficientPrecision(
            f"the expansion needs O(x^{size}), but {a} is known modulo"
            f" x^{a.precision}"
        )
    s.check_divisible_up_to(a.field, size - 1)
    y_coeffs = [s.one(a.precision, a.field)]
    for j in range(1, size):
        e = s.mul(a.sigma, y_coeffs[-1])
        y_coeffs.append(s.scale(a.field.one / j, e))
    columns = [s.mul(a.mu, e).coeffs[:size] for e in y_coeffs]
    return [[columns[j][i] for j in range(size)] for i in range(size)]


def egf_identity_check(a: RiordanElement, size: int) -> bool:
    """Check that m[i][j] / j! is the coefficient of x^i y^j in
    mu(x) * exp(y * sigma(x))."""

    m = to_matrix(a, size)
    table = egf_coefficients(a, size)
    factorial = a.field.one
    for j in range(size):
        if j > 0:
            factorial *= j
        for i in range(size):
            if m.rows[i][j] / factorial != table[i][j]:
                return False
    return True


def to_csv(m: RiordanMatrix) -> str:
    return "".join(",".join(str(c) for c in row) + "\n" for row in m.rows)


def to_json(m: RiordanMatrix) -> str:
    return json.dumps(RiordanMatrixSchema().dump(m))
