"""The Riordan near algebra of pairs (mu, sigma) with sigma in M.

The product is

    (mu1, sigma1) ⋊ (mu2, sigma2) = ((mu1∘sigma2) * mu2, sigma1∘sigma2),

with identity (1, x). Addition and scalar multiplication act
componentwise; the product distributes over them from the right only.
"""

from __future__ import annotations
from typing import Any, Iterator, Tuple
from riordan_calculus.fields import Field, QQ
from riordan_calculus import series as s
from riordan_calculus.series import (
    DomainError,
    Series,
    InvalidPrecision,
    PrecisionMismatch,
    FieldMismatch,
)


class NotInIdealM(DomainError):
    """The second component has a nonzero constant term."""


class NotAGroupElement(DomainError):
    """The pair does not belong to the Riordan group UM⋊US."""


class RiordanElement:
    __slots__ = ("mu", "sigma")

    def __init__(self, mu: Series, sigma: Series):
        if mu.precision != sigma.precision:
            raise PrecisionMismatch(
                f"mu is known modulo x^{mu.precision},"
                f" sigma modulo x^{sigma.precision}"
            )
        if mu.field != sigma.field:
            raise FieldMismatch(f"{mu.field!r} and {sigma.field!r} differ")
        if mu.precision < 2:
            raise InvalidPrecision("pairs need a precision of at least 2")
        if sigma.coeffs[0] != 0:
            raise NotInIdealM(
                f"{s.format_series(sigma, order=False)} has a nonzero"
                f" constant term"
            )
        self.mu = mu
        self.sigma = sigma

    @property
    def precision(self) -> int:
        return self.mu.precision

    @property
    def field(self) -> Field:
        return self.mu.field

    def truncate(self, precision: int) -> "RiordanElement":
        return RiordanElement(
            s.truncate(self.mu, precision), s.truncate(self.sigma, precision)
        )

    def is_zero(self) -> bool:
        return self.mu.is_zero() and self.sigma.is_zero()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RiordanElement):
            return NotImplemented
        return self.mu == other.mu and self.sigma == other.sigma

    def __hash__(self) -> int:
        return hash((self.mu, self.sigma))

    def __add__(self, other: "RiordanElement") -> "RiordanElement":
        return add(self, other)

    def __sub__(self, other: "RiordanElement") -> "RiordanElement":
        return sub(self, other)

    def __neg__(self) -> "RiordanElement":
        return neg(self)

    def __mul__(self, other: Any) -> "RiordanElement":
        if isinstance(other, RiordanElement):
            return rtimes(self, other)
        return scale(other, self)

    def __rmul__(self, other: Any) -> "RiordanElement":
        return scale(other, self)

    def __pow__(self, n: int) -> "RiordanElement":
        return rtimes_power(self, n)

    def __str__(self) -> str:
        return format_pair(self)

    def __repr__(self) -> str:
        return f"RiordanElement({format_pair(self)!r})"


def format_pair(a: RiordanElement) -> str:
    mu = s.format_series(a.mu, order=False)
    sigma = s.format_series(a.sigma, order=False)
    return f"({mu} ; {sigma})"


def identity(precision: int, field: Field = QQ) -> RiordanElement:
    return RiordanElement(s.one(precision, field), s.x(precision, field))


def zero(precision: int, field: Field = QQ) -> RiordanElement:
    return RiordanElement(s.zero(precision, field), s.zero(precision, field))


def add(a: RiordanElement, b: RiordanElement) -> RiordanElement:
    return RiordanElement(s.add(a.mu, b.mu), s.add(a.sigma, b.sigma))


def sub(a: RiordanElement, b: RiordanElement) -> RiordanElement:
    return RiordanElement(s.sub(a.mu, b.mu), s.sub(a.sigma, b.sigma))


def neg(a: RiordanElement) -> RiordanElement:
    return RiordanElement(s.neg(a.mu), s.neg(a.sigma))


def scale(alpha: Any, a: RiordanElement) -> RiordanElement:
    return RiordanElement(s.scale(alpha, a.mu), s.scale(alpha, a.sigma))


def rtimes(a: RiordanElement, b: RiordanElement) -> RiordanElement:
    mu_bar, sigma = s.substitute_all([a.mu, a.sigma], b.sigma)
    return RiordanElement(s.mul(mu_bar, b.mu), sigma)


def closed_form_powers(a: RiordanElement) -> Iterator[RiordanElement]:
    """Yield a^(⋊1), a^(⋊2), ... from the closed form.

    The n-th power of (mu, sigma) is the pair whose first component is
    the product of mu∘sigma^(∘(k-1)) for k = 1..n, and whose second
    component is sigma^(∘n).
    """

    iterate = s.x(a.precision, a.field)
    product = s.one(a.precision, a.field)
    while True:
        factor, iterate = s.substitute_all([a.mu, a.sigma], iterate)
        product = s.mul(product, factor)
        yield RiordanElement(product, iterate)


def rtimes_power(a: RiordanElement, n: int) -> RiordanElement:
    """Return a^(⋊n) from its closed form.

    For n >= 1, (mu, sigma)^(⋊n) equals the pair whose first component
    is the product of mu∘sigma^(∘(k-1)) for k = 1..n, and whose second
    component is sigma^(∘n).
    """

    if n < 0:
        raise ValueError("negative powers need group_inverse")
    if n == 0:
        return identity(a.precision, a.field)

    precision, field = a.precision, a.field
    iterate = s.x(precision, field)
    product = s.one(precision, field)
    for k in range(n):
        if iterate.is_zero():
            # mu∘0 = mu(0) for every remaining factor
            constant = s.monomial(a.mu.coeffs[0], 0, precision, field)
            product = s.mul(product, s.mul_power(constant, n - k))
            break
        factor, iterate = s.substitute_all([a.mu, a.sigma], iterate)
        product = s.mul(product, factor)
    return RiordanElement(product, iterate)


def is_ideal(a: RiordanElement) -> bool:
    """Tell whether `a` lies in the ideal K[[x]]⁺⋊M⁺."""

    return s.valuation(a.mu) >= 1 and s.valuation(a.sigma) >= 2


def is_group(a: RiordanElement) -> bool:
    """Tell whether `a` lies in the Riordan group UM⋊US."""

    return a.mu.coeffs[0] == 1 and a.sigma.coeffs[1] == 1


def is_unit(a: RiordanElement) -> bool:
    """Tell whether `a` lies in U(K[[x]])⋊U(M)."""

    return a.mu.coeffs[0] != 0 and a.sigma.coeffs[1] != 0


def group_inverse(a: RiordanElement) -> RiordanElement:
    if not is_group(a):
        raise NotAGroupElement(f"{a} is not in UM⋊US")

    sigma_bar = s.comp_inverse(a.sigma)
    mu_bar = s.mul_inverse(s.substitute(a.mu, sigma_bar))
    b = RiordanElement(mu_bar, sigma_bar)

    unit = identity(a.precision, a.field)
    assert rtimes(a, b) == unit and rtimes(b, a) == unit
    return b


def ideal_closure_check(a: RiordanElement, p: RiordanElement) -> bool:
    return is_ideal(rtimes(a, p)) and is_ideal(rtimes(p, a))


def centered_part(a: RiordanElement) -> RiordanElement:
    """Return a - (mu(0), <sigma, x> x), which lies in K[[x]]⁺⋊M⁺."""

    n, field = a.precision, a.field
    return RiordanElement(
        s.sub(a.mu, s.monomial(a.mu.coeffs[0], 0, n, field)),
        s.sub(a.sigma, s.monomial(a.sigma.coeffs[1], 1, n, field)),
    )


def left_distributivity_witness(
    precision: int, field: Field = QQ
) -> Tuple[RiordanElement, RiordanElement, RiordanElement]:
    """Return (a, b, c) such that a⋊(b+c) != a⋊b + a⋊c.

    The second components reproduce x^2∘(x - x) = 0, whereas
    x^2∘x + x^2∘(-x) = 2x^2.
    """

    if precision < 3:
        raise InvalidPrecision("the witness needs x^2 to be representable")
    a = RiordanElement(
        s.one(precision, field), s.monomial(1, 2, precision, field)
    )
    b = identity(precision, field)
    c = neg(b)
    return a, b, c
