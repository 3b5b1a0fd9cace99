"""The algebra K[[mu₊, sigma₊]] under the Cauchy product.

Since Φ is one-to-one, every element sum(f_n * base^(⋊n)) is determined
by the series f, and the algebra is handled through that series. The
Cauchy product of two elements is the product of their series; it is
commutative, unlike ⋊, but agrees with ⋊ on the powers of the base.
"""

from __future__ import annotations
from typing import Any, Union
from riordan_calculus import series as s
from riordan_calculus.series import DomainError, Series
from riordan_calculus.riordan import RiordanElement, format_pair
from riordan_calculus.calculus import PhiMap


class BaseMismatch(DomainError):
    """The elements are expressed over different base points."""


class NotStarInvertible(DomainError):
    """The element has a zero constant term."""


class StarDomainError(DomainError):
    """The element is outside the domain of a star operation."""


class CauchyElement:
    __slots__ = ("rep", "phi")

    def __init__(self, rep: Series, phi: PhiMap):
        if rep.precision != phi.precision:
            raise s.PrecisionMismatch(
                f"a series known modulo x^{rep.precision} can not represent"
                f" an element over a base known modulo x^{phi.precision}"
            )
        if rep.field != phi.base.field:
            raise s.FieldMismatch(
                f"{rep.field!r} and {phi.base.field!r} differ"
            )
        self.rep = rep
        self.phi = phi

    @property
    def base(self) -> RiordanElement:
        return self.phi.base

    @property
    def precision(self) -> int:
        return self.rep.precision

    def realize(self) -> RiordanElement:
        return self.phi(self.rep)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CauchyElement):
            return NotImplemented
        return self.base == other.base and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.base, self.rep))

    def __add__(self, other: "CauchyElement") -> "CauchyElement":
        return star_add(self, other)

    def __sub__(self, other: "CauchyElement") -> "CauchyElement":
        return star_sub(self, other)

    def __neg__(self) -> "CauchyElement":
        return star_scale(-1, self)

    def __mul__(self, other: Any) -> "CauchyElement":
        if isinstance(other, CauchyElement):
            return star_mul(self, other)
        return star_scale(other, self)

    def __rmul__(self, other: Any) -> "CauchyElement":
        return star_scale(other, self)

    def __pow__(self, n: int) -> "CauchyElement":
        return star_power(self, n)

    def __str__(self) -> str:
        coeffs = ", ".join(str(c) for c in self.rep.coeffs)
        return (
            f"[{coeffs}] over {format_pair(self.base)}"
            f" + O(n^{self.precision})"
        )

    def __repr__(self) -> str:
        return f"CauchyElement({str(self)!r})"


BaseLike = Union[RiordanElement, PhiMap]


def _phi(base: BaseLike) -> PhiMap:
    return base if isinstance(base, PhiMap) else PhiMap(base)


def _check_same_base(a: CauchyElement, b: CauchyElement) -> None:
    if a.phi is not b.phi and a.base != b.base:
        raise BaseMismatch(
            f"{format_pair(a.base)} and {format_pair(b.base)} differ"
        )


def _with_rep(a: CauchyElement, rep: Series) -> CauchyElement:
    return CauchyElement(rep, a.phi)


def from_series(base: BaseLike, f: Series) -> CauchyElement:
    """Return the element sum(f_n * base^(⋊n)).

    A `PhiMap` may be passed instead of the base, so that many elements
    share the precomputed powers of the base.
    """

    return CauchyElement(f, _phi(base))


def realize(e: CauchyElement) -> RiordanElement:
    return e.realize()


def unit(base: BaseLike) -> CauchyElement:
    phi = _phi(base)
    return CauchyElement(s.one(phi.precision, phi.base.field), phi)


def generator(base: BaseLike) -> CauchyElement:
    phi = _phi(base)
    return CauchyElement(s.x(phi.precision, phi.base.field), phi)


def delta(base: BaseLike, d: int) -> CauchyElement:
    """Return the element whose series is x^d, which realizes to
    base^(⋊d)."""

    phi = _phi(base)
    return CauchyElement(
        s.monomial(1, d, phi.precision, phi.base.field), phi
    )


def star_add(a: CauchyElement, b: CauchyElement) -> CauchyElement:
    _check_same_base(a, b)
    return _with_rep(a, s.add(a.rep, b.rep))


def star_sub(a: CauchyElement, b: CauchyElement) -> CauchyElement:
    _check_same_base(a, b)
    return _with_rep(a, s.sub(a.rep, b.rep))


def star_scale(alpha: Any, a: CauchyElement) -> CauchyElement:
    return _with_rep(a, s.scale(alpha, a.rep))


def star_mul(a: CauchyElement, b: CauchyElement) -> CauchyElement:
    _check_same_base(a, b)
    return _with_rep(a, s.mul(a.rep, b.rep))


def star_power(a: CauchyElement, n: int) -> CauchyElement:
    if n < 0:
        return star_inverse(star_power(a, -n))
    return _with_rep(a, s.mul_power(a.rep, n))


def star_inverse(a: CauchyElement) -> CauchyElement:
    """Return the inverse of `a` for the Cauchy product.

    Any nonzero constant term is accepted. When it equals 1, the result
    is sum((-1)^n * (a - 1)^(*n)).
    """

    try:
        inverse = s.mul_inverse(a.rep)
    except s.NotAUnit:
        raise NotStarInvertible(f"{a} has a zero constant term") from None
    return _with_rep(a, inverse)


def star_exp(a: CauchyElement) -> CauchyElement:
    if a.rep.coeffs[0] != 0:
        raise StarDomainError(f"exp({a}) needs a zero constant term")
    return _with_rep(a, s.exp_series(a.rep))


def star_log(a: CauchyElement) -> CauchyElement:
    if a.rep.coeffs[0] != 1:
        raise StarDomainError(f"log({a}) needs the constant term 1")
    return _with_rep(a, s.log_series(a.rep))


def star_generalized_power(a: CauchyElement, lam: Any) -> CauchyElement:
    """Return (1 + u)^(*lam) = sum(C(lam, n) * u^(*n)), where u = a - 1.

    Since u has a zero constant term, its n-th power starts at x^n, and
    the binomial series can be cut at the precision.
    """

    if a.rep.coeffs[0] != 1:
        raise StarDomainError(f"{a} does not have the constant term 1")
    n, field = a.precision, a.rep.field
    u = s.sub(a.rep, s.one(n, field))
    return _with_rep(a, s.substitute(s.binomial_series(lam, n, field), u))


def star_substitute(a: CauchyElement, t: CauchyElement) -> CauchyElement:
    """Return sum(a_n * t^(*n)), for t with a zero constant term."""

    _check_same_base(a, t)
    if t.rep.coeffs[0] != 0:
        raise StarDomainError(f"can not substitute {t} (nonzero constant)")
    return _with_rep(a, s.substitute(a.rep, t.rep))


def valuation(e: CauchyElement) -> s.Valuation:
    return s.valuation(e.rep)


def one_parameter_check(a: CauchyElement, alpha: Any, beta: Any) -> bool:
    """Check that a^(*alpha) * a^(*beta) = a^(*(alpha + beta))."""

    field = a.rep.field
    alpha, beta = field(alpha), field(beta)
    lhs = star_mul(
        star_generalized_power(a, alpha), star_generalized_power(a, beta)
    )
    return lhs == star_generalized_power(a, alpha + beta)
