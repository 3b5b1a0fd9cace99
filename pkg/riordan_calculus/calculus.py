"""Power series of elements of the ideal K[[x]]⁺⋊M⁺.

Every power series f operates on a pair (mu₊, sigma₊) of the ideal,
giving Φ(f) = sum(f_n * (mu₊, sigma₊)^(⋊n)). Modulo x^N the sum is
finite: the powers of an ideal element vanish beyond `term_bound`.
"""

from __future__ import annotations
from typing import Any, List
from riordan_calculus import series as s
from riordan_calculus import riordan as r
from riordan_calculus.series import DomainError, Series, PrecisionMismatch
from riordan_calculus.riordan import RiordanElement, NotAGroupElement


class NotAnIdealElement(DomainError):
    """The pair does not belong to the ideal K[[x]]⁺⋊M⁺."""


def term_bound(base: RiordanElement, precision: int = 0) -> int:
    """Return the smallest n0 such that base^(⋊n) vanishes modulo x^N
    for every n >= n0.

    The bound relies on the valuation of the first component of
    base^(⋊n) being at least v(mu₊) * (1 + v(sigma₊) + ... +
    v(sigma₊)^(n-1)), and the valuation of the second component being
    v(sigma₊)^n. A component which is zero modulo x^N counts as having
    valuation N.
    """

    n_max = precision or base.precision
    if not r.is_ideal(base):
        raise NotAnIdealElement(f"{base} is not in K[[x]]⁺⋊M⁺")

    v_mu = s.valuation(base.mu).value
    v_sigma = s.valuation(base.sigma).value
    n = 1
    geometric_sum = 1
    sigma_power = v_sigma
    while v_mu * geometric_sum < n_max or sigma_power < n_max:
        n += 1
        geometric_sum += sigma_power
        sigma_power *= v_sigma
    return n


class PhiMap:
    """The linear map f -> Φ(f) for a fixed point of the ideal.

    The powers of the base are computed once, so that a single map can
    be applied to many series (from many threads).
    """

    def __init__(self, base: RiordanElement):
        self.bound = term_bound(base)
        self.base = base

        powers = [r.identity(base.precision, base.field)]
        for _ in range(1, self.bound):
            powers.append(r.rtimes(powers[-1], base))
        assert r.rtimes(powers[-1], base).is_zero()
        self.powers: List[RiordanElement] = powers

    @property
    def precision(self) -> int:
        return self.base.precision

    def __call__(self, f: Series) -> RiordanElement:
        if f.precision != self.precision:
            raise PrecisionMismatch(
                f"can not apply O(x^{f.precision}) to a base known"
                f" modulo x^{self.precision}"
            )
        result = r.zero(self.precision, self.base.field)
        for fn, power in zip(f.coeffs, self.powers):
            if fn != 0:
                result = r.add(result, r.scale(fn, power))
        return result

    def power(self, n: int) -> RiordanElement:
        if n < len(self.powers):
            return self.powers[n]
        return r.zero(self.precision, self.base.field)


def phi_apply(base: RiordanElement, f: Series) -> RiordanElement:
    return PhiMap(base)(f)


def phi_apply_centered(a: RiordanElement, f: Series) -> RiordanElement:
    """Apply `f` to any pair, after moving it into the ideal."""

    return phi_apply(r.centered_part(a), f)


def phi_shift_identity_check(
    base: RiordanElement, g: Series, m: int
) -> bool:
    """Check that Φ(x^m g) = Φ(g) ⋊ base^(⋊m)."""

    phi = PhiMap(base)
    return phi(s.shift(g, m)) == r.rtimes(phi(g), phi.power(m))


def rtimes_exp(base: RiordanElement) -> RiordanElement:
    return phi_apply(base, s.exp_series(s.x(base.precision, base.field)))


def rtimes_geometric(base: RiordanElement) -> RiordanElement:
    """Return the sum of base^(⋊n) over all n."""

    n, field = base.precision, base.field
    return phi_apply(
        base, s.mul_inverse(s.sub(s.one(n, field), s.x(n, field)))
    )


def rtimes_binomial_power(g: RiordanElement, lam: Any) -> RiordanElement:
    """Return sum(C(lam, n) * (g - (1, x))^(⋊n)), for g in UM⋊US."""

    if not r.is_group(g):
        raise NotAGroupElement(f"{g} is not in UM⋊US")
    n, field = g.precision, g.field
    p = r.sub(g, r.identity(n, field))
    result = phi_apply(p, s.binomial_series(lam, n, field))
    assert r.is_group(result)
    return result


def counterexample_check(precision: int = 5, exponent: int = 2) -> bool:
    """Tell whether the binomial power of (1 + x, x + x^2) differs from
    its ⋊-power.

    For the exponent 2 both sides must also match the known values
    (1 + 2x + 2x^2 + x^3, x + 2x^2 + 2x^3 + x^4) and
    (1 + 2x + x^3, x + 2x^2 + x^4).
    """

    if precision < 5:
        raise s.InvalidPrecision("the known values need O(x^5)")

    def pair(mu, sigma) -> RiordanElement:
        return RiordanElement(
            Series(mu, precision), Series(sigma, precision)
        )

    g = pair([1, 1], [0, 1, 1])
    usual = r.rtimes_power(g, exponent)
    binomial = rtimes_binomial_power(g, exponent)
    if usual == binomial:
        return False
    if exponent == 2:
        return usual == pair([1, 2, 2, 1], [0, 1, 2, 2, 1]) and (
            binomial == pair([1, 2, 0, 1], [0, 1, 2, 0, 1])
        )
    return True
