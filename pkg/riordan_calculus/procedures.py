"""Operations on text input, shared by the command line and the HTTP API."""

from fractions import Fraction
from typing import Dict, List, Optional
from riordan_calculus import riordan as r
from riordan_calculus import calculus as c
from riordan_calculus import cauchy as k
from riordan_calculus import matrix as m
from riordan_calculus.series import DomainError, Series
from riordan_calculus.riordan import RiordanElement
from riordan_calculus.cauchy import CauchyElement
from riordan_calculus.parsing import (
    parse_series,
    parse_pair,
    DEFAULT_PRECISION,
)

GENPOW_MODES = ["star", "binomial", "rtimes"]

# The number of series arguments each star operation takes.
STAR_OPERATIONS: Dict[str, int] = {
    "add": 2,
    "sub": 2,
    "mul": 2,
    "substitute": 2,
    "power": 1,
    "inverse": 1,
    "exp": 1,
    "log": 1,
}


class InvalidExponent(DomainError):
    """The exponent is not allowed for the requested kind of power."""


class InvalidArguments(DomainError):
    """Wrong number of arguments for the operation."""


def evaluate(
    expr: str,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> Series:
    return parse_series(
        expr, precision, default_precision, max_precision=max_precision
    )


def rtimes(
    left: str,
    right: str,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> RiordanElement:
    a = parse_pair(
        left, precision, default_precision, max_precision=max_precision
    )
    b = parse_pair(right, precision, a.precision, max_precision=max_precision)
    return r.rtimes(a, b)


def power(
    pair: str,
    n: int,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> RiordanElement:
    a = parse_pair(
        pair, precision, default_precision, max_precision=max_precision
    )
    if n < 0:
        return r.rtimes_power(r.group_inverse(a), -n)
    return r.rtimes_power(a, n)


def phi(
    base: str,
    f: str,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> RiordanElement:
    p = parse_pair(
        base, precision, default_precision, max_precision=max_precision
    )
    g = parse_series(f, precision, p.precision, max_precision=max_precision)
    return c.phi_apply(p, g)


def generalized_power(
    pair: str,
    lam: Fraction,
    mode: str = "star",
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> RiordanElement:
    """Raise a group element to a rational power.

    The "star" mode computes ((1,x) + p)^(*lam) in the Cauchy algebra
    over p = g - (1,x). The "binomial" mode sums the binomial series of
    ⋊-powers of p. The "rtimes" mode is the usual ⋊-power and needs an
    integer exponent.
    """

    g = parse_pair(
        pair, precision, default_precision, max_precision=max_precision
    )
    if mode == "rtimes":
        if lam.denominator != 1:
            raise InvalidExponent(f"{lam} is not an integer")
        n = lam.numerator
        return r.rtimes_power(r.group_inverse(g) if n < 0 else g, abs(n))
    if mode == "binomial":
        return c.rtimes_binomial_power(g, lam)
    if mode == "star":
        if not r.is_group(g):
            raise r.NotAGroupElement(f"{g} is not in UM⋊US")
        base = c.PhiMap(r.sub(g, r.identity(g.precision, g.field)))
        one_plus_p = k.unit(base) + k.generator(base)
        return k.star_generalized_power(one_plus_p, lam).realize()
    raise ValueError(f"invalid mode: {mode}")


def star(
    operation: str,
    base: str,
    args: List[str],
    exponent: Optional[Fraction] = None,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> CauchyElement:
    """Run a Cauchy algebra operation on elements given by their series
    over a common base."""

    arity = STAR_OPERATIONS[operation]
    if len(args) != arity:
        raise InvalidArguments(
            f"{operation} takes {arity} series, {len(args)} given"
        )
    p = parse_pair(
        base, precision, default_precision, max_precision=max_precision
    )
    phi_map = c.PhiMap(p)
    xs = [
        k.from_series(
            phi_map,
            parse_series(
                a, precision, p.precision, max_precision=max_precision
            ),
        )
        for a in args
    ]

    if operation == "add":
        return k.star_add(*xs)
    if operation == "sub":
        return k.star_sub(*xs)
    if operation == "mul":
        return k.star_mul(*xs)
    if operation == "substitute":
        return k.star_substitute(*xs)
    if operation == "inverse":
        return k.star_inverse(*xs)
    if operation == "exp":
        return k.star_exp(*xs)
    if operation == "log":
        return k.star_log(*xs)
    if exponent is None:
        raise InvalidExponent("power needs an exponent")
    if exponent.denominator == 1 and exponent >= 0:
        return k.star_power(xs[0], exponent.numerator)
    return k.star_generalized_power(xs[0], exponent)


def matrix(
    pair: str,
    size: int,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    max_precision: Optional[int] = None,
) -> m.RiordanMatrix:
    a = parse_pair(
        pair,
        precision,
        max(size, default_precision),
        max_precision=max_precision,
    )
    return m.to_matrix(a, size)
