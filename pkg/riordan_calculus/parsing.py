"""Text grammar for series and pairs.

    series := ['+'|'-'] term (('+'|'-') term)* ['+' 'O(x^' nat ')']
    term   := coeff | coeff ['*'] power | power
    power  := 'x' ['^' nat]
    coeff  := nat ['/' nat]
    pair   := '(' series ';' series ')'

An order term "O(x^N)" fixes the precision of the series. Exponents
which are not below the precision are rejected, never truncated.
"""

from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from typing import Any, FrozenSet, List, NamedTuple, Optional, Tuple
import pyparsing as pp
from riordan_calculus.fields import Field, QQ
from riordan_calculus.series import Series, format_series  # noqa: F401
from riordan_calculus.riordan import RiordanElement, format_pair  # noqa: F401

DEFAULT_PRECISION = 16


class ParseError(Exception):
    """The text does not follow the series grammar."""

    def __init__(self, text: str, offset: int, expected: FrozenSet[str]):
        self.text = text
        self.offset = offset
        self.expected = expected
        super().__init__(
            f"at byte {offset} of {text!r}: expected"
            f" {' or '.join(sorted(expected))}"
        )


class _Term(NamedTuple):
    loc: int
    coeff: Fraction
    exponent: int


class _Order(NamedTuple):
    loc: int
    precision: int


def _make_fraction(s: str, loc: int, toks: pp.ParseResults) -> Fraction:
    denominator = toks[1] if len(toks) > 1 else 1
    if denominator == 0:
        raise pp.ParseFatalException(s, loc, "Expected nonzero denominator")
    return Fraction(toks[0], denominator)


def _make_term(s: str, loc: int, toks: pp.ParseResults) -> _Term:
    sign, coeff, exponent = toks
    return _Term(loc, -coeff if sign == "-" else coeff, exponent)


@lru_cache(maxsize=None)
def _make_grammar() -> dict:
    nat = pp.Word(pp.nums).set_name("natural number")
    nat.set_parse_action(lambda toks: int(toks[0]))
    sign = pp.one_of("+ -").set_name("sign")

    coefficient = (nat + pp.Optional(pp.Suppress("/") + nat)).set_name(
        "coefficient"
    )
    coefficient.set_parse_action(_make_fraction)
    power = (
        pp.Suppress("x") + pp.Optional(pp.Suppress("^") + nat, default=1)
    ).set_name("power of x")

    coeff_term = coefficient + pp.Optional(
        pp.Optional(pp.Suppress("*")) + power, default=0
    )
    power_term = power.copy().add_parse_action(
        lambda toks: [Fraction(1), toks[0]]
    )
    term = (coeff_term | power_term).set_name("term")

    first_term = pp.Optional(sign, default="+") + term
    next_term = sign + term
    first_term.set_parse_action(_make_term)
    next_term.set_parse_action(_make_term)

    order_term = (
        pp.Suppress("+")
        + pp.Suppress("O")
        + pp.Suppress("(")
        + power
        + pp.Suppress(")")
    ).set_name("order term")
    order_term.set_parse_action(lambda s, loc, toks: _Order(loc, toks[0]))

    series = (
        first_term + pp.ZeroOrMore(next_term) + pp.Optional(order_term)
    ).set_name("series")
    pair = (
        pp.Suppress("(")
        + pp.Group(series)
        + pp.Suppress(";")
        + pp.Group(series)
        + pp.Suppress(")")
    ).set_name("pair")
    rational = (
        pp.Optional(sign, default="+") + coefficient
    ).set_name("rational number")
    rational.set_parse_action(
        lambda toks: -toks[1] if toks[0] == "-" else toks[1]
    )
    return {
        "series": series,
        "pair": pair,
        "rational": rational,
        "term": term,
    }


def _byte_offset(text: str, loc: int) -> int:
    return len(text[:loc].encode("utf8"))


def _dangling_sign(
    text: str, loc: int
) -> Optional[Tuple[int, FrozenSet[str]]]:
    """Explain a failure at a sign which no term follows.

    Returns the location after the sign, and what may follow it there.
    """

    rest = text[loc:].lstrip()
    if not rest or rest[0] not in "+-":
        return None
    after = len(text) - len(rest) + 1
    try:
        _make_grammar()["term"].parse_string(text[after:])
    except pp.ParseBaseException:
        if rest[0] == "+":
            return after, frozenset(["term", "order term"])
        return after, frozenset(["term"])
    return None


def _parse(name: str, text: str) -> pp.ParseResults:
    try:
        return _make_grammar()[name].parse_string(text, parse_all=True)
    except pp.ParseFatalException as e:
        loc, expected = e.loc, e.msg
    except pp.ParseBaseException as e:
        dangling = _dangling_sign(text, e.loc) if name != "rational" else None
        if dangling is not None:
            after, alternatives = dangling
            raise ParseError(
                text, _byte_offset(text, after), alternatives
            ) from None
        loc, expected = e.loc, e.msg

    if expected.startswith("Expected "):
        expected = expected[len("Expected "):]
    raise ParseError(text, _byte_offset(text, loc), frozenset([expected]))


def _resolve_precision(
    text: str,
    items: List[Any],
    precision: Optional[int],
    default_precision: int,
    max_precision: Optional[int] = None,
) -> int:
    order = items[-1] if items and isinstance(items[-1], _Order) else None
    if order is None:
        return precision or default_precision
    if max_precision is not None and order.precision > max_precision:
        raise ParseError(
            text,
            _byte_offset(text, order.loc),
            frozenset([f"an order term of at most O(x^{max_precision})"]),
        )
    if precision is not None and precision != order.precision:
        raise ParseError(
            text,
            _byte_offset(text, order.loc),
            frozenset([f"O(x^{precision})"]),
        )
    return order.precision


def _build_series(
    text: str, items: List[Any], precision: int, field: Field
) -> Series:
    if precision < 1:
        raise ParseError(text, 0, frozenset(["a positive precision"]))
    coeffs = [Fraction(0)] * precision
    for item in items:
        if isinstance(item, _Order):
            continue
        if item.exponent >= precision:
            raise ParseError(
                text,
                _byte_offset(text, item.loc),
                frozenset([f"an exponent below {precision}"]),
            )
        coeffs[item.exponent] += item.coeff
    return Series(coeffs, precision, field)


def parse_series(
    text: str,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    field: Field = QQ,
    max_precision: Optional[int] = None,
) -> Series:
    """Parse a series like "1 + 2*x + x^3" or "1 - 1/2*x + O(x^4)".

    When `max_precision` is given, order terms above it are rejected.
    """

    items = list(_parse("series", text))
    n = _resolve_precision(
        text, items, precision, default_precision, max_precision
    )
    return _build_series(text, items, n, field)


def parse_pair(
    text: str,
    precision: Optional[int] = None,
    default_precision: int = DEFAULT_PRECISION,
    field: Field = QQ,
    max_precision: Optional[int] = None,
) -> RiordanElement:
    """Parse a pair like "(1 + x ; x + x^2)".

    The order terms of the components, when given, must agree.
    """

    mu_items, sigma_items = (list(g) for g in _parse("pair", text))
    if precision is None:
        for items in (mu_items, sigma_items):
            if items and isinstance(items[-1], _Order):
                precision = items[-1].precision
                break
    n_mu, n_sigma = (
        _resolve_precision(
            text, items, precision, default_precision, max_precision
        )
        for items in (mu_items, sigma_items)
    )
    return RiordanElement(
        _build_series(text, mu_items, n_mu, field),
        _build_series(text, sigma_items, n_sigma, field),
    )


def parse_rational(text: str) -> Fraction:
    return _parse("rational", text)[0]
