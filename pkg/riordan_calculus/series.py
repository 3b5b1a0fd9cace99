"""Truncated formal power series over an exact field.

A `Series` stores the coefficients of x^0, ..., x^(N-1) and is known
modulo x^N, where N is its precision. All operations are exact modulo
x^N, and binary operations insist on equal precisions.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple
from riordan_calculus.fields import Field, QQ


class DomainError(Exception):
    """A mathematical precondition has been violated."""


class InvalidPrecision(DomainError):
    """The requested precision can not hold the series."""


class PrecisionMismatch(DomainError):
    """The operands are known to different precisions."""


class FieldMismatch(DomainError):
    """The operands have coefficients in different fields."""


class CoefficientOutOfRange(DomainError):
    """The coefficient lies beyond the truncation order."""


class SubstitutionOutsideIdeal(DomainError):
    """The substituted series has a nonzero constant term."""


class NotAUnit(DomainError):
    """The series has no multiplicative inverse."""


class NotUnipotent(DomainError):
    """The series does not have constant term 1."""


class NotCompositionallyInvertible(DomainError):
    """The series does not begin exactly with a nonzero multiple of x."""


class UnsupportedCharacteristic(DomainError):
    """The operation divides by an integer which is zero in the field."""


@dataclass(frozen=True)
class Valuation:
    """The order of vanishing of a truncated series.

    An exact valuation k means that the coefficient of x^k is the first
    nonzero one. An "at least" valuation means that every known
    coefficient is zero; truncation can not tell a series of valuation
    >= N from the zero series.
    """

    value: int
    is_exact: bool

    @classmethod
    def exact(cls, k: int) -> "Valuation":
        return cls(k, True)

    @classmethod
    def at_least(cls, n: int) -> "Valuation":
        return cls(n, False)

    def __add__(self, other: "Valuation") -> "Valuation":
        return Valuation(
            self.value + other.value, self.is_exact and other.is_exact
        )

    def __mul__(self, other: "Valuation") -> "Valuation":
        # 0 * (+infinity) = 0
        if self == Valuation.exact(0) or other == Valuation.exact(0):
            return Valuation.exact(0)
        return Valuation(
            self.value * other.value, self.is_exact and other.is_exact
        )

    def saturate(self, horizon: int) -> "Valuation":
        if self.value >= horizon:
            return Valuation.at_least(horizon)
        return self

    def __ge__(self, k: int) -> bool:
        return self.value >= k

    def __gt__(self, k: int) -> bool:
        return self.value > k

    def __str__(self) -> str:
        return (
            f"Exact({self.value})"
            if self.is_exact
            else f"AtLeast({self.value})"
        )


class Series:
    __slots__ = ("coeffs", "field")

    def __init__(
        self,
        coeffs: Iterable[Any],
        precision: Optional[int] = None,
        field: Field = QQ,
    ):
        cs = [field(c) for c in coeffs]
        if precision is None:
            precision = len(cs)
        if precision < 1:
            raise InvalidPrecision(f"invalid precision: {precision}")
        if len(cs) > precision:
            if any(c != 0 for c in cs[precision:]):
                raise CoefficientOutOfRange(
                    f"nonzero coefficients beyond O(x^{precision})"
                )
            del cs[precision:]
        cs.extend(field.zero for _ in range(precision - len(cs)))
        self.coeffs: Tuple[Any, ...] = tuple(cs)
        self.field = field

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> Any:
        if not 0 <= n < self.precision:
            raise CoefficientOutOfRange(
                f"<f, x^{n}> is not known modulo x^{self.precision}"
            )
        return self.coeffs[n]

    __getitem__ = coeff

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> Valuation:
        return valuation(self)

    def truncate(self, precision: int) -> "Series":
        return truncate(self, precision)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return sub(self, other)

    def __neg__(self) -> "Series":
        return neg(self)

    def __mul__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other: Any) -> "Series":
        return scale(other, self)

    def __call__(self, sigma: "Series") -> "Series":
        return substitute(self, sigma)

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"Series({format_series(self)!r})"


def _check_compatible(f: Series, g: Series) -> None:
    if f.precision != g.precision:
        raise PrecisionMismatch(
            f"O(x^{f.precision}) and O(x^{g.precision}) can not be combined"
        )
    if f.field != g.field:
        raise FieldMismatch(f"{f.field!r} and {g.field!r} differ")


def check_divisible_up_to(field: Field, n: int) -> None:
    for k in range(1, n + 1):
        if not field.supports_division_by(k):
            raise UnsupportedCharacteristic(
                f"{k} is not invertible in {field!r}"
            )


def _make(coeffs: List[Any], field: Field) -> Series:
    s = Series.__new__(Series)
    s.coeffs = tuple(coeffs)
    s.field = field
    return s


def zero(precision: int, field: Field = QQ) -> Series:
    return Series([], precision, field)


def one(precision: int, field: Field = QQ) -> Series:
    return Series([1], precision, field)


def x(precision: int, field: Field = QQ) -> Series:
    if precision < 2:
        raise InvalidPrecision("x is not representable modulo x^1")
    return Series([0, 1], precision, field)


def monomial(c: Any, k: int, precision: int, field: Field = QQ) -> Series:
    if not 0 <= k < precision:
        raise CoefficientOutOfRange(f"x^{k} is not below O(x^{precision})")
    return Series([0] * k + [c], precision, field)


def add(f: Series, g: Series) -> Series:
    _check_compatible(f, g)
    return _make([a + b for a, b in zip(f.coeffs, g.coeffs)], f.field)


def sub(f: Series, g: Series) -> Series:
    _check_compatible(f, g)
    return _make([a - b for a, b in zip(f.coeffs, g.coeffs)], f.field)


def neg(f: Series) -> Series:
    return _make([-a for a in f.coeffs], f.field)


def scale(alpha: Any, f: Series) -> Series:
    alpha = f.field(alpha)
    return _make([alpha * a for a in f.coeffs], f.field)


def mul(f: Series, g: Series) -> Series:
    _check_compatible(f, g)
    n = f.precision
    fc, gc = f.coeffs, g.coeffs
    result = [f.field.zero] * n
    for i, a in enumerate(fc):
        if a == 0:
            continue
        for j in range(n - i):
            b = gc[j]
            if b != 0:
                result[i + j] += a * b
    return _make(result, f.field)


def mul_power(f: Series, j: int) -> Series:
    """Return f^j by repeated squaring."""

    assert j >= 0
    result = one(f.precision, f.field)
    base = f
    while j:
        if j & 1:
            result = mul(result, base)
        j >>= 1
        if j:
            base = mul(base, base)
    return result


def shift(f: Series, m: int) -> Series:
    """Return x^m * f, known modulo the same power of x."""

    assert m >= 0
    n = f.precision
    coeffs = [f.field.zero] * min(m, n) + list(f.coeffs[: max(n - m, 0)])
    return _make(coeffs, f.field)


def truncate(f: Series, precision: int) -> Series:
    if precision > f.precision:
        raise InvalidPrecision(
            f"O(x^{f.precision}) can not be raised to O(x^{precision})"
        )
    if precision < 1:
        raise InvalidPrecision(f"invalid precision: {precision}")
    return _make(list(f.coeffs[:precision]), f.field)


def valuation(f: Series) -> Valuation:
    for k, c in enumerate(f.coeffs):
        if c != 0:
            return Valuation.exact(k)
    return Valuation.at_least(f.precision)


def substitute_all(fs: Sequence[Series], sigma: Series) -> List[Series]:
    """Return f∘sigma for every f in `fs`, for sigma with a zero constant
    term.

    The powers of sigma are computed once and shared. Since sigma^k has
    valuation at least k, each power is added from its valuation on, and
    the summation stops as soon as a power vanishes modulo x^N.
    """

    for f in fs:
        _check_compatible(f, sigma)
    if sigma.coeffs[0] != 0:
        raise SubstitutionOutsideIdeal(
            f"can not substitute {sigma} (nonzero constant term)"
        )
    n, field = sigma.precision, sigma.field
    results = [[f.coeffs[0]] + [field.zero] * (n - 1) for f in fs]
    power = sigma
    for k in range(1, n):
        if power.is_zero():
            break
        pc = power.coeffs
        for f, result in zip(fs, results):
            fk = f.coeffs[k]
            if fk == 0:
                continue
            for i in range(k, n):
                if pc[i] != 0:
                    result[i] += fk * pc[i]
        if k + 1 < n:
            power = mul(power, sigma)
    return [_make(result, field) for result in results]


def substitute(f: Series, sigma: Series) -> Series:
    """Return f∘sigma, for sigma with a zero constant term.

    The coefficients of f beyond x^(N-1) can not contribute, so the sum
    over the known coefficients of f is exact modulo x^N.
    """

    return substitute_all([f], sigma)[0]


def comp_power(sigma: Series, n: int) -> Series:
    """Return sigma∘...∘sigma (n times), by repeated squaring."""

    assert n >= 0
    if sigma.coeffs[0] != 0:
        raise SubstitutionOutsideIdeal(
            f"can not iterate {sigma} (nonzero constant term)"
        )
    result = x(sigma.precision, sigma.field)
    base = sigma
    while n:
        if n & 1:
            result = substitute(result, base)
        n >>= 1
        if n:
            base = substitute(base, base)
    return result


def mul_inverse(f: Series) -> Series:
    f0 = f.coeffs[0]
    if f0 == 0:
        raise NotAUnit(f"{f} has a zero constant term")
    n = f.precision
    g = [f.field.one / f0]
    for k in range(1, n):
        s = f.field.zero
        for i in range(1, k + 1):
            s += f.coeffs[i] * g[k - i]
        g.append(-s / f0)
    return _make(g, f.field)


def comp_inverse(sigma: Series) -> Series:
    """Return the compositional inverse of sigma.

    The coefficients t_n of the inverse are found one at a time from
    the coefficient of x^n in sigma∘t = x; `powers[j][m]` holds the
    coefficient of x^m in t^j, which depends only on t_1, ..., t_(m-j+1).
    """

    if sigma.coeffs[0] != 0:
        raise SubstitutionOutsideIdeal(
            f"{sigma} has a nonzero constant term"
        )
    n = sigma.precision
    if n < 2 or sigma.coeffs[1] == 0:
        raise NotCompositionallyInvertible(
            f"{sigma} does not begin with a nonzero multiple of x"
        )
    field = sigma.field
    s1 = sigma.coeffs[1]
    t = [field.zero, field.one / s1]
    powers = {1: t}
    for m in range(2, n):
        c = field.zero
        for j in range(2, m + 1):
            row = powers.setdefault(j, [field.zero] * j)
            prev = powers[j - 1]
            pj = field.zero
            for k in range(1, m - j + 2):
                pj += t[k] * prev[m - k]
            row.append(pj)
            c += sigma.coeffs[j] * pj
        t.append(-c / s1)
    return _make(t[:n], field)


def exp_series(f: Series) -> Series:
    """Return exp(f) for f with a zero constant term.

    Uses g' = f'g, that is n*g_n = sum(k * f_k * g_(n-k), k=1..n).
    """

    if f.coeffs[0] != 0:
        raise SubstitutionOutsideIdeal(
            f"exp({f}) is undefined (nonzero constant term)"
        )
    n = f.precision
    field = f.field
    check_divisible_up_to(field, n - 1)
    g = [field.one]
    for m in range(1, n):
        s = field.zero
        for k in range(1, m + 1):
            s += k * f.coeffs[k] * g[m - k]
        g.append(s / m)
    return _make(g, field)


def log_series(f: Series) -> Series:
    """Return log(f) for f with constant term 1.

    Uses f*g' = f', that is n*g_n = n*f_n - sum(k * g_k * f_(n-k)).
    """

    if f.coeffs[0] != 1:
        raise NotUnipotent(f"log({f}) is undefined (constant term != 1)")
    n = f.precision
    field = f.field
    check_divisible_up_to(field, n - 1)
    g = [field.zero]
    for m in range(1, n):
        s = m * f.coeffs[m]
        for k in range(1, m):
            s -= k * g[k] * f.coeffs[m - k]
        g.append(s / m)
    return _make(g, field)


def binomial(lam: Any, n: int, field: Field = QQ) -> Any:
    """Return the generalized binomial coefficient C(lam, n)."""

    assert n >= 0
    lam = field(lam)
    check_divisible_up_to(field, n)
    c = field.one
    for k in range(1, n + 1):
        c = c * (lam - k + 1) / k
    return c


def binomial_series(lam: Any, precision: int, field: Field = QQ) -> Series:
    """Return (1 + x)^lam = sum(C(lam, n) * x^n)."""

    lam = field(lam)
    check_divisible_up_to(field, precision - 1)
    coeffs = [field.one]
    for k in range(1, precision):
        coeffs.append(coeffs[-1] * (lam - k + 1) / k)
    return _make(coeffs, field)


def _format_coeff(c: Any) -> str:
    return str(c)


def _is_negative(c: Any) -> bool:
    return isinstance(c, (int, Fraction)) and c < 0


def _format_term(c: Any, k: int) -> str:
    if k == 0:
        return _format_coeff(c)
    power = "x" if k == 1 else f"x^{k}"
    if c == 1:
        return power
    return f"{_format_coeff(c)}*{power}"


def format_series(f: Series, order: bool = True) -> str:
    """Render `f` in ascending powers, e.g. "1 + 2*x^2 + O(x^4)"."""

    parts: List[str] = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        negative = _is_negative(c)
        term = _format_term(-c if negative else c, k)
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f" - {term}" if negative else f" + {term}")
    text = "".join(parts) or "0"
    if order:
        text += f" + O(x^{f.precision})"
    return text
