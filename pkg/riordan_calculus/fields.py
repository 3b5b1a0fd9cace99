"""Coefficient fields for truncated power series.

Series arithmetic only uses the Python arithmetic operators on the
coefficients, so a field is mainly a way to construct (and recognize)
its elements. The rationals are the default; prime fields exist to
exercise the characteristic-dependent code paths in tests.
"""

from __future__ import annotations
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union


class Field(ABC):
    characteristic: int = 0

    @abstractmethod
    def __call__(self, value: Any) -> Any:
        """Return `value` as an element of this field."""

    @property
    def zero(self) -> Any:
        return self(0)

    @property
    def one(self) -> Any:
        return self(1)

    def supports_division_by(self, n: int) -> bool:
        """Tell whether the integer `n` is invertible in this field."""

        p = self.characteristic
        return n != 0 and (p == 0 or n % p != 0)


class RationalField(Field):
    characteristic = 0

    def __call__(self, value: Any) -> Fraction:
        if isinstance(value, Residue):
            raise TypeError("can not convert a residue to a rational")
        return Fraction(value)

    def __repr__(self) -> str:
        return "QQ"


class Residue:
    """An element of a prime field, stored as a reduced integer."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other: Union["Residue", int, Fraction]) -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues with different moduli")
            return other
        if isinstance(other, Fraction):
            return Residue(other.numerator, self.modulus) / Residue(
                other.denominator, self.modulus
            )
        if isinstance(other, int):
            return Residue(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero residue")
        inverse = pow(other.value, -1, self.modulus)
        return Residue(self.value * inverse, self.modulus)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Residue)):
            try:
                other = self._coerce(other)
            except (ValueError, ZeroDivisionError):
                return False
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not a prime number")
        self.characteristic = p

    def __call__(self, value: Any) -> Residue:
        if isinstance(value, Residue):
            if value.modulus != self.characteristic:
                raise ValueError("residue from a different prime field")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            return Residue(value.numerator, self.characteristic) / Residue(
                value.denominator, self.characteristic
            )
        return Residue(int(value), self.characteristic)

    def __eq__(self, other):
        return (
            isinstance(other, PrimeField)
            and other.characteristic == self.characteristic
        )

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self) -> str:
        return f"GF({self.characteristic})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)
