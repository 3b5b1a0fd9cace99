import pytest
from riordan_calculus import series as s
from riordan_calculus import riordan as r
from riordan_calculus.series import Series
from riordan_calculus.riordan import RiordanElement
from riordan_calculus.parsing import parse_pair


def pair(text: str, precision: int = 5) -> RiordanElement:
    return parse_pair(text, precision)


def test_construct_pair():
    a = pair("(1 + x ; x + x^2)")
    assert a.precision == 5
    assert str(a) == "(1 + x ; x + x^2)"
    assert repr(a) == "RiordanElement('(1 + x ; x + x^2)')"
    assert a.truncate(3) == pair("(1 + x ; x + x^2)", 3)

    with pytest.raises(r.NotInIdealM):
        RiordanElement(s.one(3), s.one(3))
    with pytest.raises(s.PrecisionMismatch):
        RiordanElement(s.one(3), s.x(4))
    with pytest.raises(s.InvalidPrecision):
        RiordanElement(s.one(1), s.zero(1))


def test_linear_operations():
    a = pair("(1 + x ; x + x^2)")
    b = pair("(2 ; x^3)")
    assert a + b == pair("(3 + x ; x + x^2 + x^3)")
    assert a - b == pair("(-1 + x ; x + x^2 - x^3)")
    assert -b == pair("(-2 ; -x^3)")
    assert 3 * b == pair("(6 ; 3*x^3)")
    assert r.zero(5).is_zero()
    assert not r.identity(5).is_zero()


def test_rtimes():
    g = pair("(1 + x ; x + x^2)")
    unit = r.identity(5)
    assert r.rtimes(g, unit) == g
    assert r.rtimes(unit, g) == g
    assert g * g == pair("(1 + 2*x + 2*x^2 + x^3 ; x + 2*x^2 + 2*x^3 + x^4)")
    base = pair("(x ; x^2)")
    assert r.rtimes(base, base) == pair("(x^3 ; x^4)")


def test_rtimes_power():
    g = pair("(1 + x ; x + x^2)")
    assert r.rtimes_power(g, 0) == r.identity(5)
    assert r.rtimes_power(g, 1) == g
    assert g**2 == g * g
    assert r.rtimes_power(g, 3) == g * g * g
    with pytest.raises(ValueError):
        r.rtimes_power(g, -1)


def test_closed_form_powers():
    g = pair("(1 + x ; x + x^2)")
    powers = r.closed_form_powers(g)
    assert next(powers) == g
    assert next(powers) == g * g
    assert next(powers) == g * g * g

    powers = r.closed_form_powers(pair("(2 ; x^2)"))
    assert [next(powers) for _ in range(3)] == [
        pair("(2 ; x^2)"),
        pair("(4 ; x^4)"),
        pair("(8 ; 0)"),
    ]
    assert r.rtimes_power(pair("(2 ; x^2)"), 7) == pair("(128 ; 0)")


def test_membership():
    assert r.is_ideal(pair("(x ; x^2)"))
    assert r.is_ideal(r.zero(5))
    assert not r.is_ideal(pair("(x ; x)"))
    assert not r.is_ideal(pair("(1 + x ; x^2)"))
    assert r.is_group(pair("(1 + x ; x + x^2)"))
    assert not r.is_group(pair("(2 ; x)"))
    assert r.is_unit(pair("(2 ; 3*x)"))
    assert not r.is_unit(pair("(2 ; x^2)"))
    assert r.ideal_closure_check(
        pair("(2 + x ; 3*x + x^4)"), pair("(x^2 ; x^2 + x^3)")
    )


def test_group_inverse():
    g = pair("(1 + x ; x + x^2)")
    inverse = r.group_inverse(g)
    assert r.rtimes(g, inverse) == r.identity(5)
    assert r.rtimes(inverse, g) == r.identity(5)
    assert r.group_inverse(pair("(1 ; x + x^2)")) == pair(
        "(1 ; x - x^2 + 2*x^3 - 5*x^4)"
    )
    with pytest.raises(r.NotAGroupElement):
        r.group_inverse(pair("(2 ; x)"))
    with pytest.raises(r.NotAGroupElement):
        r.group_inverse(pair("(1 ; 2*x)"))


def test_group_inverse_is_an_involution():
    g = pair("(1 + x ; x + x^2)")
    assert r.group_inverse(r.group_inverse(g)) == g
    h = pair("(1 - 1/2*x^2 ; x + 3*x^3)")
    assert r.group_inverse(r.group_inverse(h)) == h


def test_centered_part():
    assert r.centered_part(pair("(2 + x ; 3*x + x^2)")) == pair("(x ; x^2)")
    assert r.is_ideal(r.centered_part(pair("(5 - x^3 ; -x + x^4)")))


def test_left_distributivity_fails():
    a, b, c = r.left_distributivity_witness(4)
    assert r.rtimes(a, b + c) == r.zero(4)
    assert r.rtimes(a, b) + r.rtimes(a, c) == RiordanElement(
        s.zero(4), Series([0, 0, 2], 4)
    )
    with pytest.raises(s.InvalidPrecision):
        r.left_distributivity_witness(2)


def test_right_distributivity():
    a = pair("(1 + x ; x + x^2)")
    b = pair("(2 - x^2 ; 3*x^3)")
    c = pair("(x ; -x + x^2)")
    assert r.rtimes(a + b, c) == r.rtimes(a, c) + r.rtimes(b, c)
