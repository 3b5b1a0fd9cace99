import json
import pytest
from fractions import Fraction
from math import comb
from riordan_calculus import series as s
from riordan_calculus import matrix as m
from riordan_calculus.fields import GF
from riordan_calculus.riordan import RiordanElement
from riordan_calculus.parsing import parse_pair


def pascal_pair(n: int) -> RiordanElement:
    geometric = s.mul_inverse(s.one(n) - s.x(n))
    return RiordanElement(geometric, s.x(n) * geometric)


def test_identity_matrix():
    rm = m.to_matrix(parse_pair("(1 ; x)", 3), 3)
    assert rm.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert rm.size == 3
    assert rm[1, 1] == 1
    assert m.is_lower_unitriangular(rm)
    assert str(m.to_matrix(parse_pair("(1 ; x)", 2), 2)) == "1 0\n0 1"


def test_pascal_triangle():
    rm = m.to_matrix(pascal_pair(6), 6)
    assert all(rm[i, j] == comb(i, j) for i in range(6) for j in range(6))
    assert m.is_lower_unitriangular(rm)
    assert m.column_series(rm, 2) == s.shift(
        s.mul_power(s.mul_inverse(s.one(6) - s.x(6)), 3), 2
    )


def test_to_matrix_errors():
    with pytest.raises(m.InsufficientPrecision):
        m.to_matrix(parse_pair("(1 ; x)", 3), 4)
    with pytest.raises(s.InvalidPrecision):
        m.to_matrix(parse_pair("(1 ; x)", 3), 0)
    with pytest.raises(s.PrecisionMismatch):
        m.matmul(
            m.to_matrix(parse_pair("(1 ; x)", 3), 2),
            m.to_matrix(parse_pair("(1 ; x)", 3), 3),
        )


def test_matrix_product_reverses_rtimes():
    a = parse_pair("(1 + x ; x)", 5)
    b = parse_pair("(1 ; x + x^2)", 5)
    assert m.RTIMES_ORDER == m.Correspondence.ANTI_HOMOMORPHISM
    assert m.matrix_correspondence(a, b, 5) == (
        m.Correspondence.ANTI_HOMOMORPHISM
    )
    assert m.to_matrix(a, 5) @ m.to_matrix(b, 5) == m.to_matrix(b * a, 5)
    assert m.rtimes_matrix_check(a, b, 5)

    unit = parse_pair("(1 ; x)", 5)
    assert m.matrix_correspondence(a, unit, 5) == m.Correspondence.BOTH
    assert m.rtimes_matrix_check(a, unit, 5)


def test_group_elements_are_unitriangular():
    g = parse_pair("(1 - 2*x + x^3 ; x + 1/2*x^2)", 5)
    assert m.is_lower_unitriangular(m.to_matrix(g, 5))
    assert not m.is_lower_unitriangular(
        m.to_matrix(parse_pair("(2 ; x)", 5), 5)
    )


def test_exponential_generating_function():
    g = parse_pair("(1 + x ; x + x^2)", 5)
    table = m.egf_coefficients(g, 3)
    assert table == [[1, 0, 0], [1, 1, 0], [0, 2, Fraction(1, 2)]]
    assert m.egf_identity_check(g, 5)
    assert m.egf_identity_check(pascal_pair(6), 6)
    assert m.egf_identity_check(parse_pair("(1 ; x)", 4, field=GF(5)), 4)
    with pytest.raises(s.UnsupportedCharacteristic):
        m.egf_coefficients(parse_pair("(1 ; x)", 4, field=GF(3)), 4)
    with pytest.raises(m.InsufficientPrecision):
        m.egf_coefficients(g, 6)


def test_export():
    rm = m.to_matrix(parse_pair("(1 ; 1/2*x)", 2), 2)
    assert m.to_csv(rm) == "1,0\n0,1/2\n"
    assert json.loads(m.to_json(rm)) == {
        "n": 2,
        "mu": "1 + O(x^2)",
        "sigma": "1/2*x + O(x^2)",
        "rows": [["1", "0"], ["0", "1/2"]],
    }
    product = rm @ rm
    assert product.source is None
    assert json.loads(m.to_json(product))["mu"] is None
