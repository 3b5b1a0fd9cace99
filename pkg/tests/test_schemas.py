import pytest
from marshmallow import ValidationError
from riordan_calculus import schemas
from riordan_calculus.matrix import to_matrix
from riordan_calculus.parsing import parse_pair


def test_load_rtimes_request():
    s = schemas.RtimesRequestSchema()
    data = s.load({"left": "(1 ; x)", "right": "(1 ; x^2)"})
    assert data == {
        "type": "RtimesRequest",
        "left": "(1 ; x)",
        "right": "(1 ; x^2)",
    }
    data = s.load({"left": "(1 ; x)", "right": "(1 ; x)", "precision": 8})
    assert data["precision"] == 8

    with pytest.raises(ValidationError):
        s.load({"left": "(1 ; x)"})
    with pytest.raises(ValidationError):
        s.load({"left": "(1 ; x)", "right": "(1 ; x)", "precision": 1})
    with pytest.raises(ValidationError):
        s.load({"type": "Wrong", "left": "(1 ; x)", "right": "(1 ; x)"})
    with pytest.raises(ValidationError):
        s.load({"left": "x" * 10001, "right": "(1 ; x)"})


def test_load_generalized_power_request():
    s = schemas.GeneralizedPowerRequestSchema()
    data = s.load({"pair": "(1 ; x)", "exponent": "-1/2"})
    assert data["mode"] == "star"
    assert data["type"] == "GeneralizedPowerRequest"
    assert s.load({"pair": "(1 ; x)", "exponent": " 3 "})["exponent"] == " 3 "

    with pytest.raises(ValidationError):
        s.load({"pair": "(1 ; x)", "exponent": "x"})
    with pytest.raises(ValidationError):
        s.load({"pair": "(1 ; x)", "exponent": "1/2", "mode": "other"})


def test_load_power_and_matrix_requests():
    data = schemas.PowerRequestSchema().load(
        {"pair": "(1 ; x)", "exponent": -3}
    )
    assert data["exponent"] == -3
    data = schemas.MatrixRequestSchema().load({"pair": "(1 ; x)", "size": 3})
    assert data["size"] == 3
    with pytest.raises(ValidationError):
        schemas.MatrixRequestSchema().load({"pair": "(1 ; x)", "size": 0})
    data = schemas.PhiRequestSchema().load(
        {"base": "(x ; x^2)", "series": "1 + x"}
    )
    assert data["series"] == "1 + x"


def test_dump_pair():
    obj = schemas.RiordanPairSchema().dump(parse_pair("(1 - x ; 2*x)", 3))
    assert obj == {
        "type": "RiordanPair",
        "precision": 3,
        "mu": "1 - x + O(x^3)",
        "sigma": "2*x + O(x^3)",
        "text": "(1 - x ; 2*x)",
    }


def test_dump_matrix():
    rm = to_matrix(parse_pair("(1 + x ; x)", 2), 2)
    obj = schemas.RiordanMatrixSchema().dump(rm)
    assert obj == {
        "n": 2,
        "mu": "1 + x + O(x^2)",
        "sigma": "x + O(x^2)",
        "rows": [["1", "0"], ["1", "1"]],
    }
