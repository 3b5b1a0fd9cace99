import pytest

G = "(1 + x ; x + x^2)"


@pytest.fixture(scope="function")
def client(app):
    return app.test_client()


def test_rtimes(client):
    r = client.post(
        "/riordan/rtimes", json={"left": G, "right": G, "precision": 5}
    )
    assert r.status_code == 200
    data = r.get_json()
    assert data == {
        "type": "RiordanPair",
        "precision": 5,
        "mu": "1 + 2*x + 2*x^2 + x^3 + O(x^5)",
        "sigma": "x + 2*x^2 + 2*x^3 + x^4 + O(x^5)",
        "text": "(1 + 2*x + 2*x^2 + x^3 ; x + 2*x^2 + 2*x^3 + x^4)",
    }

    r = client.post("/riordan/rtimes", json={"left": G, "right": G})
    assert r.status_code == 200
    assert r.get_json()["precision"] == 16


def test_power(client):
    r = client.post(
        "/riordan/power",
        json={"pair": "(1 ; x + x^2)", "exponent": -1, "precision": 4},
    )
    assert r.status_code == 200
    assert r.get_json()["text"] == "(1 ; x - x^2 + 2*x^3)"

    r = client.post(
        "/riordan/power", json={"pair": "(2 ; x)", "exponent": -1}
    )
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]["pair"]
    assert errors[0].startswith("NotAGroupElement: ")


def test_phi(client):
    r = client.post(
        "/riordan/phi",
        json={"base": "(x ; x^2 + O(x^4))", "series": "2 - x^2"},
    )
    assert r.status_code == 200
    assert r.get_json()["text"] == "(2 - x^3 ; 2*x)"

    r = client.post(
        "/riordan/phi", json={"base": "(1 ; x^2)", "series": "1 + x"}
    )
    assert r.status_code == 422
    assert "base" in r.get_json()["errors"]["json"]


def test_generalized_power(client):
    r = client.post(
        "/riordan/genpow", json={"pair": G, "exponent": "2", "precision": 5}
    )
    assert r.status_code == 200
    assert r.get_json()["text"] == "(1 + 2*x + x^3 ; x + 2*x^2 + x^4)"

    r = client.post(
        "/riordan/genpow",
        json={
            "pair": G,
            "exponent": "1/2",
            "mode": "binomial",
            "precision": 5,
        },
    )
    assert r.status_code == 200
    assert r.get_json()["text"] == (
        "(1 + 1/2*x - 1/8*x^3 ; x + 1/2*x^2 - 1/8*x^4)"
    )

    r = client.post(
        "/riordan/genpow",
        json={"pair": G, "exponent": "1/2", "mode": "rtimes"},
    )
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]["pair"]
    assert errors[0].startswith("InvalidExponent: ")

    r = client.post("/riordan/genpow", json={"pair": G, "exponent": "x"})
    assert r.status_code == 422
    assert "exponent" in r.get_json()["errors"]["json"]


def test_matrix(client):
    r = client.post("/riordan/matrix", json={"pair": "(1 ; x)", "size": 2})
    assert r.status_code == 200
    assert r.get_json() == {
        "n": 2,
        "mu": "1 + O(x^16)",
        "sigma": "x + O(x^16)",
        "rows": [["1", "0"], ["0", "1"]],
    }

    r = client.post("/riordan/matrix", json={"pair": "(1 ; x)", "size": 11})
    assert r.status_code == 422
    assert "size" in r.get_json()["errors"]["json"]

    r = client.post(
        "/riordan/matrix",
        json={"pair": "(1 ; x)", "size": 4, "precision": 3},
    )
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]["pair"]
    assert errors[0].startswith("InsufficientPrecision: ")


def test_parse_errors(client):
    r = client.post("/riordan/rtimes", json={"left": "(1 ; x", "right": G})
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]["left"]
    assert errors[0].startswith("at byte ")

    r = client.post("/riordan/rtimes", json={"left": G, "right": "(1 ; x"})
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]
    assert "left" not in errors
    assert errors["right"][0].startswith("at byte ")

    r = client.post(
        "/riordan/rtimes", json={"left": G, "right": "(1 ; 1 + x)"}
    )
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]["right"]
    assert errors[0].startswith("NotInIdealM: ")

    r = client.post(
        "/riordan/phi", json={"base": "(x ; x^2)", "series": "1 +"}
    )
    assert r.status_code == 422
    assert "series" in r.get_json()["errors"]["json"]


def test_order_terms_above_max_precision(client):
    r = client.post(
        "/riordan/rtimes",
        json={"left": "(1 + x ; x + x^2 + O(x^3000))", "right": G},
    )
    assert r.status_code == 422
    errors = r.get_json()["errors"]["json"]["left"]
    assert "an order term of at most O(x^64)" in errors[0]

    r = client.post(
        "/riordan/matrix", json={"pair": "(1 ; x + O(x^65))", "size": 2}
    )
    assert r.status_code == 422
    assert "pair" in r.get_json()["errors"]["json"]


def test_exponent_limits(client):
    r = client.post(
        "/riordan/power", json={"pair": G, "exponent": 100, "precision": 4}
    )
    assert r.status_code == 200

    for exponent in [101, -101, 2**31]:
        r = client.post(
            "/riordan/power", json={"pair": G, "exponent": exponent}
        )
        assert r.status_code == 422
        assert "exponent" in r.get_json()["errors"]["json"]

    r = client.post(
        "/riordan/genpow",
        json={"pair": G, "exponent": "1000", "mode": "rtimes"},
    )
    assert r.status_code == 422
    assert "exponent" in r.get_json()["errors"]["json"]

    r = client.post(
        "/riordan/genpow",
        json={"pair": G, "exponent": "1000", "precision": 4},
    )
    assert r.status_code == 200



def test_request_validation(client):
    r = client.post("/riordan/rtimes", json={"left": G})
    assert r.status_code == 422

    r = client.post(
        "/riordan/rtimes", json={"left": G, "right": G, "precision": 1}
    )
    assert r.status_code == 422

    r = client.post(
        "/riordan/rtimes", json={"left": G, "right": G, "precision": 65}
    )
    assert r.status_code == 422
    assert "precision" in r.get_json()["errors"]["json"]

    r = client.post(
        "/riordan/power",
        json={"type": "RtimesRequest", "pair": G, "exponent": 1},
    )
    assert r.status_code == 422


def test_openapi_spec(client):
    r = client.get("/riordan/.docs/openapi.json")
    assert r.status_code == 200
    paths = r.get_json()["paths"]
    for path in ["rtimes", "power", "phi", "genpow", "matrix"]:
        assert f"/riordan/{path}" in paths
