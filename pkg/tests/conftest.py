import random
import pytest
from riordan_calculus import create_app

config_dict = {
    "TESTING": True,
    "APP_ENABLE_CORS": True,
    "APP_DEFAULT_PRECISION": 16,
    "APP_MAX_PRECISION": 64,
    "APP_MAX_MATRIX_SIZE": 10,
    "APP_MAX_EXPONENT": 100,
    "APP_DEFAULT_SEED": 0,
    "APP_DEFAULT_TRIALS": 3,
    "APP_OUTPUT_FORMAT": "text",
}


@pytest.fixture(scope="module")
def app():
    """Get a Flask application object."""

    app = create_app(config_dict)
    with app.app_context():
        yield app


@pytest.fixture(scope="function")
def rng():
    return random.Random(12345)
