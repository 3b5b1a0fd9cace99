from contextlib import contextmanager
from fractions import Fraction
from typing import Optional, Union
from flask import current_app
from flask.views import MethodView
from flask_smorest import Blueprint, abort
from riordan_calculus.schemas import (
    RtimesRequestSchema,
    PowerRequestSchema,
    PhiRequestSchema,
    GeneralizedPowerRequestSchema,
    MatrixRequestSchema,
    RiordanPairSchema,
    RiordanMatrixSchema,
)
from riordan_calculus.series import DomainError
from riordan_calculus.parsing import (
    ParseError,
    parse_pair,
    parse_rational,
    parse_series,
)
from riordan_calculus import riordan as r
from riordan_calculus import calculus as c
from riordan_calculus import specs
from riordan_calculus import procedures


def ensure_precision_limits(precision: Optional[int]) -> None:
    max_precision = current_app.config["APP_MAX_PRECISION"]
    if precision is not None and precision > max_precision:
        abort(
            422,
            errors={
                "json": {
                    "precision": [f"Must be at most {max_precision}."],
                },
            },
        )


def ensure_exponent_limits(exponent: Union[int, Fraction]) -> None:
    max_exponent = current_app.config["APP_MAX_EXPONENT"]
    if abs(exponent) > max_exponent:
        abort(
            422,
            errors={
                "json": {
                    "exponent": [
                        f"Must be between -{max_exponent} and {max_exponent}."
                    ],
                },
            },
        )


def default_precision() -> int:
    return current_app.config["APP_DEFAULT_PRECISION"]


def max_precision() -> int:
    return current_app.config["APP_MAX_PRECISION"]


@contextmanager
def reporting_errors(field_name: str):
    try:
        yield
    except ParseError as e:
        abort(422, errors={"json": {field_name: [str(e)]}})
    except DomainError as e:
        abort(
            422,
            errors={"json": {field_name: [f"{type(e).__name__}: {e}"]}},
        )


riordan_api = Blueprint(
    "riordan",
    __name__,
    url_prefix="/riordan",
    description="""**Compute with pairs of truncated power series.** Pairs
    (mu, sigma) are multiplied by the semi-direct product (⋊), raised to
    integer and rational powers, used as points at which power series are
    evaluated, and expanded into Riordan matrices. All coefficients are
    exact rationals.
    """,
)


@riordan_api.route("/rtimes")
class RtimesEndpoint(MethodView):
    @riordan_api.arguments(RtimesRequestSchema)
    @riordan_api.response(200, RiordanPairSchema)
    @riordan_api.doc(
        operationId="rtimes",
        responses={422: specs.INVALID_EXPRESSION},
    )
    def post(self, rtimes_request):
        """Multiply two pairs."""

        precision = rtimes_request.get("precision")
        ensure_precision_limits(precision)
        with reporting_errors("left"):
            a = parse_pair(
                rtimes_request["left"],
                precision,
                default_precision(),
                max_precision=max_precision(),
            )
        with reporting_errors("right"):
            b = parse_pair(
                rtimes_request["right"],
                precision,
                a.precision,
                max_precision=max_precision(),
            )
            return r.rtimes(a, b)


@riordan_api.route("/power")
class PowerEndpoint(MethodView):
    @riordan_api.arguments(PowerRequestSchema)
    @riordan_api.response(200, RiordanPairSchema)
    @riordan_api.doc(
        operationId="power",
        responses={422: specs.INVALID_EXPRESSION},
    )
    def post(self, power_request):
        """Raise a pair to an integer ⋊-power."""

        precision = power_request.get("precision")
        ensure_precision_limits(precision)
        ensure_exponent_limits(power_request["exponent"])
        with reporting_errors("pair"):
            return procedures.power(
                power_request["pair"],
                power_request["exponent"],
                precision,
                default_precision(),
                max_precision=max_precision(),
            )


@riordan_api.route("/phi")
class PhiEndpoint(MethodView):
    @riordan_api.arguments(PhiRequestSchema)
    @riordan_api.response(200, RiordanPairSchema)
    @riordan_api.doc(
        operationId="phi",
        responses={422: specs.INVALID_EXPRESSION},
    )
    def post(self, phi_request):
        """Apply a power series to a pair.

        The result is the sum of f_n * base^(⋊n) over all n.
        """

        precision = phi_request.get("precision")
        ensure_precision_limits(precision)
        with reporting_errors("base"):
            base = parse_pair(
                phi_request["base"],
                precision,
                default_precision(),
                max_precision=max_precision(),
            )
        with reporting_errors("series"):
            f = parse_series(
                phi_request["series"],
                precision,
                base.precision,
                max_precision=max_precision(),
            )
        with reporting_errors("base"):
            return c.phi_apply(base, f)


@riordan_api.route("/genpow")
class GeneralizedPowerEndpoint(MethodView):
    @riordan_api.arguments(GeneralizedPowerRequestSchema)
    @riordan_api.response(200, RiordanPairSchema)
    @riordan_api.doc(
        operationId="generalizedPower",
        responses={422: specs.INVALID_EXPRESSION},
    )
    def post(self, genpow_request):
        """Raise an element of the Riordan group to a rational power."""

        precision = genpow_request.get("precision")
        ensure_precision_limits(precision)
        with reporting_errors("exponent"):
            lam = parse_rational(genpow_request["exponent"])
        if genpow_request["mode"] == "rtimes":
            ensure_exponent_limits(lam)
        with reporting_errors("pair"):
            return procedures.generalized_power(
                genpow_request["pair"],
                lam,
                genpow_request["mode"],
                precision,
                default_precision(),
                max_precision=max_precision(),
            )


@riordan_api.route("/matrix")
class MatrixEndpoint(MethodView):
    @riordan_api.arguments(MatrixRequestSchema)
    @riordan_api.response(200, RiordanMatrixSchema)
    @riordan_api.doc(
        operationId="matrix",
        responses={422: specs.INVALID_EXPRESSION},
    )
    def post(self, matrix_request):
        """Return the Riordan matrix of a pair."""

        size = matrix_request["size"]
        max_size = current_app.config["APP_MAX_MATRIX_SIZE"]
        if size > max_size:
            abort(
                422,
                errors={"json": {"size": [f"Must be at most {max_size}."]}},
            )
        precision = matrix_request.get("precision")
        ensure_precision_limits(precision)
        with reporting_errors("pair"):
            return procedures.matrix(
                matrix_request["pair"],
                size,
                precision,
                default_precision(),
                max_precision=max_precision(),
            )
