from marshmallow import (
    Schema,
    fields,
    validate,
    validates,
    ValidationError,
)
from riordan_calculus.series import format_series

TYPE_DESCRIPTION = (
    "The type of this object. Will always be present in the responses from the"
    " server."
)

PAIR_DESCRIPTION = (
    'A pair of power series, written like `"(1 + x ; x + x^2)"`. The second'
    " series must have a zero constant term."
)

PRECISION_DESCRIPTION = (
    "The number of known coefficients N, the series being known modulo x^N."
    " When omitted, the precision is taken from the order terms"
    ' (like `"+ O(x^8)"`) in the input, or from the server\'s default.'
)

RATIONAL_PATTERN = r"^\s*[+-]?\s*[0-9]+(\s*/\s*[0-9]+)?\s*$"

TEXT_MAX_LENGTH = 10000
MAX_INT32 = (1 << 31) - 1


class ValidateTypeMixin:
    @validates("type")
    def validate_type(self, value):
        if f"{value}Schema" != type(self).__name__:
            raise ValidationError("Invalid type.")


def _pair_field(description: str = PAIR_DESCRIPTION, **kwargs):
    return fields.String(
        required=True,
        validate=validate.Length(max=TEXT_MAX_LENGTH),
        metadata=dict(description=description, example="(1 + x ; x + x^2)"),
        **kwargs,
    )


class PrecisionMixin:
    precision = fields.Integer(
        validate=validate.Range(min=2),
        metadata=dict(
            format="int32",
            description=PRECISION_DESCRIPTION,
            example=5,
        ),
    )


class RtimesRequestSchema(ValidateTypeMixin, PrecisionMixin, Schema):
    type = fields.String(
        load_default="RtimesRequest",
        load_only=True,
        metadata=dict(description=TYPE_DESCRIPTION, example="RtimesRequest"),
    )
    left = _pair_field("The left factor of the product.")
    right = _pair_field("The right factor of the product.")


class PowerRequestSchema(ValidateTypeMixin, PrecisionMixin, Schema):
    type = fields.String(
        load_default="PowerRequest",
        load_only=True,
        metadata=dict(description=TYPE_DESCRIPTION, example="PowerRequest"),
    )
    pair = _pair_field()
    exponent = fields.Integer(
        required=True,
        validate=validate.Range(min=-MAX_INT32, max=MAX_INT32),
        metadata=dict(
            format="int32",
            description=(
                "The exponent. Negative exponents are allowed only for"
                " elements of the Riordan group."
            ),
            example=2,
        ),
    )


class PhiRequestSchema(ValidateTypeMixin, PrecisionMixin, Schema):
    type = fields.String(
        load_default="PhiRequest",
        load_only=True,
        metadata=dict(description=TYPE_DESCRIPTION, example="PhiRequest"),
    )
    base = _pair_field(
        "A pair whose first series has a zero constant term, and whose"
        " second series starts at x^2 or later.",
    )
    series = fields.String(
        required=True,
        validate=validate.Length(max=TEXT_MAX_LENGTH),
        metadata=dict(
            description="The power series to apply to the base.",
            example="1 + 2*x + x^2",
        ),
    )


class GeneralizedPowerRequestSchema(
    ValidateTypeMixin, PrecisionMixin, Schema
):
    type = fields.String(
        load_default="GeneralizedPowerRequest",
        load_only=True,
        metadata=dict(
            description=TYPE_DESCRIPTION,
            example="GeneralizedPowerRequest",
        ),
    )
    pair = _pair_field(
        "An element of the Riordan group: the first series starts with 1,"
        " and the second one with x."
    )
    exponent = fields.String(
        required=True,
        validate=validate.Regexp(RATIONAL_PATTERN),
        metadata=dict(
            description='A rational exponent, like `"2"` or `"-1/2"`.',
            example="1/2",
        ),
    )
    mode = fields.String(
        load_default="star",
        validate=validate.OneOf(["star", "binomial", "rtimes"]),
        metadata=dict(
            description=(
                "`star` and `binomial` sum the binomial series, in the Cauchy"
                " algebra or over ⋊-powers. `rtimes` computes the usual"
                " ⋊-power, for integer exponents only."
            ),
            example="star",
        ),
    )


class MatrixRequestSchema(ValidateTypeMixin, PrecisionMixin, Schema):
    type = fields.String(
        load_default="MatrixRequest",
        load_only=True,
        metadata=dict(description=TYPE_DESCRIPTION, example="MatrixRequest"),
    )
    pair = _pair_field()
    size = fields.Integer(
        required=True,
        validate=validate.Range(min=1),
        metadata=dict(
            format="int32",
            description="The number of rows and columns.",
            example=4,
        ),
    )


class RiordanPairSchema(Schema):
    type = fields.Function(
        lambda obj: "RiordanPair",
        required=True,
        metadata=dict(
            type="string",
            description=TYPE_DESCRIPTION,
            example="RiordanPair",
        ),
    )
    precision = fields.Integer(
        required=True,
        dump_only=True,
        metadata=dict(
            format="int32",
            description="The number of known coefficients.",
            example=5,
        ),
    )
    mu = fields.Function(
        lambda obj: format_series(obj.mu),
        required=True,
        metadata=dict(
            type="string",
            description="The first series.",
            example="1 + 2*x + x^3 + O(x^5)",
        ),
    )
    sigma = fields.Function(
        lambda obj: format_series(obj.sigma),
        required=True,
        metadata=dict(
            type="string",
            description="The second series.",
            example="x + 2*x^2 + x^4 + O(x^5)",
        ),
    )
    text = fields.Function(
        lambda obj: str(obj),
        required=True,
        metadata=dict(
            type="string",
            description="The pair, in the same notation as the input.",
            example="(1 + 2*x + x^3 ; x + 2*x^2 + x^4)",
        ),
    )


class RiordanMatrixSchema(Schema):
    n = fields.Integer(
        attribute="size",
        required=True,
        dump_only=True,
        metadata=dict(format="int32", description="The matrix size."),
    )
    mu = fields.Method(
        "get_mu",
        required=True,
        metadata=dict(
            type="string",
            description="The generating function of the first column.",
        ),
    )
    sigma = fields.Method(
        "get_sigma",
        required=True,
        metadata=dict(
            type="string",
            description="The second series of the pair.",
        ),
    )
    rows = fields.Function(
        lambda obj: [[str(c) for c in row] for row in obj.rows],
        required=True,
        metadata=dict(
            type="array",
            items={"type": "array", "items": {"type": "string"}},
            description='The entries, as exact rationals like `"-3/4"`.',
        ),
    )

    def get_mu(self, obj):
        return None if obj.source is None else format_series(obj.source.mu)

    def get_sigma(self, obj):
        return (
            None if obj.source is None else format_series(obj.source.sigma)
        )
