import logging
import json
import sys
import click
from functools import wraps
from fractions import Fraction
from typing import List, Optional, Union
from flask import current_app
from flask.cli import with_appcontext
from riordan_calculus import checks
from riordan_calculus import matrix as m
from riordan_calculus import procedures
from riordan_calculus.series import DomainError
from riordan_calculus.riordan import RiordanElement
from riordan_calculus.parsing import ParseError, parse_rational
from riordan_calculus.schemas import RiordanPairSchema

EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DOMAIN_ERROR = 3


def reporting_errors(f):
    """Translate parse and domain errors to exit codes."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        logger = logging.getLogger(__name__)
        try:
            return f(*args, **kwargs)
        except ParseError as e:
            logger.debug("Failed to parse %r.", e.text)
            click.echo(f"ParseError: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except DomainError as e:
            click.echo(f"{type(e).__name__}: {e}", err=True)
            sys.exit(EXIT_DOMAIN_ERROR)

    return wrapper


def precision_option(f):
    return click.option(
        "-p",
        "--precision",
        type=click.IntRange(min=2),
        help=(
            "The number of known coefficients N (the series are known"
            " modulo x^N). If not specified, the precision is taken from"
            " the order terms in the input, or from the value of the"
            " APP_DEFAULT_PRECISION environment variable (default 16)."
        ),
    )(f)


def format_option(*choices: str):
    def decorator(f):
        return click.option(
            "-f",
            "--format",
            "output_format",
            type=click.Choice(choices),
            help=(
                "The output format. If not specified, the value of the"
                " APP_OUTPUT_FORMAT environment variable is used, if it is"
                ' one of the allowed choices, and "text" otherwise.'
            ),
        )(f)

    return decorator


def _resolve_precision(precision: Optional[int]) -> Optional[int]:
    max_precision = current_app.config["APP_MAX_PRECISION"]
    if precision is not None and precision > max_precision:
        raise click.BadParameter(
            f"must be at most {max_precision}", param_hint="--precision"
        )
    return precision


def _default_precision() -> int:
    return current_app.config["APP_DEFAULT_PRECISION"]


def _max_precision() -> int:
    return current_app.config["APP_MAX_PRECISION"]


def _check_exponent(exponent: Union[int, Fraction], param_hint: str) -> None:
    max_exponent = current_app.config["APP_MAX_EXPONENT"]
    if abs(exponent) > max_exponent:
        raise click.BadParameter(
            f"must be between -{max_exponent} and {max_exponent}",
            param_hint=param_hint,
        )


def _resolve_format(output_format: Optional[str], choices: List[str]) -> str:
    output_format = output_format or current_app.config["APP_OUTPUT_FORMAT"]
    return output_format if output_format in choices else "text"


def _echo_pair(a: RiordanElement, output_format: Optional[str]) -> None:
    if _resolve_format(output_format, ["text", "json"]) == "json":
        click.echo(json.dumps(RiordanPairSchema().dump(a)))
    else:
        click.echo(str(a))


@click.group("riordan")
def riordan():
    """Compute with truncated power series and Riordan pairs."""


@riordan.command("eval")
@with_appcontext
@precision_option
@click.argument("expr")
@reporting_errors
def evaluate(expr, precision):
    """Print the series EXPR in canonical form."""

    logger = logging.getLogger(__name__)
    logger.debug("Evaluating %r.", expr)
    f = procedures.evaluate(
        expr,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    click.echo(str(f))


@riordan.command("rtimes")
@with_appcontext
@precision_option
@format_option("text", "json")
@click.argument("left")
@click.argument("right")
@reporting_errors
def rtimes(left, right, precision, output_format):
    """Print the ⋊-product of the pairs LEFT and RIGHT."""

    logger = logging.getLogger(__name__)
    logger.debug("Multiplying %r by %r.", left, right)
    a = procedures.rtimes(
        left,
        right,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    _echo_pair(a, output_format)


@riordan.command("power")
@with_appcontext
@precision_option
@format_option("text", "json")
@click.argument("pair")
@click.argument("n", type=int)
@reporting_errors
def power(pair, n, precision, output_format):
    """Print the N-th ⋊-power of PAIR.

    Negative powers are defined for elements of the Riordan group only.
    """

    logger = logging.getLogger(__name__)
    logger.debug("Raising %r to the power %i.", pair, n)
    _check_exponent(n, "'N'")
    a = procedures.power(
        pair,
        n,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    _echo_pair(a, output_format)


@riordan.command("phi")
@with_appcontext
@precision_option
@format_option("text", "json")
@click.argument("base")
@click.argument("series")
@reporting_errors
def phi(base, series, precision, output_format):
    """Apply the power series SERIES to the pair BASE.

    BASE must have a first series with a zero constant term, and a
    second series of valuation at least 2.
    """

    logger = logging.getLogger(__name__)
    logger.debug("Applying %r to %r.", series, base)
    a = procedures.phi(
        base,
        series,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    _echo_pair(a, output_format)


@riordan.command("star")
@with_appcontext
@precision_option
@click.option(
    "-e",
    "--exponent",
    type=str,
    help='The exponent of the "power" operation, like "2" or "-1/2".',
)
@click.option(
    "--realize",
    is_flag=True,
    default=False,
    help="Print the resulting pair instead of its coefficients.",
)
@click.argument(
    "operation", type=click.Choice(list(procedures.STAR_OPERATIONS))
)
@click.argument("base")
@click.argument("series", nargs=-1, required=True)
@reporting_errors
def star(operation, base, series, precision, exponent, realize):
    """Run OPERATION in the Cauchy algebra over BASE.

    Every SERIES stands for the sum of its coefficients f_n times the
    n-th ⋊-power of BASE.
    """

    logger = logging.getLogger(__name__)
    if operation == "power" and exponent is None:
        raise click.UsageError('"power" needs an --exponent.')

    logger.debug("Running star %s over %r.", operation, base)
    e = procedures.star(
        operation,
        base,
        list(series),
        parse_rational(exponent) if exponent is not None else None,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    click.echo(str(e.realize()) if realize else str(e))


@riordan.command("genpow")
@with_appcontext
@precision_option
@format_option("text", "json")
@click.option(
    "-m",
    "--mode",
    type=click.Choice(procedures.GENPOW_MODES),
    default="star",
    show_default=True,
    help="How the power is computed.",
)
@click.argument("pair")
@click.argument("exponent")
@reporting_errors
def genpow(pair, exponent, precision, output_format, mode):
    """Raise PAIR, an element of the Riordan group, to a rational
    EXPONENT.

    The "star" and "binomial" modes agree, and for integer exponents
    differ in general from the "rtimes" mode.
    """

    logger = logging.getLogger(__name__)
    logger.debug("Raising %r to the power %s (%s).", pair, exponent, mode)
    lam = parse_rational(exponent)
    if mode == "rtimes":
        _check_exponent(lam, "'EXPONENT'")
    a = procedures.generalized_power(
        pair,
        lam,
        mode,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    _echo_pair(a, output_format)


@riordan.command("matrix")
@with_appcontext
@precision_option
@format_option("text", "csv", "json")
@click.argument("pair")
@click.argument("size", type=click.IntRange(min=1))
@reporting_errors
def matrix(pair, size, precision, output_format):
    """Print the SIZE x SIZE Riordan matrix of PAIR.

    Column j has the generating function mu * sigma^j.
    """

    logger = logging.getLogger(__name__)
    max_size = current_app.config["APP_MAX_MATRIX_SIZE"]
    if size > max_size:
        raise click.BadParameter(f"must be at most {max_size}")

    logger.debug("Building the %ix%i matrix of %r.", size, size, pair)
    rm = procedures.matrix(
        pair,
        size,
        _resolve_precision(precision),
        _default_precision(),
        max_precision=_max_precision(),
    )
    output_format = _resolve_format(output_format, ["text", "csv", "json"])
    if output_format == "csv":
        click.echo(m.to_csv(rm), nl=False)
    elif output_format == "json":
        click.echo(m.to_json(rm))
    else:
        click.echo(str(rm))


@riordan.command("check")
@with_appcontext
@click.option(
    "-s",
    "--seed",
    type=int,
    help=(
        "The seed of the random inputs. If not specified, the value of"
        " the APP_DEFAULT_SEED environment variable is used (default 0)."
    ),
)
@click.option(
    "-t",
    "--trials",
    type=click.IntRange(min=1),
    help=(
        "The number of random trials in each suite. If not specified, the"
        " value of the APP_DEFAULT_TRIALS environment variable is used"
        " (default 200)."
    ),
)
@click.argument(
    "suite", type=click.Choice(["all"] + list(checks.SUITES)), default="all"
)
def check(suite, seed, trials):
    """Run the property suite SUITE (default "all").

    Exits with status 1 if some property is violated, printing the
    smallest violating input found.
    """

    logger = logging.getLogger(__name__)
    if seed is None:
        seed = current_app.config["APP_DEFAULT_SEED"]
    trials = trials or current_app.config["APP_DEFAULT_TRIALS"]
    logger.info(
        "Started checking %s (seed=%i, trials=%i).", suite, seed, trials
    )

    reports = checks.run_suites(suite, seed, trials)
    for report in reports:
        click.echo(str(report))
    if not all(report.ok for report in reports):
        sys.exit(EXIT_VIOLATION)


def main():  # pragma: no cover
    """The `riordan` console script."""

    from riordan_calculus import create_app

    app = create_app()
    with app.app_context():
        riordan(prog_name="riordan")
