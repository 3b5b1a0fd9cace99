"""Randomized property suites behind `riordan check`.

Every suite draws its inputs from a `random.Random` instance seeded by
the caller, so that a run can be reproduced exactly. For every property
that fails, the report keeps the failing input with the shortest text
rendering.
"""

from __future__ import annotations
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional
from riordan_calculus import series as s
from riordan_calculus import riordan as r
from riordan_calculus import calculus as c
from riordan_calculus import cauchy as k
from riordan_calculus import matrix as m
from riordan_calculus import parsing
from riordan_calculus.series import Series
from riordan_calculus.riordan import RiordanElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    property: str
    counterexample: str

    def __str__(self) -> str:
        return f"{self.property}: {self.counterexample}"


@dataclass
class SuiteReport:
    name: str
    seed: int
    trials: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        outcome = "ok" if self.ok else f"{len(self.violations)} violated"
        lines = [
            f"{self.name}: {outcome}"
            f" (seed={self.seed}, trials={self.trials})"
        ]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


class _Recorder:
    def __init__(self):
        self.smallest: Dict[str, str] = {}

    def expect(self, name: str, holds: bool, *inputs) -> None:
        if holds:
            return
        text = ", ".join(str(x) for x in inputs)
        known = self.smallest.get(name)
        if known is None or len(text) < len(known):
            self.smallest[name] = text

    def violations(self) -> List[Violation]:
        return [Violation(p, t) for p, t in self.smallest.items()]


Suite = Callable[[random.Random, int, _Recorder], None]
SUITES: Dict[str, Suite] = {}


def suite(name: str) -> Callable[[Suite], Suite]:
    def decorator(fn: Suite) -> Suite:
        SUITES[name] = fn
        return fn

    return decorator


def random_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 1, 2, 3]))
        if q or not nonzero:
            return q


def random_series(
    rng: random.Random,
    precision: int,
    valuation: int = 0,
    constant: Optional[Fraction] = None,
) -> Series:
    coeffs = [Fraction(0)] * precision
    for i in range(valuation, precision):
        if rng.random() < 0.7:
            coeffs[i] = random_fraction(rng)
    if constant is not None:
        coeffs[0] = constant
    return Series(coeffs, precision)


def random_pair(rng: random.Random, precision: int) -> RiordanElement:
    return RiordanElement(
        random_series(rng, precision), random_series(rng, precision, 1)
    )


def random_group_element(
    rng: random.Random, precision: int
) -> RiordanElement:
    sigma = random_series(rng, precision, 1)
    sigma = s.add(
        s.sub(sigma, s.monomial(sigma.coeffs[1], 1, precision)),
        s.x(precision),
    )
    return RiordanElement(
        random_series(rng, precision, constant=Fraction(1)), sigma
    )


def random_ideal_element(
    rng: random.Random, precision: int
) -> RiordanElement:
    return RiordanElement(
        random_series(rng, precision, rng.randint(1, 2)),
        random_series(rng, precision, rng.randint(2, 3)),
    )


@suite("counterexample")
def check_counterexample(rng: random.Random, trials: int, rec: _Recorder):
    for n in (5, 8):
        rec.expect(
            "binomial power differs from ⋊-power",
            c.counterexample_check(n),
            n,
        )
    rec.expect(
        "no counterexample at exponent 1",
        not c.counterexample_check(5, exponent=1),
        1,
    )


@suite("valuation")
def check_valuation(rng: random.Random, trials: int, rec: _Recorder):
    n = 16
    for _ in range(trials):
        f = random_series(rng, n, rng.randint(0, n))
        g = random_series(rng, n, rng.randint(0, n))
        sigma = random_series(rng, n, rng.randint(1, n))
        expected = (s.valuation(f) + s.valuation(g)).saturate(n)
        rec.expect(
            "v(fg) = v(f) + v(g)", s.valuation(s.mul(f, g)) == expected, f, g
        )
        vf, vg = s.valuation(f).value, s.valuation(g).value
        v = s.valuation(s.add(f, g)).value
        rec.expect(
            "v(f+g) >= min(v(f), v(g)), with equality if they differ",
            v >= min(vf, vg) and (vf == vg or v == min(vf, vg)),
            f,
            g,
        )

        expected = (s.valuation(f) * s.valuation(sigma)).saturate(n)
        rec.expect(
            "v(f∘σ) = v(f) v(σ)",
            s.valuation(s.substitute(f, sigma)) == expected,
            f,
            sigma,
        )


@suite("near-algebra")
def check_near_algebra(rng: random.Random, trials: int, rec: _Recorder):
    n = 12
    zero = r.zero(n)
    for _ in range(trials):
        a, b, d = (random_pair(rng, n) for _ in range(3))
        rec.expect(
            "associativity",
            r.rtimes(r.rtimes(a, b), d) == r.rtimes(a, r.rtimes(b, d)),
            a,
            b,
            d,
        )
        rec.expect(
            "right distributivity",
            r.rtimes(r.add(a, b), d)
            == r.add(r.rtimes(a, d), r.rtimes(b, d)),
            a,
            b,
            d,
        )
        rec.expect(
            "(0,0) is a two-sided zero",
            r.rtimes(zero, a) == zero and r.rtimes(a, zero) == zero,
            a,
        )
        mu_only = RiordanElement(a.mu, s.zero(n))
        sigma_only = RiordanElement(s.zero(n), a.sigma)
        rec.expect(
            "(μ,0)⋊(0,σ) = (0,0)",
            r.rtimes(mu_only, sigma_only) == zero,
            mu_only,
            sigma_only,
        )

    a, b, d = r.left_distributivity_witness(n)
    rec.expect(
        "left distributivity fails on the witness",
        r.rtimes(a, r.add(b, d)) != r.add(r.rtimes(a, b), r.rtimes(a, d)),
        a,
        b,
        d,
    )


@suite("powers")
def check_powers(rng: random.Random, trials: int, rec: _Recorder):
    n = 12
    for _ in range(trials):
        a = random_pair(rng, n)
        mu_only = RiordanElement(a.mu, s.zero(n))
        sigma_only = RiordanElement(s.zero(n), a.sigma)
        closed = zip(
            r.closed_form_powers(a),
            r.closed_form_powers(mu_only),
            r.closed_form_powers(sigma_only),
        )
        iterated = r.identity(n)
        sigma_iterate = s.x(n)
        for e, (power, mu_power, sigma_power) in zip(range(1, 7), closed):
            iterated = r.rtimes(iterated, a)
            sigma_iterate = s.substitute(sigma_iterate, a.sigma)
            rec.expect(
                "closed form equals iterated ⋊", power == iterated, a, e
            )
            mu0 = a.mu.coeffs[0] ** (e - 1)
            rec.expect(
                "(μ,0)^n = (μ μ(0)^(n-1), 0)",
                mu_power
                == RiordanElement(s.scale(mu0, a.mu), s.zero(n)),
                mu_only,
                e,
            )
            rec.expect(
                "(0,σ)^n = (0, σ^(∘n))",
                sigma_power == RiordanElement(s.zero(n), sigma_iterate),
                sigma_only,
                e,
            )
        rec.expect(
            "rtimes_power agrees with the closed form",
            r.rtimes_power(a, 6) == power,
            a,
        )


@suite("phi")
def check_phi(rng: random.Random, trials: int, rec: _Recorder):
    n = 12
    for _ in range(trials):
        base = random_ideal_element(rng, n)
        phi = c.PhiMap(base)
        f, g = random_series(rng, n), random_series(rng, n)
        alpha, beta = random_fraction(rng), random_fraction(rng)

        lhs = phi(s.add(s.scale(alpha, f), s.scale(beta, g)))
        rhs = r.add(r.scale(alpha, phi(f)), r.scale(beta, phi(g)))
        rec.expect("linearity", lhs == rhs, base, f, g, alpha, beta)

        for e in range(5):
            rec.expect(
                "Φ(x^m g) = Φ(g)⋊base^m",
                phi(s.shift(g, e)) == r.rtimes(phi(g), phi.power(e)),
                base,
                g,
                e,
            )

        rec.expect(
            "f in M gives an ideal element",
            r.is_ideal(phi(random_series(rng, n, 1))),
            base,
        )
        unipotent = random_series(rng, n, constant=Fraction(1))
        rec.expect(
            "<f,1> = 1 gives a group element",
            r.is_group(phi(unipotent)),
            base,
            unipotent,
        )

        powers = [r.identity(n)]
        for _ in range(n + 2):
            powers.append(r.rtimes(powers[-1], base))
        rec.expect(
            "powers vanish from the term bound on",
            all(p.is_zero() for p in powers[phi.bound:]),
            base,
        )
        full_sum = r.zero(n)
        for fe, p in zip(f.coeffs, powers):
            full_sum = r.add(full_sum, r.scale(fe, p))
        rec.expect(
            "terms beyond the bound are zero", phi(f) == full_sum, base, f
        )

        if not f.is_zero():
            v = s.valuation(f).value
            if not phi.power(v).is_zero():
                rec.expect("Φ is one-to-one", not phi(f).is_zero(), base, f)


@suite("cauchy")
def check_cauchy(rng: random.Random, trials: int, rec: _Recorder):
    n = 10
    for _ in range(trials):
        phi = c.PhiMap(random_ideal_element(rng, n))
        a, b, d = (
            k.from_series(phi, random_series(rng, n)) for _ in range(3)
        )
        rec.expect("commutativity", a * b == b * a, a, b)
        rec.expect("associativity", (a * b) * d == a * (b * d), a, b, d)
        rec.expect("distributivity", a * (b + d) == a * b + a * d, a, b, d)

        e1, e2 = rng.randint(0, 5), rng.randint(0, 4)
        rec.expect(
            "δ(d) * δ(e) realizes to base^(d+e)",
            (k.delta(phi, e1) * k.delta(phi, e2)).realize()
            == r.rtimes_power(phi.base, e1 + e2),
            phi.base,
            e1,
            e2,
        )

        u = k.from_series(phi, random_series(rng, n, 1))
        one_plus_u = k.unit(phi) + u
        rec.expect(
            "star inverse",
            one_plus_u * k.star_inverse(one_plus_u) == k.unit(phi),
            one_plus_u,
        )
        rec.expect(
            "log(exp(u)) = u", k.star_log(k.star_exp(u)) == u, u
        )
        rec.expect(
            "exp(-u) is the inverse of exp(u)",
            k.star_exp(u) * k.star_exp(-u) == k.unit(phi),
            u,
        )

        lam = random_fraction(rng)
        lhs = k.star_exp(k.star_scale(lam, k.star_log(one_plus_u)))
        rec.expect(
            "exp(λ log(1+u)) = (1+u)^λ",
            lhs == k.star_generalized_power(one_plus_u, lam),
            one_plus_u,
            lam,
        )
        beta = random_fraction(rng)
        rec.expect(
            "one-parameter subgroup",
            k.one_parameter_check(one_plus_u, lam, beta),
            one_plus_u,
            lam,
            beta,
        )
        for e in range(6):
            rec.expect(
                "integer generalized powers are star powers",
                k.star_generalized_power(one_plus_u, e)
                == k.star_power(one_plus_u, e),
                one_plus_u,
                e,
            )


@suite("matrix")
def check_matrix(rng: random.Random, trials: int, rec: _Recorder):
    n = 8
    one = s.one(n)
    geometric = s.mul_inverse(s.sub(one, s.x(n)))
    pascal = m.to_matrix(
        RiordanElement(geometric, s.mul(s.x(n), geometric)), n
    )
    rec.expect(
        "Pascal's triangle",
        all(pascal[i, j] == comb(i, j) for i in range(n) for j in range(n)),
        pascal.source,
    )

    for _ in range(trials):
        a, b = random_group_element(rng, n), random_group_element(rng, n)
        ma = m.to_matrix(a, n)
        rec.expect(
            "column j has the generating function μσ^j",
            all(
                m.column_series(ma, j)
                == s.mul(a.mu, s.mul_power(a.sigma, j))
                for j in range(n)
            ),
            a,
        )
        rec.expect(
            "group elements give unitriangular matrices",
            m.is_lower_unitriangular(ma),
            a,
        )
        rec.expect(
            "matrix product follows the frozen ⋊ order",
            m.rtimes_matrix_check(a, b, n),
            a,
            b,
        )
        rec.expect(
            "exponential generating function",
            m.egf_identity_check(a.truncate(6), 6),
            a,
        )


@suite("group")
def check_group(rng: random.Random, trials: int, rec: _Recorder):
    n = 12
    unit = r.identity(n)
    for _ in range(trials):
        a, b = random_group_element(rng, n), random_group_element(rng, n)
        inverse = r.group_inverse(a)
        rec.expect(
            "a⋊a⁻¹ = a⁻¹⋊a = (1,x)",
            r.rtimes(a, inverse) == unit and r.rtimes(inverse, a) == unit,
            a,
        )
        rec.expect("closed under ⋊", r.is_group(r.rtimes(a, b)), a, b)
        rec.expect("closed under inversion", r.is_group(inverse), a)

        lam = random_fraction(rng)
        rec.expect(
            "closed under binomial powers",
            r.is_group(c.rtimes_binomial_power(a, lam)),
            a,
            lam,
        )
        phi = c.PhiMap(r.centered_part(a))
        one_plus_p = k.unit(phi) + k.generator(phi)
        power = k.star_generalized_power(one_plus_p, lam)
        rec.expect(
            "closed under star generalized powers",
            r.is_group(power.realize()),
            one_plus_p,
            lam,
        )


@suite("truncation")
def check_truncation(rng: random.Random, trials: int, rec: _Recorder):
    hi, lo = 16, 8

    def stable(name: str, op: Callable, *args) -> None:
        low_args = [x.truncate(lo) for x in args]
        rec.expect(
            name, op(*args).truncate(lo) == op(*low_args), *low_args
        )

    for _ in range(trials):
        f = random_series(rng, hi)
        g = random_series(rng, hi)
        u = random_series(rng, hi, 1)
        unipotent = random_series(rng, hi, constant=Fraction(1))
        sigma = s.add(random_series(rng, hi, 2), s.x(hi))
        a, b = random_pair(rng, hi), random_pair(rng, hi)
        group = random_group_element(rng, hi)
        base = random_ideal_element(rng, hi)

        stable("mul", s.mul, f, g)
        stable("substitute", s.substitute, f, u)
        stable("mul_inverse", s.mul_inverse, unipotent)
        stable("comp_inverse", s.comp_inverse, sigma)
        stable("comp_power", lambda x: s.comp_power(x, 3), u)
        stable("exp_series", s.exp_series, u)
        stable("log_series", s.log_series, unipotent)
        stable("rtimes", r.rtimes, a, b)
        stable("rtimes_power", lambda x: r.rtimes_power(x, 3), a)
        stable("group_inverse", r.group_inverse, group)
        stable("phi_apply", c.phi_apply, base, f)
        stable("rtimes_exp", c.rtimes_exp, base)
        stable(
            "star_inverse",
            lambda x, y: k.star_inverse(k.from_series(x, y)).realize(),
            base,
            unipotent,
        )
        stable(
            "star_exp",
            lambda x, y: k.star_exp(k.from_series(x, y)).realize(),
            base,
            u,
        )
        stable(
            "star_log",
            lambda x, y: k.star_log(k.from_series(x, y)).realize(),
            base,
            unipotent,
        )
        stable(
            "rtimes_binomial_power",
            lambda x: c.rtimes_binomial_power(x, Fraction(1, 2)),
            group,
        )
        stable(
            "star_generalized_power",
            lambda x, y: k.star_generalized_power(
                k.from_series(x, y), Fraction(-1, 3)
            ).realize(),
            base,
            unipotent,
        )
        rec.expect(
            "to_matrix",
            m.to_matrix(group, lo) == m.to_matrix(group.truncate(lo), lo),
            group.truncate(lo),
        )
        rec.expect(
            "egf_coefficients",
            m.egf_coefficients(group, lo)
            == m.egf_coefficients(group.truncate(lo), lo),
            group.truncate(lo),
        )


@suite("roundtrip")
def check_roundtrip(rng: random.Random, trials: int, rec: _Recorder):
    for _ in range(trials):
        n = rng.randint(2, 12)
        f = random_series(rng, n)
        rec.expect(
            "series text round trip",
            parsing.parse_series(s.format_series(f)) == f,
            f,
        )
        a = random_pair(rng, n)
        rec.expect(
            "pair text round trip",
            parsing.parse_pair(r.format_pair(a), precision=n) == a,
            a,
        )


def run_suite(name: str, seed: int, trials: int) -> SuiteReport:
    rec = _Recorder()
    SUITES[name](random.Random(seed), trials, rec)
    report = SuiteReport(name, seed, trials, rec.violations())
    logger.info(
        "suite %s finished (seed=%d, trials=%d): %s",
        name,
        seed,
        trials,
        "ok" if report.ok else "violated",
    )
    for v in report.violations:
        logger.warning("suite %s: %s", name, v)
    return report


def run_suites(name: str, seed: int, trials: int) -> List[SuiteReport]:
    """Run the named suite, or all suites when the name is "all"."""

    if name != "all" and name not in SUITES:
        raise KeyError(name)
    names = list(SUITES) if name == "all" else [name]
    return [run_suite(n, seed, trials) for n in names]
