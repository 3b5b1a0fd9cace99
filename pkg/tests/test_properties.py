from fractions import Fraction
from hypothesis import given, settings, strategies as st
from riordan_calculus import series as s
from riordan_calculus import riordan as r
from riordan_calculus import calculus as c
from riordan_calculus import matrix as m
from riordan_calculus.series import Series
from riordan_calculus.riordan import RiordanElement
from riordan_calculus.parsing import parse_series, parse_pair

N = 6

coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def series(valuation: int = 0, constant=None):
    def build(cs):
        cs = [Fraction(0)] * valuation + cs
        if constant is not None:
            cs[0] = constant
        return Series(cs, N)

    return st.lists(
        coefficients, min_size=N - valuation, max_size=N - valuation
    ).map(build)


pairs = st.builds(RiordanElement, series(), series(1))
group_elements = st.builds(
    lambda mu, sigma: RiordanElement(mu, sigma + s.x(N)),
    series(constant=Fraction(1)),
    series(2),
)
ideal_elements = st.builds(RiordanElement, series(1), series(2))
any_valuation = st.integers(min_value=0, max_value=N).flatmap(series)


@settings(max_examples=30, deadline=None)
@given(f=series(), g=series(), sigma=series(1))
def test_substitution_is_a_ring_homomorphism(f, g, sigma):
    assert s.substitute(f + g, sigma) == s.substitute(
        f, sigma
    ) + s.substitute(g, sigma)
    assert s.substitute(f * g, sigma) == s.substitute(
        f, sigma
    ) * s.substitute(g, sigma)


@settings(max_examples=30, deadline=None)
@given(f=series(), sigma=series(1), tau=series(1))
def test_substitution_is_associative(f, sigma, tau):
    assert s.substitute(s.substitute(f, sigma), tau) == s.substitute(
        f, s.substitute(sigma, tau)
    )


@settings(max_examples=30, deadline=None)
@given(sigma=series(1), n=st.integers(min_value=0, max_value=7))
def test_comp_power_iterates_substitution(sigma, n):
    iterated = s.x(N)
    for _ in range(n):
        iterated = s.substitute(iterated, sigma)
    assert s.comp_power(sigma, n) == iterated


@settings(max_examples=50, deadline=None)
@given(f=any_valuation, g=any_valuation)
def test_valuation_of_a_sum(f, g):
    vf, vg = s.valuation(f).value, s.valuation(g).value
    v = s.valuation(f + g).value
    assert v >= min(vf, vg)
    if vf != vg:
        assert v == min(vf, vg)


@settings(max_examples=30, deadline=None)
@given(g=group_elements)
def test_group_inverse_is_an_involution(g):
    assert r.group_inverse(r.group_inverse(g)) == g



@settings(max_examples=30, deadline=None)
@given(a=pairs, b=pairs, d=pairs)
def test_rtimes_is_associative(a, b, d):
    assert r.rtimes(r.rtimes(a, b), d) == r.rtimes(a, r.rtimes(b, d))


@settings(max_examples=30, deadline=None)
@given(a=pairs, b=pairs, d=pairs)
def test_rtimes_distributes_from_the_right(a, b, d):
    assert r.rtimes(a + b, d) == r.rtimes(a, d) + r.rtimes(b, d)


@settings(max_examples=30, deadline=None)
@given(a=pairs, n=st.integers(min_value=0, max_value=5))
def test_closed_form_power(a, n):
    iterated = r.identity(N)
    for _ in range(n):
        iterated = r.rtimes(iterated, a)
    assert r.rtimes_power(a, n) == iterated


@settings(max_examples=30, deadline=None)
@given(g=group_elements, h=group_elements)
def test_group_inverse(g, h):
    inverse = r.group_inverse(g)
    assert r.rtimes(g, inverse) == r.identity(N)
    assert r.group_inverse(r.rtimes(g, h)) == r.rtimes(
        r.group_inverse(h), inverse
    )


@settings(max_examples=30, deadline=None)
@given(base=ideal_elements, f=series(), g=series())
def test_phi_is_linear(base, f, g):
    phi = c.PhiMap(base)
    assert phi(f + g) == phi(f) + phi(g)
    assert phi.power(phi.bound).is_zero()


@settings(max_examples=30, deadline=None)
@given(g=group_elements, lam=coefficients)
def test_binomial_powers_stay_in_the_group(g, lam):
    assert r.is_group(c.rtimes_binomial_power(g, lam))


@settings(max_examples=30, deadline=None)
@given(a=group_elements, b=group_elements)
def test_matrix_product_reverses_rtimes(a, b):
    assert m.to_matrix(a, N) @ m.to_matrix(b, N) == m.to_matrix(
        r.rtimes(b, a), N
    )


@settings(max_examples=50, deadline=None)
@given(f=series(), a=pairs)
def test_text_round_trip(f, a):
    assert parse_series(s.format_series(f)) == f
    assert parse_pair(r.format_pair(a), N) == a
