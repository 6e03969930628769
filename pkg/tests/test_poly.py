from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from polydeg.coeff import QQ, mod_ring, prime_field
from polydeg.errors import ArityMismatch, BudgetExceeded, ParseError
from polydeg.parse import format_polynomial, parse_gamma, parse_polynomial, parse_weight
from polydeg.poly import Polynomial, compose_tuples, identity_tuple


def test_product_examples(P):
    assert P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2")
    assert (P("x1 + 3*x2") * P("0", 2)).is_zero()
    Z4 = mod_ring(4)
    assert (P("2*x1", 1, Z4) * P("2*x1", 1, Z4)).is_zero()


def test_arity_and_ring_mismatch(P):
    with pytest.raises(ArityMismatch):
        P("x1", 1) + P("x1", 2)
    with pytest.raises(ArityMismatch):
        P("x1", 1) + P("x1", 1, prime_field(5))


def test_substitute_examples(P):
    assert P("x1^2", 1).substitute([P("x1 + x2")]) == P("x1^2 + 2*x1*x2 + x2^2")
    F = [P("x1 + x2^3"), P("x2 - 7")]
    assert P("x1", 2).substitute(F) == F[0]
    # an elementary map composed with its inverse
    assert P("x2 + x1^2").substitute([P("x2", 2), P("x1 - x2^2")]) == P("x1", 2)


def test_partials(P):
    assert P("x1^2*x2").partial(1) == P("2*x1*x2")
    assert P("x1", 2).partial(2).is_zero()
    assert P("x1^3", 1, prime_field(3)).partial(1).is_zero()


def test_nonzerodivisor_examples(P):
    assert P("x1 + 1").is_nonzerodivisor()
    assert not P("2*x1 + 2", 1, mod_ring(4)).is_nonzerodivisor()
    assert P("2*x1 + 3", 1, mod_ring(6)).is_nonzerodivisor()
    assert not P("0", 1).is_nonzerodivisor()


@pytest.mark.parametrize("m", [4, 6, 8, 9, 12])
def test_nonzerodivisor_matches_box_search(m):
    # oracle: f is a zero divisor iff some g of degree <= 1 kills it (McCoy: a constant suffices)
    R = mod_ring(m)
    for a, b in product(range(m), repeat=2):
        f = Polynomial(1, R, {(1,): a, (0,): b})
        if f.is_zero():
            continue
        killed = any(
            (f * Polynomial(1, R, {(1,): c, (0,): d})).is_zero()
            for c, d in product(range(m), repeat=2) if c or d
        )
        assert f.is_nonzerodivisor() is not killed


def test_budget():
    f = Polynomial.parse("x1 + x2 + x3 + 1")
    with pytest.raises(BudgetExceeded):
        f.pow(6, budget=20)


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x1 +* x2")
    assert exc.value.position == 4
    with pytest.raises(ParseError):
        parse_polynomial("x0")
    with pytest.raises(ParseError):
        parse_polynomial("x3", 2)
    with pytest.raises(ParseError):
        parse_polynomial("")


def test_parse_weights():
    assert parse_weight("1,2,3").entries == ((1,), (2,), (3,))
    assert parse_weight("[[0,1],[1,0]]").rank == 2
    assert parse_gamma("5") == (5,)


def test_rational_coefficients():
    f = parse_polynomial("1/2*x1 - 3/4")
    assert f.coeff((1,)) == Fraction(1, 2)
    assert f.constant_term() == Fraction(-3, 4)


def test_mod_coefficients_reduce():
    assert parse_polynomial("5*x1", 1, mod_ring(4)) == parse_polynomial("x1", 1, mod_ring(4))
    # 1/3 is 2 mod 5
    assert parse_polynomial("1/3", 1, prime_field(5)).constant_term() == 2


# properties

coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw, n=3, max_terms=4):
    terms = draw(st.dictionaries(monos, coeffs, max_size=max_terms))
    return Polynomial(n, QQ, terms)


@given(polys())
def test_format_parse_round_trip(f):
    assert parse_polynomial(format_polynomial(f), 3) == f


@given(polys(), polys(), st.integers(1, 3))
def test_leibniz(f, g, i):
    assert (f * g).partial(i) == f.partial(i) * g + f * g.partial(i)


@settings(max_examples=40)
@given(polys(max_terms=3), st.lists(polys(max_terms=2), min_size=3, max_size=3),
       st.lists(polys(max_terms=2), min_size=3, max_size=3))
def test_substitution_composes(f, F, G):
    FG = compose_tuples(G, F)
    assert f.substitute(FG) == f.substitute(F).substitute(G)


@given(polys(), polys())
def test_ring_laws(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert (f - f).is_zero()
    assert f.substitute(identity_tuple(3)) == f
