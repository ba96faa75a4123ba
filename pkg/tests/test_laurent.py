from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gradus.errors import NegativeExponent, ParseError, ZeroPolynomial
from gradus.laurent import (FieldScalar, LaurentScalar, as_field, bar, format_laurent,
                            lowest_degree, parse_field, parse_laurent, truncate_mod_v)

P = parse_laurent

laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentScalar)
points = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)])


def test_bar_examples():
    assert bar(P("v^3")) == P("v^-3")
    assert bar(P("1")) == P("1")
    assert bar(P("1 + v^2")) == P("v^-2") * P("1 + v^2")


def test_truncate_mod_v():
    assert truncate_mod_v(P("1 + v^2")) == (1, P("v^2"))
    assert truncate_mod_v(P("v^6")) == (0, P("v^6"))
    with pytest.raises(NegativeExponent):
        truncate_mod_v(P("v^-1 + v"))


def test_lowest_degree():
    assert lowest_degree(P("3v^4 + v^6")) == (4, 3)
    assert lowest_degree(P("1")) == (0, 1)
    assert lowest_degree(P("v^-2") * P("1 + v^2")) == (-2, 1)
    with pytest.raises(ZeroPolynomial):
        lowest_degree(LaurentScalar())


def test_membership_predicates():
    assert P("v + 2v^3").in_vZv()
    assert not P("1 + v").in_vZv()
    assert P("1 + v - v^4").in_one_plus_vZv()
    assert not P("v^-1 + v").is_polynomial()
    assert P("v^-1 + v").is_bar_invariant()


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_laurent("1 + w")


@given(laurents, laurents, points)
def test_ring_operations_agree_with_evaluation(f, g, x):
    assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)
    assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
    assert (f - g).evaluate(x) == f.evaluate(x) - g.evaluate(x)


@given(laurents, points)
def test_bar_is_substitution_of_inverse(f, x):
    assert bar(f).evaluate(x) == f.evaluate(1 / x)
    assert bar(bar(f)) == f


@given(laurents)
def test_format_parse_round_trip(f):
    assert parse_laurent(format_laurent(f)) == f


@given(laurents, laurents.filter(lambda h: not h.is_zero()), points)
def test_field_division(f, g, x):
    q = as_field(f) / as_field(g)
    if g.evaluate(x) != 0:
        assert q.evaluate(x) == f.evaluate(x) / g.evaluate(x)
    assert q * as_field(g) == as_field(f)


def test_field_normal_form():
    a = FieldScalar(P("1 - v^4"), P("1 - v^2"))
    assert a.is_laurent() and a.as_laurent() == P("1 + v^2")
    assert parse_field(str(a)) == a
    assert FieldScalar(LaurentScalar(1), P("v + v^-1")).is_bar_invariant()
