import pytest
from hypothesis import given, strategies as st

from tanglekit.laurent import (CIRCLE, LaurentParseError, LaurentPoly,
                               format_laurent, parse_laurent)


def poly(d):
    return LaurentPoly(d)


laurents = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9),
                           max_size=5).map(LaurentPoly)


def test_addition_examples():
    assert poly({1: 1, 0: 1}) + poly({0: -1}) == poly({1: 1})
    p = poly({3: 2, -1: 5})
    assert p + LaurentPoly.zero() == p
    assert poly({-1: 1}) + poly({1: 1}) == poly({-1: 1, 1: 1})


def test_multiplication_examples():
    assert poly({1: 1}) * poly({-1: 1}) == LaurentPoly.one()
    assert poly({1: 1, -1: 1}) ** 2 == poly({2: 1, 0: 2, -2: 1})
    assert poly({5: 3}) * LaurentPoly.zero() == LaurentPoly.zero()


def test_bar_examples():
    assert poly({2: 1}).bar() == poly({-2: 1})
    palindrome = poly({1: 1, -1: 1})
    assert palindrome.bar() == palindrome


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurents, laurents)
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(laurents)
def test_text_round_trip(p):
    assert parse_laurent(format_laurent(p)) == p


def test_format_grammar():
    assert format_laurent(LaurentPoly.zero()) == "0"
    assert format_laurent(CIRCLE) == "-q^-1 - q"
    assert format_laurent(poly({-2: -1, 0: 3, 3: -1})) == "-q^-2 + 3 - q^3"
    assert format_laurent(poly({2: 3})) == "3*q^2"
    assert format_laurent(poly({1: 1, -1: 1})) == "q^-1 + q"


def test_parse_rejects_junk():
    for bad in ("", "q^", "3*", "1 +", "q**2", "* q"):
        with pytest.raises(LaurentParseError):
            parse_laurent(bad)


def test_divide_exact():
    num = poly({-1: 1, -3: 1, -5: 1, -9: -1})
    assert num.divide_exact(poly({1: 1, -1: 1})) == poly({-2: 1, -6: 1, -8: -1})
    with pytest.raises(ValueError):
        poly({0: 1, 1: 1}).divide_exact(poly({0: 2}))
