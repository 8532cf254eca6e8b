"""Exact Laurent polynomial arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusknot.laurent import LaurentPolynomial, NonExactDivision

terms = st.lists(
    st.tuples(st.integers(-8, 8), st.integers(-9, 9)), min_size=0, max_size=8
)
polys = st.builds(LaurentPolynomial.from_terms, terms)


# ----------------------------------------------------------------------
# construction and representation


def test_zero_and_one():
    zero = LaurentPolynomial.zero()
    one = LaurentPolynomial.one()
    assert zero.is_zero()
    assert not one.is_zero()
    assert zero.to_text() == "0"
    assert one.to_text() == "1"
    assert not zero
    assert one


def test_from_terms_accumulates_and_cancels():
    p = LaurentPolynomial.from_terms([(2, 1), (2, -1), (0, 3)])
    assert p == LaurentPolynomial.from_terms({0: 3})
    assert p.support() == [0]


def test_monomial():
    m = LaurentPolynomial.monomial(-3, 5)
    assert list(m.terms()) == [(-3, 5)]
    assert m.to_text() == "5t^{-3}"


def test_text_rendering_matches_typeset_style():
    p = LaurentPolynomial.from_terms(
        {-6: 1, -5: -1, -2: 1, 0: -1, 2: 1, 5: -1, 6: 1}
    )
    assert p.to_text() == "t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6"
    assert LaurentPolynomial.from_terms({-1: 1, 0: -1, 1: 1}).to_text() == "t^{-1}-1+t"
    assert LaurentPolynomial.from_terms({10: 2, -12: -3}).to_text() == "-3t^{-12}+2t^{10}"


def test_parse_whitespace_and_braces():
    assert LaurentPolynomial.from_text(" t^{-1} - 1 + t ") == LaurentPolynomial.from_terms(
        {-1: 1, 0: -1, 1: 1}
    )
    assert LaurentPolynomial.from_text("0") == LaurentPolynomial.zero()
    assert LaurentPolynomial.from_text("-t^2+t^{11}") == LaurentPolynomial.from_terms(
        {2: -1, 11: 1}
    )


@pytest.mark.parametrize("bad", ["", "t^", "t^{3", "q+1", "1+", "t^{}"])
def test_parse_rejects_malformed_text(bad):
    with pytest.raises(ValueError):
        LaurentPolynomial.from_text(bad)


def test_immutable():
    p = LaurentPolynomial.one()
    with pytest.raises(AttributeError):
        p.min_exponent = 5
    with pytest.raises((ValueError, RuntimeError)):
        p.coefficients[0] = 2


# ----------------------------------------------------------------------
# ring structure


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    assert a + LaurentPolynomial.zero() == a
    assert a * LaurentPolynomial.one() == a
    assert a * LaurentPolynomial.zero() == LaurentPolynomial.zero()


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_addition_subtraction_roundtrip(a, b):
    assert (a + b) - b == a
    assert -(-a) == a
    assert a - a == LaurentPolynomial.zero()


@settings(max_examples=200, deadline=None)
@given(polys)
def test_pow_and_shift(a):
    assert a**0 == LaurentPolynomial.one()
    assert a**3 == a * a * a
    assert a.shift(4) == a * LaurentPolynomial.monomial(4)
    assert a.shift(-2).shift(2) == a


@settings(max_examples=300, deadline=None)
@given(polys, polys)
def test_division_roundtrip(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.exact_div(b)
        return
    assert (a * b).exact_div(b) == a


@settings(max_examples=200, deadline=None)
@given(polys, st.integers(1, 9))
def test_division_by_cyclotomic_shape(a, m):
    """The fast path: divisors of the form t^m - 1."""
    divisor = LaurentPolynomial.from_terms({m: 1, 0: -1})
    assert (a * divisor).exact_div(divisor) == a
    with pytest.raises(NonExactDivision):
        (a * divisor + LaurentPolynomial.one()).exact_div(divisor)


@settings(max_examples=300, deadline=None)
@given(polys)
def test_text_roundtrip(a):
    assert LaurentPolynomial.from_text(a.to_text()) == a


@settings(max_examples=200, deadline=None)
@given(polys)
def test_hash_consistent_with_eq(a):
    twin = LaurentPolynomial.from_terms(a.terms())
    assert twin == a
    assert hash(twin) == hash(a)


def test_division_type_errors():
    one = LaurentPolynomial.one()
    with pytest.raises(TypeError):
        one.exact_div(3)
    with pytest.raises(NonExactDivision):
        one.exact_div(LaurentPolynomial.from_terms({1: 1, 0: -1}))


def test_negative_pow_rejected():
    with pytest.raises(ValueError):
        LaurentPolynomial.one() ** -1


def test_overflow_guard():
    big = LaurentPolynomial.from_terms({0: 2**40})
    with pytest.raises(OverflowError):
        big * big


def test_palindromic():
    assert LaurentPolynomial.from_terms({-1: 1, 0: -1, 1: 1}).is_palindromic()
    assert not LaurentPolynomial.from_terms({-1: 1, 0: -1, 2: 1}).is_palindromic()
    assert LaurentPolynomial.zero().is_palindromic()


def test_coefficient_lookup():
    p = LaurentPolynomial.from_terms({-2: 3, 5: -7})
    assert p.coefficient(-2) == 3
    assert p.coefficient(5) == -7
    assert p.coefficient(0) == 0
    assert p.coefficient(99) == 0
    assert p.max_exponent == 5
    assert p.min_exponent == -2
