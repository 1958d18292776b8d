from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from necktie.scalars import (
    MERSENNE_61,
    DivisionByZero,
    ParseError,
    PrimeFieldElement,
    clear_denominators,
    field_element,
    format_scalar,
    parse_scalar,
    scalar_inv,
)

fractions = st.fractions(max_denominator=10**6)
residues = st.integers(0, MERSENNE_61 - 1).map(lambda r: PrimeFieldElement(r, MERSENNE_61))
small_prime = st.integers(0, 6).map(lambda r: PrimeFieldElement(r, 7))


@pytest.mark.parametrize(
    "text, value",
    [("0", F(0)), ("-3", F(-3)), ("6/4", F(3, 2)), ("-15/7", F(-15, 7)), ("0/5", F(0))],
)
def test_parse_canonicalizes(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["1//2", "", "1.5", "+3", "1/-2", " 4", "a", "--1", "1/2/3"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_parse_rejects_non_string():
    with pytest.raises(ParseError):
        parse_scalar(3)


def test_zero_denominator():
    with pytest.raises(DivisionByZero):
        parse_scalar("1/0")
    with pytest.raises(ZeroDivisionError):
        field_element(1, 0)


@given(fractions)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_format_forms():
    assert format_scalar(F(15, 7)) == "15/7"
    assert format_scalar(F(-8, 4)) == "-2"
    assert format_scalar(PrimeFieldElement(12, 13)) == "12"


@given(residues, residues, residues)
def test_prime_field_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + (-a) == 0


@given(residues)
def test_prime_field_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert a / a == 1
    else:
        with pytest.raises(DivisionByZero):
            a.inverse()


@given(small_prime, small_prime)
def test_small_field_division(a, b):
    if b:
        assert (a / b) * b == a


def test_prime_field_int_interop():
    x = PrimeFieldElement(5, 7)
    assert x + 3 == 1
    assert 3 - x == 5
    assert 2 / x == PrimeFieldElement(6, 7)  # 5 * 6 = 30 = 2 (mod 7)
    assert hash(x) == hash(PrimeFieldElement(12 % 7, 7))


def test_mixed_moduli_refused():
    with pytest.raises((TypeError, ValueError)):
        PrimeFieldElement(1, 7) + PrimeFieldElement(1, 11)


@given(fractions.filter(bool))
def test_rational_inverse(x):
    assert scalar_inv(x) * x == 1


def test_rational_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        scalar_inv(F(0))


@given(st.integers(-10**9, 10**9), st.integers(1, 10**9))
def test_field_element_reduction_is_a_homomorphism(n, d):
    p = MERSENNE_61
    x = field_element(n, d, p)
    assert x * d == n
    assert field_element(n, d) == F(n, d)


@given(st.lists(fractions, min_size=1, max_size=5))
def test_clear_denominators_keeps_ratios(values):
    ints = clear_denominators(values)
    assert all(isinstance(i, int) for i in ints)
    nz = next((k for k, v in enumerate(values) if v), None)
    if nz is not None:
        assert all(F(i, ints[nz]) == v / values[nz] for i, v in zip(ints, values))
