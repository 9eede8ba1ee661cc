from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from umbral_motzkin.exactnum import (
    NonIntegralValueError,
    as_rational,
    binomial,
    catalan,
    central_kernel,
    factorial,
    format_rational,
    parse_rational,
    recip_gamma_int,
    require_int,
)

from oracles import pascal_rows, product


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, product(range(1, 6)))])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    rows = pascal_rows(7)
    assert binomial(7, 4) == rows[7][4] == 35
    assert binomial(5, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_binomial_matches_pascal_triangle():
    rows = pascal_rows(64)
    for n, row in enumerate(rows):
        assert [binomial(n, k) for k in range(n + 1)] == row


def test_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("k, expected", [(0, 1), (2, 2), (3, 5)])
def test_catalan_examples(k, expected):
    assert catalan(k) == expected


def test_catalan_as_binomial_difference():
    for k in range(33):
        assert catalan(k) == binomial(2 * k, k) - binomial(2 * k, k + 1)


def test_recip_gamma_int():
    assert recip_gamma_int(2) == Fraction(1, 2)
    assert recip_gamma_int(0) == 1
    assert recip_gamma_int(-1) == 0
    assert recip_gamma_int(-7) == 0
    for k in range(65):
        assert recip_gamma_int(k) * factorial(k) == 1


def test_central_kernel_parity():
    assert [central_kernel(s) for s in range(9)] == [1, 0, 1, 0, 2, 0, 5, 0, 14]


@given(
    st.fractions(max_denominator=10**6),
    st.fractions(max_denominator=10**6),
    st.sampled_from(["+", "-", "*", "/"]),
)
def test_rational_results_stay_canonical(a, b, op):
    assume(not (op == "/" and b == 0))
    r = {"+": lambda: a + b, "-": lambda: a - b, "*": lambda: a * b, "/": lambda: a / b}[op]()
    assert r.denominator > 0
    assert gcd(abs(r.numerator), r.denominator) == 1


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational("3/6") == Fraction(1, 2)


@pytest.mark.parametrize("value", [Fraction(5, 6), Fraction(-3, 7), Fraction(12), Fraction(0)])
def test_format_parse_round_trip(value):
    assert parse_rational(format_rational(value)) == value


def test_format_rational_integer_has_no_denominator():
    assert format_rational(Fraction(10, 2)) == "5"
    assert format_rational(Fraction(5, 6)) == "5/6"


def test_parse_rational_rejects_decimals():
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_require_int():
    assert require_int(Fraction(6, 3)) == 2
    with pytest.raises(NonIntegralValueError):
        require_int(Fraction(1, 2))
