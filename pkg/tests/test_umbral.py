from fractions import Fraction

from hypothesis import given, settings, strategies as st

from umbral_motzkin.motzkin import hybrid_poly
from umbral_motzkin.powerseries import cq_series
from umbral_motzkin.umbral import (
    UmbralPoly,
    c_power,
    umbral_compose,
    umbral_eval,
    umbral_exp_partial,
    umbral_hermite,
)

ONE = c_power(0)

umbral_polys = st.dictionaries(
    st.integers(min_value=-4, max_value=8),
    st.fractions(min_value=-6, max_value=6, max_denominator=5),
    max_size=5,
).map(UmbralPoly)


def test_compose_examples():
    assert umbral_compose(c_power(1), c_power(2)) == c_power(3)
    a = UmbralPoly({0: 3, 2: Fraction(1, 2)})
    assert umbral_compose(ONE, a) == a
    assert umbral_compose(UmbralPoly({0: 1, 1: 2}), c_power(1)) == UmbralPoly({1: 1, 2: 2})


def test_eval_examples():
    assert umbral_eval(c_power(2)) == Fraction(1, 2)
    assert umbral_eval(UmbralPoly({0: 3, -1: 1})) == 3
    assert umbral_eval(UmbralPoly({1: 1, 2: 2})) == 2


def test_hermite_examples():
    assert umbral_hermite(0, 5) == ONE
    assert umbral_hermite(2, 1) == UmbralPoly({0: 1, 1: 2})
    assert umbral_hermite(3, 1) == UmbralPoly({0: 1, 1: 6})


def test_zero_coefficients_are_dropped():
    p = UmbralPoly({0: 1, 1: 0})
    assert dict(p.terms) == {0: Fraction(1)}
    assert UmbralPoly({2: 1}) + UmbralPoly({2: -1}) == UmbralPoly()
    assert not UmbralPoly({3: 0})


@settings(max_examples=200, deadline=None)
@given(umbral_polys, umbral_polys, umbral_polys)
def test_composition_is_abelian(a, b, c):
    assert umbral_compose(a, b) == umbral_compose(b, a)
    assert umbral_compose(umbral_compose(a, b), c) == umbral_compose(a, umbral_compose(b, c))
    assert umbral_compose(ONE, a) == a == umbral_compose(a, ONE)


def test_monomial_inverses():
    for k in range(-10, 11):
        assert umbral_compose(c_power(k), c_power(-k)) == ONE


def test_truncated_exponential_matches_cq():
    R = 20
    for q in range(4):
        partial = cq_series(q, R)
        for x in (Fraction(1), Fraction(1, 2), Fraction(2)):
            lhs = umbral_eval(umbral_compose(c_power(q), umbral_exp_partial(x, R)))
            assert lhs == partial.evaluate(x)


def test_umbral_route_equals_hybrid_polynomial():
    for n in range(21):
        for q in range(5):
            umbral = umbral_eval(umbral_compose(c_power(q), umbral_hermite(n, 1)))
            assert umbral == hybrid_poly(n, q, 1, 1)


def test_umbral_hermite_with_rational_arguments():
    x, y = Fraction(2, 3), Fraction(-1, 2)
    for n in range(10):
        for q in range(3):
            lhs = umbral_eval(umbral_compose(c_power(q), umbral_hermite(n, x, y)))
            assert lhs == hybrid_poly(n, q, x, y)


def test_matmul_alias():
    assert c_power(1) @ c_power(2) == c_power(3)
