"""Laurent polynomial arithmetic: worked examples and ring properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp3.laurent import (
    ALL_ONES,
    SIGMA,
    LaurentPoly,
    NotDivisibleError,
    ParseError,
    VarPermutation,
    format_poly,
    parse_poly,
    x,
)


def P(text: str) -> LaurentPoly:
    return parse_poly(text)


class TestRingOps:
    def test_add_cancels(self):
        assert x(1) + x(2) + (-x(2)) == x(1)

    def test_monomial_scaling(self):
        got = (x(3) * x(5) + x(1) * x(6)) * LaurentPoly.var(2, -1)
        assert got == P("x2^-1 x3 x5 + x1 x2^-1 x6")

    def test_binomial_product(self):
        # numerator of y_2, expanded by hand
        got = (x(3) * x(5) + x(1) * x(6)) * (x(3) * x(4) + x(2) * x(6))
        assert got == P("x3^2 x4 x5 + x2 x3 x5 x6 + x1 x3 x4 x6 + x1 x2 x6^2")

    def test_zero_is_absorbing(self):
        z = LaurentPoly.zero()
        assert z * x(1) == z
        assert not z
        assert z + x(4) == x(4)

    def test_pow(self):
        b = x(1) + x(2)
        assert b ** 3 == b * b * b
        assert b ** 0 == LaurentPoly.one()
        assert LaurentPoly.var(3, -1) == x(3) ** -1


class TestExactDivision:
    def test_difference_of_squares(self):
        num = x(3) ** 2 * x(5) ** 2 - x(1) ** 2 * x(6) ** 2
        den = x(3) * x(5) - x(1) * x(6)
        assert num.exact_div(den) == x(3) * x(5) + x(1) * x(6)

    def test_monomial_divisor_always_exact(self):
        got = (x(3) * x(5) + x(1) * x(6)).exact_div(x(2))
        assert got == P("x2^-1 x3 x5 + x1 x2^-1 x6")

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            (x(1) + x(2)).exact_div(x(1) + x(3))

    def test_coefficient_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            x(1).exact_div(LaurentPoly.constant(2))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            x(1).exact_div(LaurentPoly.zero())


class TestPermutation:
    def test_sigma_cycle_structure(self):
        assert [SIGMA(i) for i in range(1, 7)] == [5, 4, 6, 2, 1, 3]
        assert SIGMA.is_involution()

    def test_sigma_on_variable(self):
        assert x(2).permute(SIGMA) == x(4)

    def test_sigma_fixes_y1_numerator(self):
        p = x(3) * x(5) + x(1) * x(6)
        assert p.permute(SIGMA) == p

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            VarPermutation((1, 1, 2, 3, 4, 5))


class TestEvaluate:
    def test_all_ones(self):
        assert (x(3) * x(5) + x(1) * x(6)).evaluate(ALL_ONES) == 2
        assert (x(1) * LaurentPoly.var(2, -1)).evaluate(ALL_ONES) == 1

    def test_rational_point(self):
        p = P("x1 x2^-1 + 3")
        assert p.evaluate((Fraction(1, 2), 3, 1, 1, 1, 1)) == Fraction(1, 6) + 3

    def test_zero_coordinate_rejected(self):
        with pytest.raises(ZeroDivisionError):
            x(1).evaluate((0, 1, 1, 1, 1, 1))


class TestText:
    def test_canonical_order(self):
        assert format_poly(x(3) * x(5) + x(1) * x(6)) == "x1 x6 + x3 x5"

    def test_parse_monomial(self):
        p = P("x2^-1 x3 x5")
        assert p.exponents_of_monomial() == (0, -1, 1, 0, 1, 0)

    def test_negative_and_coefficients(self):
        assert format_poly(P("-2 x1 + x2 - 5")) == "-2 x1 + x2 - 5"

    def test_zero(self):
        assert format_poly(LaurentPoly.zero()) == "0"
        assert P("x1 - x1") == LaurentPoly.zero()

    @pytest.mark.parametrize("bad, pos", [
        ("", 0),
        ("x", 0),
        ("x7", 0),
        ("x1 + + x2", 5),
        ("3 * x1", 2),
        ("x1^", 3),
    ])
    def test_parse_errors_carry_position(self, bad, pos):
        with pytest.raises(ParseError) as exc:
            parse_poly(bad)
        assert exc.value.position == pos


# -- randomized algebraic laws ------------------------------------------------

exponents = st.tuples(*[st.integers(-3, 3)] * 6)
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(
    LaurentPoly.from_exponent_terms)
nonzero_polys = polys.filter(bool)
points = st.tuples(*[st.fractions(min_value=-4, max_value=4).filter(lambda q: q != 0)] * 6)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero()


@given(polys, nonzero_polys)
def test_division_inverts_multiplication(a, b):
    assert (a * b).exact_div(b) == a


@given(polys, polys)
def test_permute_is_ring_hom(a, b):
    assert (a * b).permute(SIGMA) == a.permute(SIGMA) * b.permute(SIGMA)
    assert (a + b).permute(SIGMA) == a.permute(SIGMA) + b.permute(SIGMA)
    assert a.permute(SIGMA).permute(SIGMA) == a


@settings(max_examples=50)
@given(polys, polys, points)
def test_evaluate_is_ring_hom(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(polys, polys)
def test_canonical_form_no_zero_coefficients(a, b):
    for p in (a + b, a - b, a * b):
        assert all(c != 0 for c in p.coefficients())


@given(polys)
def test_parse_format_round_trip(p):
    assert parse_poly(format_poly(p)) == p
