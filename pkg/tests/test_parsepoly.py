"""Polynomial text format: grammar, errors, and round trips."""

import random
from fractions import Fraction

import pytest

from curvedist.errors import ExponentOverflow, ParseError, UnknownVariable
from curvedist.mpoly import MPoly
from curvedist.parsepoly import MAX_EXPONENT, parse_poly

XY = ("x", "y")


class TestGrammar:
    def test_constants_and_fractions(self):
        assert parse_poly("7", XY) == MPoly.const(XY, 7)
        assert parse_poly("-3/4", XY) == MPoly.const(XY, Fraction(-3, 4))

    def test_terms_and_powers(self):
        f = parse_poly("2*x^3*y - y + 1", XY)
        assert f.degree_in("x") == 3
        assert f.coefficient((3, 1)) == 2
        assert f.coefficient((0, 1)) == -1
        assert f.coefficient((0, 0)) == 1

    def test_parentheses_and_products(self):
        f = parse_poly("(x + y)*(x - y)", XY)
        assert f == parse_poly("x^2 - y^2", XY)

    def test_leading_minus(self):
        assert parse_poly("-x + 1", XY) == parse_poly("1 - x", XY)

    def test_power_of_group(self):
        assert parse_poly("(x + 1)^2", XY) == parse_poly("x^2 + 2*x + 1", XY)

    def test_whitespace_insensitive(self):
        a = parse_poly("x^2+y^2-1", XY)
        b = parse_poly("  x^2 + y^2 - 1 ", XY)
        assert a == b

    def test_four_variable_ring(self):
        R4 = ("x", "y", "xp", "yp")
        f = parse_poly("(x - xp)^2 + (y - yp)^2", R4)
        assert f.total_degree() == 2
        assert f.evaluate({"x": 3, "y": 0, "xp": 0, "yp": 4}) == 25


class TestRoundTrip:
    def test_to_string_parses_back(self):
        rng = random.Random(5)
        for _ in range(20):
            terms = {}
            for _ in range(rng.randint(1, 5)):
                exp = (rng.randint(0, 4), rng.randint(0, 4))
                terms[exp] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            f = MPoly(XY, terms)
            assert parse_poly(f.to_string(), XY) == f

    def test_zero_round_trip(self):
        z = MPoly.zero(XY)
        assert parse_poly(z.to_string(), XY) == z


class TestErrors:
    def test_unknown_variable_names_offender(self):
        with pytest.raises(UnknownVariable) as e:
            parse_poly("x + z", XY)
        assert "z" in str(e.value)

    def test_no_implicit_multiplication(self):
        with pytest.raises(ParseError):
            parse_poly("2x", XY)

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError):
            parse_poly("(x + 1", XY)

    def test_trailing_garbage_position(self):
        with pytest.raises(ParseError) as e:
            parse_poly("x + y )", XY)
        assert "position" in str(e.value) or ")" in str(e.value)

    def test_bad_exponent(self):
        with pytest.raises(ParseError):
            parse_poly("x^y", XY)

    def test_exponent_overflow(self):
        with pytest.raises(ExponentOverflow):
            parse_poly(f"x^{MAX_EXPONENT + 1}", XY)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_poly("", XY)

    def test_stray_operator(self):
        with pytest.raises(ParseError):
            parse_poly("x + * y", XY)
