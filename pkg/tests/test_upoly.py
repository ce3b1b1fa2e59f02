"""Univariate polynomial arithmetic and exact real-root isolation."""

import math
import random
from fractions import Fraction

import pytest

from curvedist.scalar import Scalar
from curvedist.upoly import (
    RealAlgebraic,
    UPoly,
    compare_roots,
    count_roots_between,
    isolate_real_roots,
    root_bounds,
    root_sign,
    sturm_chain,
)


def poly(*coeffs):
    """Ascending-order constructor shorthand."""
    return UPoly([Fraction(c) for c in coeffs])


def float_roots(v):
    lo, hi = root_bounds(v, Fraction(1, 10**12))
    return (float(lo) + float(hi)) / 2


def sign_change_count(p: UPoly, lo: float, hi: float, steps: int = 20000) -> int:
    """Dense-grid sign-change oracle.  Counts sign flips of p on [lo, hi];
    misses only roots closer together than the grid pitch, so callers pick
    polynomials with well-separated roots."""
    h = (hi - lo) / steps
    prev = None
    flips = 0
    for i in range(steps + 1):
        x = Fraction(lo + i * h).limit_denominator(10**9)
        s = p(x).sign()
        if s == 0:
            flips += 1
            prev = None
            continue
        if prev is not None and s != prev:
            flips += 1
        prev = s
    return flips


class TestArithmetic:
    def test_divmod_exact(self):
        f = poly(-6, 11, -6, 1)  # (x-1)(x-2)(x-3)
        g = poly(-2, 1)
        q, r = divmod(f, g)
        assert r.is_zero
        assert q * g == f

    def test_divmod_remainder(self):
        f = poly(1, 0, 1)
        g = poly(1, 1)
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    def test_eval_and_compose(self):
        f = poly(1, 2, 3)
        assert f(Fraction(2)) == Scalar(17)
        g = f.compose(poly(1, 1))  # f(x+1)
        assert g(Fraction(1)) == f(Fraction(2))

    def test_derivative(self):
        assert poly(5, 0, 0, 2).derivative() == poly(0, 0, 6)

    def test_eval_interval_encloses(self):
        f = poly(-1, 0, 1)
        lo, hi = f.eval_interval(Fraction(0), Fraction(2))
        for t in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
            assert lo <= f(t).as_fraction() <= hi

    def test_gcd(self):
        f = poly(-1, 0, 1) * poly(-2, 1)
        g = poly(-1, 1) * poly(3, 1)
        d = f.gcd(g)
        assert d.monic() == poly(-1, 1)

    def test_squarefree_part(self):
        f = poly(-1, 1) ** 3 * poly(-2, 1)
        sf = f.squarefree_part().monic()
        assert sf == (poly(-1, 1) * poly(-2, 1)).monic()

    def test_cauchy_bound_contains_roots(self):
        f = poly(-6, 11, -6, 1)
        b = f.cauchy_bound()
        assert b >= 3


class TestSturm:
    def test_count_roots_cubic(self):
        f = poly(-6, 11, -6, 1)  # roots 1, 2, 3
        ch = sturm_chain(f)
        assert count_roots_between(ch, Fraction(0), Fraction(4)) == 3
        assert count_roots_between(ch, Fraction(3, 2), Fraction(5, 2)) == 1
        assert count_roots_between(ch, Fraction(7, 2), Fraction(10)) == 0

    def test_count_ignores_multiplicity(self):
        f = poly(-1, 1) ** 2
        ch = sturm_chain(f)
        assert count_roots_between(ch, Fraction(0), Fraction(2)) == 1


class TestIsolation:
    def test_rational_roots_come_back_exact(self):
        f = poly(-6, 11, -6, 1)
        roots = isolate_real_roots(f)
        assert [root_sign(r) for r in roots] == [1, 1, 1]
        vals = sorted(r.as_fraction() for r in roots if isinstance(r, Scalar))
        assert vals == [1, 2, 3]

    def test_quadratic_roots_match_field_values(self):
        roots = isolate_real_roots(poly(-2, 0, 1))
        assert len(roots) == 2
        assert compare_roots(roots[0], Scalar(0, -1, 2)) == 0
        assert compare_roots(roots[1], Scalar(0, 1, 2)) == 0

    def test_higher_degree_boxed(self):
        roots = isolate_real_roots(poly(-2, 0, 0, 1))  # x^3 = 2
        assert len(roots) == 1
        (r,) = roots
        assert isinstance(r, RealAlgebraic)
        lo, hi = root_bounds(r, Fraction(1, 10**6))
        c = 2 ** (1 / 3)
        assert float(lo) <= c <= float(hi)

    def test_ordering_and_comparison(self):
        roots = isolate_real_roots(poly(-2, 0, 0, 0, 1) * poly(-1, 1))  # x^4=2 and x=1
        assert len(roots) == 3
        for a, b in zip(roots, roots[1:]):
            assert compare_roots(a, b) == -1
        assert compare_roots(roots[0], roots[0]) == 0

    def test_refine_narrows(self):
        (r,) = isolate_real_roots(poly(-2, 0, 0, 1))
        assert isinstance(r, RealAlgebraic)
        w0 = r.width()
        r.refine(3)
        assert r.width() <= w0 / 8

    def test_no_real_roots(self):
        assert isolate_real_roots(poly(1, 0, 1)) == []

    def test_multiplicity_collapsed(self):
        f = poly(-1, 1) ** 2 * poly(1, 1)
        roots = isolate_real_roots(f)
        vals = sorted(float_roots(r) if isinstance(r, RealAlgebraic) else float(r) for r in roots)
        assert len(roots) == 2
        assert vals == pytest.approx([-1.0, 1.0])

    def test_against_grid_oracle(self):
        rng = random.Random(7)
        for _ in range(12):
            deg = rng.randint(2, 5)
            f = UPoly([Fraction(rng.randint(-9, 9)) for _ in range(deg)] + [Fraction(1)])
            f = f.squarefree_part()
            b = float(f.cauchy_bound()) + 1
            expected = sign_change_count(f, -b, b)
            roots = isolate_real_roots(f)
            assert len(roots) == expected, f.to_string()
            for r in roots:
                if isinstance(r, Scalar):
                    assert f(r) == Scalar(0)
                else:
                    lo, hi = root_bounds(r)
                    glo, ghi = f.eval_interval(lo, hi)
                    assert glo <= 0 <= ghi


class TestRootValueHelpers:
    def test_root_sign(self):
        roots = isolate_real_roots(poly(-3, 0, 0, 0, 1))  # x^4 = 3
        signs = sorted(root_sign(r) for r in roots)
        assert signs == [-1, 1]

    def test_root_bounds_width_request(self):
        (r,) = isolate_real_roots(poly(-5, 0, 0, 1))
        lo, hi = root_bounds(r, Fraction(1, 2**40))
        assert hi - lo <= Fraction(1, 2**40)
        assert lo <= hi

    def test_compare_scalar_vs_boxed(self):
        cbrt2 = isolate_real_roots(poly(-2, 0, 0, 1))[0]
        assert compare_roots(Scalar(1), cbrt2) == -1
        assert compare_roots(Scalar(2), cbrt2) == 1
        assert compare_roots(Scalar(0, 1, 2), cbrt2) == 1  # sqrt2 > cbrt2
