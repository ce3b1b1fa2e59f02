"""Plane curves: families, conic classification, exact intersection."""

from fractions import Fraction

import pytest

from curvedist.curves import (
    CommonComponent,
    FinitePoints,
    PlaneCurve,
    PointSet,
    box_eval,
    circle_curve,
    classify_conic,
    conic_curve,
    curve_poly,
    generate_points,
    graph_curve,
    intersect_curves,
    line_curve,
)
from curvedist.errors import DegreeError, InputError
from curvedist.mpoly import MPoly
from curvedist.scalar import Scalar
from curvedist.upoly import UPoly


def C(text, **kw):
    return PlaneCurve(curve_poly(text), **kw)


class TestFamilies:
    def test_line_constructor(self):
        L = line_curve(2, -1, 3)  # 2x - y + 3 = 0
        assert L.family == "line"
        assert L.contains((0, 3))
        assert L.contains((1, 5))

    def test_circle_constructor_and_params(self):
        c = circle_curve(1, -2, 5)
        assert c.family == "circle"
        cx, cy, r2 = c.circle_params()
        assert (cx, cy, r2) == (Scalar(1), Scalar(-2), Scalar(25))
        assert c.contains((1, 3))

    def test_graph_constructor(self):
        g = graph_curve(UPoly([Fraction(0), Fraction(0), Fraction(0), Fraction(1)]))
        assert g.family == "graph"
        assert g.contains((2, 8))
        assert g.graph_poly()(Fraction(2)) == Scalar(8)

    def test_family_tag_validated(self):
        with pytest.raises(Exception):
            PlaneCurve(curve_poly("x^2 + y^2 - 1"), family="line")

    def test_degree(self):
        assert C("x^4 + y^4 - 1").degree == 4
        assert line_curve(1, 0, 0).degree == 1

    def test_is_line_or_circle(self):
        assert line_curve(1, 1, 0).is_line_or_circle()
        assert circle_curve(0, 0, 2).is_line_or_circle()
        assert not C("y - x^2").is_line_or_circle()

    def test_contains_with_radical_coordinates(self):
        c = circle_curve(0, 0, 2)
        s = Scalar(0, 1, 2)  # sqrt 2
        assert c.contains((s, s))  # 2 + 2 = 4


class TestConicClassification:
    def test_main_classes(self):
        assert classify_conic(C("x^2 + 2*y^2 - 1")).kind == "ellipse"
        assert classify_conic(circle_curve(0, 0, 1)).subtag == "circle"
        assert classify_conic(C("y - x^2 + 3*x")).kind == "parabola"
        assert classify_conic(C("x^2 - y^2 - 1")).kind == "hyperbola"
        assert classify_conic(C("x*y - 1")).kind == "hyperbola"

    def test_degenerate_classes(self):
        assert classify_conic(C("x^2 - y^2")).subtag == "line_pair"
        assert classify_conic(C("x^2 + y^2")).subtag == "point"
        assert classify_conic(C("x^2 - 1")).subtag == "parallel_lines"
        assert classify_conic(C("x^2")).subtag == "double_line"
        assert classify_conic(C("x^2 + 1")).subtag == "empty"
        assert classify_conic(C("x^2 + y^2 + 1")).subtag == "empty"

    def test_degree_guard(self):
        with pytest.raises(DegreeError):
            classify_conic(C("y - x^3"))


class TestIntersection:
    def check_points(self, res, c1, c2, expected_count):
        assert isinstance(res, FinitePoints)
        assert len(res) == expected_count
        for pt in res.points:
            for curve in (c1, c2):
                if pt.is_rational():
                    assert curve.contains((pt.x, pt.y))

    def test_line_circle_two_points(self):
        c1 = circle_curve(0, 0, 5)
        c2 = line_curve(1, 1, -7)  # x + y = 7
        res = intersect_curves(c1, c2)
        self.check_points(res, c1, c2, 2)
        coords = sorted(res.points, key=lambda p: p.as_floats())
        assert (coords[0].x, coords[0].y) == (Scalar(3), Scalar(4))
        assert (coords[1].x, coords[1].y) == (Scalar(4), Scalar(3))

    def test_tangent_line_single_point(self):
        c1 = circle_curve(0, 0, 1)
        c2 = line_curve(0, 1, -1)  # y = 1
        res = intersect_curves(c1, c2)
        self.check_points(res, c1, c2, 1)
        assert (res.points[0].x, res.points[0].y) == (Scalar(0), Scalar(1))

    def test_disjoint_curves(self):
        res = intersect_curves(circle_curve(0, 0, 1), line_curve(0, 1, -5))
        assert isinstance(res, FinitePoints)
        assert len(res) == 0

    def test_two_circles(self):
        res = intersect_curves(circle_curve(0, 0, 5), circle_curve(6, 0, 5))
        self.check_points(res, circle_curve(0, 0, 5), circle_curve(6, 0, 5), 2)
        ys = sorted(pt.y for pt in res.points)
        assert ys == [Scalar(-4), Scalar(4)]
        assert all(pt.x == Scalar(3) for pt in res.points)

    def test_irrational_intersection_validated_by_box(self):
        # circle x^2+y^2=2 meets y=x at (±1, ±1)... that's rational; use
        # x^2+y^2=3 and y=x, hitting (±sqrt(3/2), ±sqrt(3/2))
        c1 = circle_curve(0, 0, Fraction(3)).f
        c1 = PlaneCurve(c1, family="circle")
        c2 = line_curve(1, -1, 0)
        res = intersect_curves(c1, c2)
        assert isinstance(res, FinitePoints) and len(res) == 2
        for pt in res.points:
            lo, hi = box_eval(c1.f, *_boxes(pt))
            assert lo <= 0 <= hi

    def test_cubic_meets_line(self):
        g = C("y - x^3", family="graph")
        L = line_curve(1, -1, 0)  # y = x
        res = intersect_curves(g, L)
        self.check_points(res, g, L, 3)
        xs = sorted(pt.x for pt in res.points)
        assert xs == [Scalar(-1), Scalar(0), Scalar(1)]

    def test_common_component_certificate(self):
        shared = curve_poly("x + y - 1")
        f = shared * curve_poly("x - y")
        g = shared * curve_poly("x^2 + y^2 - 4")
        res = intersect_curves(PlaneCurve(f), PlaneCurve(g))
        assert isinstance(res, CommonComponent)
        cert = res.certificate
        assert cert.total_degree() >= 1
        # the certificate must divide both inputs
        from curvedist.mpoly import try_exact_div

        assert try_exact_div(f, cert) is not None
        assert try_exact_div(g, cert) is not None

    def test_identical_curves_are_common_component(self):
        c = circle_curve(0, 0, 1)
        res = intersect_curves(c, PlaneCurve(curve_poly("2*x^2 + 2*y^2 - 2")))
        assert isinstance(res, CommonComponent)

    def test_quartic_pair(self):
        q = C("x^4 + y^4 - 2")
        L = line_curve(1, -1, 0)
        res = intersect_curves(q, L)
        self.check_points(res, q, L, 2)
        xs = sorted(pt.x for pt in res.points)
        assert xs == [Scalar(-1), Scalar(1)]


def _boxes(pt):
    from curvedist.curves import _coord_interval

    return _coord_interval(pt.x), _coord_interval(pt.y)


class TestPointSet:
    def test_validates_membership(self):
        L = line_curve(0, 1, 0)  # y = 0
        ps = PointSet(L, [(0, 0), (1, 0), (2, 0)])
        assert len(ps) == 3
        assert list(ps.labels()) == [1, 2, 3]
        with pytest.raises(InputError):
            PointSet(L, [(0, 1)])

    def test_rejects_duplicates(self):
        L = line_curve(0, 1, 0)
        with pytest.raises(InputError):
            PointSet(L, [(0, 0), (0, 0)])

    def test_iteration_preserves_order(self):
        L = line_curve(0, 1, 0)
        ps = PointSet(L, [(3, 0), (1, 0)])
        assert [pt[0] for pt in ps] == [Scalar(3), Scalar(1)]


class TestGeneratePoints:
    @pytest.mark.parametrize("mode", ["arithmetic", "random"])
    def test_line(self, mode):
        L = line_curve(2, 3, -6)
        ps = generate_points(L, 7, seed=1, mode=mode)
        assert len(ps) == 7
        assert len({tuple(pt) for pt in ps}) == 7

    @pytest.mark.parametrize("mode", ["arithmetic", "random"])
    def test_circle(self, mode):
        c = circle_curve(2, 1, 5)
        ps = generate_points(c, 9, seed=2, mode=mode)
        assert len(ps) == 9

    def test_vertical_line(self):
        L = line_curve(1, 0, -4)  # x = 4
        ps = generate_points(L, 3)
        assert all(pt[0] == Scalar(4) for pt in ps)

    def test_graph(self):
        g = graph_curve(UPoly([Fraction(1), Fraction(0), Fraction(1)]))  # y = x^2+1
        ps = generate_points(g, 5, start=-2)
        assert [tuple(map(int, (pt[0].as_fraction(), pt[1].as_fraction()))) for pt in ps] == [
            (-2, 5), (-1, 2), (0, 1), (1, 2), (2, 5)
        ]

    def test_conic_through_point(self):
        h = conic_curve(curve_poly("x^2 - y^2 - 1"))
        ps = generate_points(h, 6, through=(1, 0))
        assert len(ps) == 6

    def test_count_validation(self):
        with pytest.raises(InputError):
            generate_points(line_curve(1, 0, 0), 0)

    def test_start_offset(self):
        L = line_curve(0, 1, 0)
        ps = generate_points(L, 3, start=10)
        assert [pt[0] for pt in ps] == [Scalar(10), Scalar(11), Scalar(12)]
