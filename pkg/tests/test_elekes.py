"""Distance-curve machinery: normalization, counting, certificates."""

import random
from fractions import Fraction

import pytest

from curvedist.curves import (
    PlaneCurve,
    PointSet,
    circle_curve,
    curve_poly,
    graph_curve,
    line_curve,
)
from curvedist.elekes import (
    Config,
    ConstraintConic,
    FourCurve,
    NoSymmetry,
    SymmetryFound,
    build_four_curves,
    constraint_conic,
    count_incidences,
    distance_set,
    four_curve,
    from_normalized,
    generic_projection,
    incidence,
    line_case_intersection,
    normalize_config,
    partition,
    quadruple_report,
    same_distance_symmetry_test,
    sqdist,
)
from curvedist.errors import (
    AssumptionViolation,
    ExcludedPair,
    PreconditionError,
    UnsupportedScalar,
)
from curvedist.isometry import Isometry, fixes_curve
from curvedist.scalar import Scalar
from curvedist.upoly import UPoly

X_AXIS = line_curve(0, 1, 0)
CUBIC = PlaneCurve(curve_poly("y - x^3"), family="graph")
QUARTIC = PlaneCurve(curve_poly("x^4 + y^4 - 1"))


def on_line(y, xs):
    return [(Scalar(x), Scalar(y)) for x in xs]


def on_cubic(xs):
    return [(Scalar(x), Scalar(x) ** 3) for x in xs]


def cubic_config(xs1, xs2):
    return Config(PointSet(CUBIC, on_cubic(xs1)), PointSet(CUBIC, on_cubic(xs2)))


def spec_2x2():
    """Two anchors on the x-axis against two points on y = 4."""
    s1 = PointSet(X_AXIS, [(0, 0), (3, 0)])
    s2 = PointSet(line_curve(0, 1, -4), [(0, 4), (3, 4)])
    return Config(s1, s2)


class TestSqdistAndConfig:
    def test_sqdist(self):
        assert sqdist((0, 0), (3, 4)) == Scalar(25)
        assert sqdist((1, 1), (1, 1)) == Scalar(0)

    def test_config_properties(self):
        cfg = spec_2x2()
        assert (cfg.m, cfg.n) == (2, 2)
        assert cfg.c1.family == "line"
        assert cfg.d == 1
        c2 = cubic_config([1], [2, 3])
        assert c2.d == 3


class TestNormalization:
    def test_excluded_parallel_lines(self):
        cfg = Config(
            PointSet(X_AXIS, on_line(0, [0, 1])),
            PointSet(line_curve(0, 1, -5), on_line(5, [0, 1])),
        )
        with pytest.raises(ExcludedPair) as e:
            normalize_config(cfg)
        assert e.value.case == "parallel lines"

    def test_excluded_identical_lines(self):
        cfg = Config(
            PointSet(X_AXIS, on_line(0, [0, 1])),
            PointSet(X_AXIS, on_line(0, [2, 3])),
        )
        with pytest.raises(ExcludedPair) as e:
            normalize_config(cfg)
        assert e.value.case == "parallel lines"

    def test_excluded_orthogonal_lines(self):
        vert = line_curve(1, 0, -2)  # x = 2
        cfg = Config(
            PointSet(X_AXIS, on_line(0, [0, 1])),
            PointSet(vert, [(2, 1), (2, 5)]),
        )
        with pytest.raises(ExcludedPair) as e:
            normalize_config(cfg)
        assert e.value.case == "orthogonal lines"

    def test_excluded_concentric_circles(self):
        cfg = Config(
            PointSet(circle_curve(1, 1, 2), [(3, 1), (-1, 1)]),
            PointSet(circle_curve(1, 1, 5), [(6, 1), (-4, 1)]),
        )
        with pytest.raises(ExcludedPair) as e:
            normalize_config(cfg)
        assert e.value.case == "concentric circles"

    def test_vertical_line_rotated_away(self):
        vert = line_curve(1, 0, -1)  # x = 1
        cfg = Config(
            PointSet(vert, [(1, 0), (1, 1)]),
            PointSet(CUBIC, on_cubic([2, 3])),
        )
        out, rep = normalize_config(cfg)
        assert rep.rotation is not None
        # the rotated first curve is a non-vertical line
        a = out.c1.f.coefficient((1, 0))
        b = out.c1.f.coefficient((0, 1))
        assert b != Scalar(0)
        assert a != Scalar(0)
        # distances survive the rotation
        assert distance_set(out.s1.points, out.s2.points) == distance_set(
            cfg.s1.points, cfg.s2.points
        )

    def test_shared_points_split_between_sets(self):
        line2 = line_curve(1, -1, 0)  # y = x
        shared = [(0, 0), (2, 2)]
        cfg = Config(
            PointSet(X_AXIS, [(0, 0), (1, 0), (3, 0)]),
            PointSet(line2, shared + [(5, 5)]),
        )
        # (0,0) lies in both sets; rule (2) removes it from exactly one
        out, rep = normalize_config(cfg)
        removed = [r for r in rep.removals if r.rule == "(2)"]
        assert len(removed) == 1
        s1pts = set(map(tuple, out.s1.points))
        s2pts = set(map(tuple, out.s2.points))
        assert not (s1pts & s2pts)

    def test_circle_center_removed(self):
        cfg = Config(
            PointSet(circle_curve(0, 0, 5), [(5, 0), (3, 4)]),
            PointSet(X_AXIS, [(0, 0), (1, 0)]),
        )
        out, rep = normalize_config(cfg)
        rules = [r.rule for r in rep.removals]
        assert "(3)" in rules
        assert all(tuple(p) != (Scalar(0), Scalar(0)) for p in out.s2.points)

    def test_concentric_ring_pruned_to_one(self):
        # two s2 points equidistant from the center of circle c1: rule (4)
        cfg = Config(
            PointSet(circle_curve(0, 0, 5), [(5, 0), (3, 4)]),
            PointSet(line_curve(1, -1, 0), [(1, 1), (-1, -1), (2, 2)]),
        )
        out, rep = normalize_config(cfg)
        assert any(r.rule == "(4)" for r in rep.removals)
        center = (Scalar(0), Scalar(0))
        radii = [sqdist(p, center) for p in out.s2.points]
        assert len(radii) == len(set(radii))

    def test_parallel_offsets_pruned_when_other_is_line(self):
        # c1 is the x-axis; s2 points at equal distance from it collapse (5)
        cfg = Config(
            PointSet(X_AXIS, [(0, 0), (1, 0)]),
            PointSet(CUBIC, on_cubic([1, -1, 2])),  # (1,1) and (-1,-1): same |y|
        )
        out, rep = normalize_config(cfg)
        assert any(r.rule == "(5)" for r in rep.removals)
        assert out.n == 2

    def test_orthogonal_line_rule(self):
        # c2 is the x-axis; two s1 points share a vertical line: rule (6)
        parab = PlaneCurve(curve_poly("y^2 - x"), irreducible=True)
        cfg = Config(
            PointSet(parab, [(1, 1), (1, -1), (4, 2)]),
            PointSet(X_AXIS, [(0, 0), (1, 0)]),
        )
        out, rep = normalize_config(cfg)
        rules = {r.rule for r in rep.removals}
        assert rules & {"(5)", "(6)"}
        xs = [p[0] for p in out.s1.points]
        assert len(xs) == len(set(xs))

    def test_clean_config_untouched(self):
        cfg = cubic_config([1, 2], [3, 4])
        out, rep = normalize_config(cfg)
        assert rep.removals == ()
        assert rep.rotation is None
        assert (out.m, out.n) == (2, 2)
        assert out.normalized

    def test_retention_bound(self):
        # never lose more than (1 - 1/(4 d^2)) of either set
        cfg = Config(
            PointSet(circle_curve(0, 0, 5), [(5, 0), (3, 4), (-3, 4), (0, 5)]),
            PointSet(
                line_curve(1, -1, 0),
                [(1, 1), (-1, -1), (2, 2), (-2, -2), (3, 3)],
            ),
        )
        out, rep = normalize_config(cfg)
        d = cfg.d
        for kept, orig in ((rep.kept_s1, rep.original_s1), (rep.kept_s2, rep.original_s2)):
            assert kept >= orig / (4 * d * d)


class TestDistanceSet:
    def test_equidistant_collinear(self):
        pts = on_line(0, range(10))
        assert len(distance_set(pts, pts, exclude_diagonal=True)) == 9

    def test_bipartite_lines(self):
        a = on_line(0, range(1, 6))
        b = on_line(5, range(1, 6))
        d = distance_set(a, b)
        assert len(d) == 5  # offsets 0..4 -> 25 + k^2

    def test_squared_distances_are_exact(self):
        d = distance_set([(0, 0)], [(1, 1)])
        assert d == {Scalar(2)}


class TestFourCurves:
    def test_defining_polynomial(self):
        cfg = spec_2x2()
        fc = four_curve(cfg, 1, 2)
        # F = (x - a_i)^2 + (y - b_i)^2 - (x' - a_j)^2 - (y' - b_j)^2
        assert fc.F.vars == ("x", "y", "xp", "yp")
        v = fc.F.evaluate({"x": 0, "y": 4, "xp": 3, "yp": 8})
        # d((0,0),(0,4))^2 = 16; d((3,0),(3,8))^2 = 64
        assert v == Scalar(16 - 64)

    def test_three_way_agreement(self):
        cfg = cubic_config([1, 2, 3], [-1, 0, 2])
        rng = random.Random(4)
        for fc in build_four_curves(cfg):
            for qs in cfg.s2.points:
                for qt in cfg.s2.points:
                    metric = sqdist(fc.p_i, qs) == sqdist(fc.p_j, qt)
                    via_f = fc.F.evaluate(
                        {"x": qs[0], "y": qs[1], "xp": qt[0], "yp": qt[1]}
                    ) == Scalar(0)
                    assert incidence(fc, qs, qt) == metric == via_f

    def test_row_major_order(self):
        cfg = cubic_config([1, 2], [3])
        fcs = build_four_curves(cfg)
        assert [(fc.i, fc.j) for fc in fcs] == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_membership_constraints_recorded(self):
        cfg = cubic_config([1], [2])
        fc = four_curve(cfg, 1, 1)
        # both copies of the host curve equation travel with the curve
        assert fc.f2_s.evaluate({"x": 2, "y": 8, "xp": 0, "yp": 0}) == Scalar(0)
        assert fc.f2_t.evaluate({"xp": 2, "yp": 8, "x": 0, "y": 0}) == Scalar(0)


class TestCounting:
    def test_spec_2x2_tight(self):
        rep = quadruple_report(spec_2x2())
        assert rep.q_count == 8
        assert rep.d_count == 2
        assert rep.bound == Fraction(16, 2)
        assert count_incidences(spec_2x2()) == 8

    def test_singleton(self):
        cfg = Config(PointSet(X_AXIS, [(0, 0)]), PointSet(X_AXIS, [(1, 0)]))
        rep = quadruple_report(cfg)
        assert rep.q_count == 1 and rep.d_count == 1 and rep.bound == 1

    def test_histogram_invariants(self):
        cfg = cubic_config([1, 2, 4], [-3, 0, 3, 5])
        rep = quadruple_report(cfg)
        assert sum(c for _, c in rep.histogram) == cfg.m * cfg.n
        assert sum(c * c for _, c in rep.histogram) == rep.q_count
        assert rep.q_count * rep.d_count >= cfg.m**2 * cfg.n**2

    def test_identity_on_random_configs(self):
        rng = random.Random(12)
        for _ in range(8):
            xs = rng.sample(range(-12, 13), 6)
            cfg = cubic_config(xs[:3], xs[3:])
            assert count_incidences(cfg) == quadruple_report(cfg).q_count

    def test_frozen_cubic_example(self):
        cfg = cubic_config([1, 2, 3, 4], [-2, -1, 5, 6])
        rep = quadruple_report(cfg)
        assert (rep.q_count, rep.d_count) == (18, 15)
        assert rep.bound == Fraction(256, 15)
        assert count_incidences(cfg) == 18


class TestSameDistanceSymmetry:
    def quartic_config(self):
        host = PlaneCurve(curve_poly("x^2 + y^2 - 5*x - 5*y + 6"))
        s1 = PointSet(host, [(2, 0), (0, 2), (3, 0), (0, 3)])
        s2 = PointSet(QUARTIC, [(1, 0), (0, 1), (-1, 0), (0, -1)])
        return Config(s1, s2)

    def test_quarter_turn_found(self):
        cfg = self.quartic_config()
        got = same_distance_symmetry_test(cfg, 1, 2, 3, 4)
        assert isinstance(got, SymmetryFound)
        T = got.symmetry
        assert fixes_curve(T, cfg.c2)
        assert T.apply((2, 0)) == (Scalar(0), Scalar(2))
        assert T.apply((3, 0)) == (Scalar(0), Scalar(3))

    def test_identity_when_indices_repeat(self):
        cfg = self.quartic_config()
        got = same_distance_symmetry_test(cfg, 1, 1, 3, 3)
        assert isinstance(got, SymmetryFound)
        assert got.symmetry == Isometry.identity()

    def test_no_symmetry_on_cubic(self):
        host = PlaneCurve(curve_poly("(4*x - y)*(x - 1)"))
        s1 = PointSet(host, [(1, 1), (2, 8), (0, 0), (1, 7)])
        cfg = Config(s1, PointSet(CUBIC, on_cubic([3])))
        got = same_distance_symmetry_test(cfg, 1, 2, 3, 4)
        assert isinstance(got, NoSymmetry)

    def test_precondition_guards(self):
        cfg = self.quartic_config()
        with pytest.raises(PreconditionError):
            same_distance_symmetry_test(cfg, 1, 2, 1, 4)  # p_i == p_k
        with pytest.raises(PreconditionError):
            same_distance_symmetry_test(cfg, 1, 2, 3, 1)  # unequal gaps


class TestConstraintConic:
    def test_from_normalized_frozen_example(self):
        cc = from_normalized(2, 0, 1, 0, 1)
        assert (cc.uu, cc.vv, cc.uv) == (3, 0, 0)
        assert (cc.lu, cc.lv) == (-6, 0)
        assert cc.const == Fraction(9, 4)
        assert not cc.contradiction
        assert not cc.quadratic_zero

    def test_bad_similarity_ratio_rejected(self):
        for L in (0, 1):
            with pytest.raises(PreconditionError):
                from_normalized(L, 0, 1, 0, 1)

    def test_contradiction_case(self):
        # b = d = 0 with c = a L: quadratic and linear parts vanish while
        # the constant cannot
        cc = from_normalized(2, 3, 0, 6, 0)
        assert cc.quadratic_zero
        assert cc.contradiction
        assert not cc.vacuous

    def test_vacuous_case(self):
        # a in {0, 1} keeps the constant at zero too: everything vanishes
        cc = from_normalized(2, 0, 0, 0, 0)
        assert cc.quadratic_zero
        assert cc.vacuous
        assert not cc.contradiction

    def test_matches_direct_normalization(self):
        got = constraint_conic((0, 0), (1, 0), (2, 1), (0, 0), (2, 0), (1, 3))
        want = from_normalized(2, 2, 1, 1, 3)
        assert got == want

    def test_similarity_invariance(self):
        # rotate both planes by 3-4-5 and translate: same conic
        base = constraint_conic((0, 0), (1, 0), (2, 1), (0, 0), (2, 0), (1, 3))
        R = Isometry.rotation(Fraction(3, 5), Fraction(4, 5), about=(0, 0))
        S = Isometry.translation(7, -2)
        a = [R.apply(p) for p in [(0, 0), (1, 0), (2, 1)]]
        b = [S.apply(p) for p in [(0, 0), (2, 0), (1, 3)]]
        got = constraint_conic(a[0], a[1], a[2], b[0], b[1], b[2])
        assert got == base

    def test_value_on_system_solutions(self):
        # (u, v) admitting an (x, y) with the three distance relations must
        # satisfy the quadric; reproduce one solution by hand
        cc = constraint_conic((0, 0), (1, 0), (2, 1), (0, 0), (2, 0), (1, 3))
        # choose u, solve the two linear relations for x, y, then check the
        # defining distance identity x^2 + y^2 = u^2 + v^2 forces value 0
        L, a, b, c, d = cc.L, cc.a, cc.b, cc.c, cc.d
        for u in (Fraction(0), Fraction(1), Fraction(-2), Fraction(5, 2)):
            for v in (Fraction(0), Fraction(1), Fraction(-3)):
                x = L * u + (1 - L * L) / 2
                y = (c * u + d * v - a * x + (a * a + b * b - c * c - d * d) / 2) / b
                lhs = x * x + y * y
                rhs = u * u + v * v
                assert (lhs == rhs) == (cc.value(u, v) == 0)

    def test_irrational_similarity_ratio_unsupported(self):
        # |p_j p_l| / |p_i p_k| = sqrt 2: no rational normal form exists
        with pytest.raises(UnsupportedScalar):
            constraint_conic((0, 0), (1, 0), (2, 1), (0, 0), (1, 1), (1, 3))

    def test_equal_distance_precondition(self):
        with pytest.raises(PreconditionError):
            constraint_conic((0, 0), (1, 0), (2, 1), (0, 0), (1, 0), (2, 5))


class TestLineCase:
    def host(self):
        return Config(
            PointSet(CUBIC, [(2, 8)]),
            PointSet(X_AXIS, [(0, 0)]),
        )

    def fc(self, i, j, p_i, p_j):
        from curvedist.harness import four_curve_from_anchors

        return four_curve_from_anchors(i, j, p_i, p_j, X_AXIS)

    def test_worked_example(self):
        cij = self.fc(1, 2, (0, 1), (0, 2))
        ckl = self.fc(3, 4, (1, 1), (1, 3))
        pts = line_case_intersection(cij, ckl, self.host())
        assert len(pts) == 1
        (x, xp) = pts[0]
        assert (x, xp) == (Scalar(Fraction(-37, 20)), Scalar(Fraction(13, 20)))
        # verify on both hyperbolas
        assert x**2 - xp**2 == Scalar(3)
        assert (x - 1) ** 2 - (xp - 1) ** 2 == Scalar(8)

    def test_equal_distaccording_guard(self):
        cij = self.fc(1, 2, (0, 1), (0, 2))
        ckl = self.fc(3, 4, (3, 1), (3, 2))
        with pytest.raises(PreconditionError):
            line_case_intersection(cij, ckl, self.host())

    def test_assumption_5_guard(self):
        cij = self.fc(1, 2, (0, 1), (4, -1))  # |b_i| = |b_j|
        ckl = self.fc(3, 4, (1, 2), (2, 5))
        with pytest.raises(AssumptionViolation):
            line_case_intersection(cij, ckl, self.host())

    def test_assumption_6_guard(self):
        cij = self.fc(1, 2, (0, 1), (5, 2))
        ckl = self.fc(3, 4, (0, 3), (1, 4))  # shares x = 0 with cij's source
        with pytest.raises(AssumptionViolation):
            line_case_intersection(cij, ckl, self.host())

    def test_c2_must_be_x_axis(self):
        cfg = Config(PointSet(CUBIC, [(2, 8)]), PointSet(line_curve(0, 1, -5), [(0, 5)]))
        cij = self.fc(1, 2, (0, 1), (0, 2))
        ckl = self.fc(3, 4, (1, 1), (1, 3))
        with pytest.raises(PreconditionError):
            line_case_intersection(cij, ckl, cfg)

    def test_bounded_by_four_on_random_quadruples(self):
        from curvedist.harness import random_line_case_quadruple

        rng = random.Random(20)
        seen = 0
        while seen < 40:
            got = random_line_case_quadruple(rng)
            if got is None:
                continue
            cij, ckl, host = got
            pts = line_case_intersection(cij, ckl, host)
            assert len(pts) <= 4
            seen += 1


class TestPartition:
    def test_frozen_cubic_partition(self):
        cfg = cubic_config([1, 2, 3, 4], [-2, -1, 5, 6])
        pr = partition(cfg)
        assert [(fc.i, fc.j) for fc in pr.gamma0] == [(1, 1), (2, 2), (3, 3), (4, 4)]
        assert len(pr.classes) == 1
        assert len(pr.classes[0]) == 12
        assert pr.p0 == ((1, 1), (2, 2), (3, 3), (4, 4))
        assert pr.L == 3**4 + 1

    def test_symmetric_anchors_enlarge_gamma0(self):
        cfg = cubic_config([-2, -1, 1, 2], [3, 4, 5])
        pr = partition(cfg)
        got = sorted((fc.i, fc.j) for fc in pr.gamma0)
        assert got == [
            (1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (4, 1), (4, 4),
        ]

    def test_invariants(self):
        cfg = cubic_config([1, 2, 3], [-4, 0, 4, 7])
        pr = partition(cfg)
        d, m = cfg.d, cfg.m
        assert len(pr.gamma0) <= 4 * d * m
        assert 1 <= len(pr.classes) <= pr.L
        # every curve appears exactly once
        seen = [(fc.i, fc.j) for fc in pr.gamma0]
        for cls in pr.classes:
            seen.extend((fc.i, fc.j) for fc in cls)
        assert sorted(seen) == [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]

    def test_no_conflict_within_class(self):
        cfg = cubic_config([1, 2, 3, 4], [-2, -1, 5, 6])
        pr = partition(cfg)
        for cls in pr.classes:
            for a in range(len(cls)):
                for b in range(a + 1, len(cls)):
                    ci, cj = cls[a], cls[b]
                    if ci.p_i == cj.p_i:
                        continue
                    if sqdist(ci.p_i, cj.p_i) != sqdist(ci.p_j, cj.p_j):
                        continue
                    got = same_distance_symmetry_test(cfg, ci.i, ci.j, cj.i, cj.j)
                    assert isinstance(got, NoSymmetry)

    def test_line_host_has_empty_gamma0(self):
        cfg = Config(
            PointSet(CUBIC, on_cubic([1, 2])),
            PointSet(X_AXIS, on_line(0, [0, 1, 2])),
        )
        pr = partition(cfg)
        assert pr.gamma0 == ()


class TestGenericProjection:
    def test_permutation_matrix_recovers_line_case_hyperbola(self):
        # projecting to (x, x') over the x-axis eliminates y = y' = 0 and
        # leaves exactly the line-case hyperbola
        cfg = Config(
            PointSet(CUBIC, [(0, 0), (1, 1)]),
            PointSet(X_AXIS, on_line(0, [1, 2, 3])),
        )
        fc = four_curve(cfg, 1, 2)  # anchors (0,0) and (1,1)
        M = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        rep = generic_projection(cfg, [fc], matrix=M)
        assert rep.retries == 0
        got = rep.plane_curves[0]
        # (x - 0)^2 - (x' - 1)^2 - (1 - 0) = x^2 - y^2 + 2y - 2 in plane vars
        want = curve_poly("x^2 - y^2 + 2*y - 2")
        from curvedist.mpoly import try_exact_div

        assert try_exact_div(got, want) is not None or try_exact_div(want, got) is not None

    def test_incidences_preserved(self):
        # anchors on the cubic, samples on a line: elimination stays cheap
        cfg = Config(
            PointSet(CUBIC, on_cubic([1, 2])),
            PointSet(X_AXIS, on_line(0, [-1, 0, 2])),
        )
        fcs = build_four_curves(cfg)
        rep = generic_projection(cfg, fcs, seed=3)
        assert rep.incidences_before == rep.incidences_after
        assert len(rep.images) == cfg.n**2

    def test_injective_images(self):
        cfg = Config(
            PointSet(CUBIC, on_cubic([1, 2])),
            PointSet(X_AXIS, on_line(0, [-2, 1, 3])),
        )
        rep = generic_projection(cfg, build_four_curves(cfg), seed=1)
        assert len(set(rep.images)) == len(rep.images) == cfg.n**2

    def test_degree_two_host(self):
        parab = PlaneCurve(curve_poly("y - x^2"), family="graph")
        cfg = Config(
            PointSet(parab, [(1, 1), (2, 4)]),
            PointSet(parab, [(-1, 1), (0, 0), (3, 9)]),
        )
        rep = generic_projection(cfg, build_four_curves(cfg)[:2], seed=5)
        assert rep.incidences_before == rep.incidences_after

    def test_bad_matrix_rejected(self):
        cfg = cubic_config([1], [2, 3])
        singular = [[1, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
        from curvedist.errors import InputError

        with pytest.raises(InputError):
            generic_projection(cfg, build_four_curves(cfg), matrix=singular)
