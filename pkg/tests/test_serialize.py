"""Loss-free JSON/CSV round trips for every value kind."""

import json
from fractions import Fraction

import pytest

from curvedist.curves import PlaneCurve, PointSet, circle_curve, curve_poly, line_curve
from curvedist.elekes import Config
from curvedist.errors import InputError
from curvedist.isometry import Isometry
from curvedist.scalar import Scalar
from curvedist.serialize import (
    COUNT_COLUMNS,
    config_from_json,
    config_to_json,
    curve_from_json,
    curve_to_json,
    dump_json,
    isometry_from_json,
    isometry_to_json,
    load_json,
    point_from_json,
    point_to_json,
    pointset_from_json,
    pointset_to_json,
    rows_to_csv,
    scalar_from_json,
    scalar_to_json,
)


class TestScalarJson:
    def test_integer_compact(self):
        assert scalar_to_json(Scalar(7)) == 7
        assert scalar_from_json(7) == Scalar(7)

    def test_fraction_string(self):
        assert scalar_to_json(Scalar(Fraction(-3, 4))) == "-3/4"
        assert scalar_from_json("-3/4") == Scalar(Fraction(-3, 4))

    def test_radical_object(self):
        s = Scalar(Fraction(1, 2), Fraction(-3, 4), 5)
        blob = scalar_to_json(s)
        assert blob == {"a": "1/2", "b": "-3/4", "k": 5}
        assert scalar_from_json(blob) == s

    def test_bool_rejected(self):
        with pytest.raises(InputError):
            scalar_from_json(True)

    def test_round_trip_via_text(self):
        for s in (Scalar(0), Scalar(-2), Scalar(Fraction(22, 7)), Scalar(1, 1, 2)):
            assert scalar_from_json(json.loads(json.dumps(scalar_to_json(s)))) == s


class TestPointJson:
    def test_round_trip(self):
        p = (Scalar(3), Scalar(Fraction(-1, 2)))
        assert point_from_json(point_to_json(p)) == p

    def test_bad_shape(self):
        with pytest.raises(InputError):
            point_from_json([1, 2, 3])


class TestCurveJson:
    def test_string_form_detects_family(self):
        c = curve_from_json("x^2 + y^2 - 9")
        assert c.family == "circle"
        L = curve_from_json("2*x - y + 1")
        assert L.family == "line"
        g = curve_from_json("y - x^3")
        assert g.family == "graph"

    def test_object_form(self):
        c = curve_from_json({"f": "x^4 + y^4 - 1", "irreducible": True})
        assert c.degree == 4
        assert c.irreducible

    def test_round_trip(self):
        for c in (circle_curve(1, -2, 3), line_curve(2, 1, -4),
                  PlaneCurve(curve_poly("x^3 - y^2 + 1"))):
            again = curve_from_json(curve_to_json(c))
            assert again == c
            assert again.family == c.family

    def test_garbage_rejected(self):
        with pytest.raises(InputError):
            curve_from_json(17)
        with pytest.raises(InputError):
            curve_from_json({"nope": 1})


class TestPointSetJson:
    def test_bare_list(self):
        L = line_curve(0, 1, 0)
        ps = pointset_from_json([[0, 0], [1, 0]], L)
        assert len(ps) == 2

    def test_points_key_round_trip(self):
        L = line_curve(0, 1, 0)
        ps = PointSet(L, [(0, 0), (Fraction(1, 2), 0)])
        again = pointset_from_json(pointset_to_json(ps), L)
        assert list(again.points) == list(ps.points)

    def test_generator_spec(self):
        L = line_curve(1, -1, 0)
        ps = pointset_from_json({"count": 4, "start": 2}, L)
        assert len(ps) == 4
        assert ps[0] == (Scalar(2), Scalar(2))

    def test_generator_needs_count(self):
        with pytest.raises(InputError):
            pointset_from_json({"mode": "random"}, line_curve(0, 1, 0))

    def test_off_curve_point_rejected(self):
        with pytest.raises(InputError):
            pointset_from_json([[0, 1]], line_curve(0, 1, 0))


class TestConfigJson:
    def test_two_curve_config(self):
        blob = {
            "c1": "y",
            "c2": "y - 5",
            "s1": [[0, 0], [1, 0]],
            "s2": [[0, 5], [2, 5]],
            "seed": 3,
        }
        cfg, seed = config_from_json(blob)
        assert seed == 3
        assert (cfg.m, cfg.n) == (2, 2)

    def test_null_c2_splits_in_half(self):
        blob = {"c1": "y - x^3", "c2": None, "s1": [[x, x**3] for x in (1, 2, 3, 4, 5)]}
        cfg, _ = config_from_json(blob)
        assert (cfg.m, cfg.n) == (3, 2)
        assert cfg.c1 == cfg.c2

    def test_generator_specs_with_seeds(self):
        blob = {
            "c1": "y",
            "c2": "y - 1",
            "s1": {"count": 3, "mode": "random"},
            "s2": {"count": 3, "mode": "random"},
            "seed": 9,
        }
        cfg, seed = config_from_json(blob)
        assert (cfg.m, cfg.n) == (3, 3)
        # the two sets draw from distinct streams
        assert {p[0] for p in cfg.s1.points} != {p[0] for p in cfg.s2.points}

    def test_round_trip(self):
        cfg = Config(
            PointSet(line_curve(0, 1, 0), [(0, 0), (1, 0)]),
            PointSet(circle_curve(0, 0, 5), [(3, 4), (5, 0)]),
        )
        again, seed = config_from_json(config_to_json(cfg, seed=4))
        assert seed == 4
        assert list(again.s1.points) == list(cfg.s1.points)
        assert list(again.s2.points) == list(cfg.s2.points)
        assert again.c1 == cfg.c1 and again.c2 == cfg.c2

    def test_missing_keys(self):
        with pytest.raises(InputError):
            config_from_json({"c1": "y"})
        with pytest.raises(InputError):
            config_from_json({"c1": "y", "s1": [[0, 0]], "c2": "y - 1"})

    def test_single_point_cannot_split(self):
        with pytest.raises(InputError):
            config_from_json({"c1": "y", "c2": None, "s1": [[0, 0]]})


class TestIsometryJson:
    def test_round_trip(self):
        for T in (
            Isometry.identity(),
            Isometry(Fraction(3, 5), Fraction(4, 5), -1, Fraction(1, 2), -2),
            Isometry.translation(1, 2),
        ):
            assert isometry_from_json(isometry_to_json(T)) == T


class TestCsvAndJsonText:
    def test_rows_to_csv(self):
        rows = [
            {"m": 2, "n": 2, "D": 2, "Q": 8, "bound": Fraction(16, 2), "I": 8,
             "classes": 1, "gamma0_size": 0},
            {"m": 3, "n": 4, "D": 7, "Q": 30, "bound": Fraction(144, 7), "I": None,
             "classes": None, "gamma0_size": None},
        ]
        text = rows_to_csv(rows, COUNT_COLUMNS)
        lines = text.strip().split("\n")
        assert lines[0] == "m,n,D,Q,bound,I,classes,gamma0_size"
        assert lines[1] == "2,2,2,8,8,8,1,0"
        assert lines[2] == "3,4,7,30,144/7,,,"

    def test_float_cells_fixed_precision(self):
        text = rows_to_csv([{"x": 0.1234567890}], ["x"])
        assert text.strip().split("\n")[1] == "0.123457"

    def test_dump_json_stable(self):
        a = dump_json({"b": 1, "a": [1, 2]})
        b = dump_json({"a": [1, 2], "b": 1})
        assert a == b
        assert a.endswith("\n")

    def test_dump_and_load_path(self, tmp_path):
        path = tmp_path / "out.json"
        dump_json({"k": "v"}, str(path))
        assert load_json(str(path)) == {"k": "v"}

    def test_load_json_from_text(self):
        assert load_json('{"x": 1}') == {"x": 1}
