"""JSON and CSV input/output.

Scalars serialize as "p/q" strings (plain int when integral) or as
{"a", "b", "k"} objects for quadratic-field values; polynomials as their
text form when the coefficients are rational, otherwise term by term.
Everything is loss-free: parsing the emitted form gives back equal values.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Mapping, Sequence

from .curves import PlaneCurve, PointSet, curve_poly, generate_points
from .errors import InputError
from .isometry import AffineMap, Isometry
from .mpoly import MPoly
from .scalar import Scalar


# ---------------------------------------------------------------------------
# Scalars and points


def scalar_to_json(s) -> object:
    s = Scalar.coerce(s)
    if s.is_rational:
        f = s.as_fraction()
        if f.denominator == 1:
            return int(f)
        return str(f)
    return {"a": str(s.a), "b": str(s.b), "k": s.k}


def scalar_from_json(v) -> Scalar:
    if isinstance(v, bool):
        raise InputError("booleans are not numbers")
    if isinstance(v, int):
        return Scalar(v)
    if isinstance(v, str):
        try:
            return Scalar(Fraction(v))
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad rational {v!r}: {e}")
    if isinstance(v, Mapping):
        try:
            return Scalar(Fraction(str(v["a"])), Fraction(str(v.get("b", 0))), int(v.get("k", 0)))
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad scalar object {v!r}: {e}")
    if isinstance(v, float):
        raise InputError("floats are inexact; pass \"p/q\" strings")
    raise InputError(f"cannot read a number from {v!r}")


def point_to_json(p) -> list:
    return [scalar_to_json(p[0]), scalar_to_json(p[1])]


def point_from_json(v) -> tuple[Scalar, Scalar]:
    if not isinstance(v, Sequence) or len(v) != 2:
        raise InputError(f"a point is a pair, got {v!r}")
    return (scalar_from_json(v[0]), scalar_from_json(v[1]))


# ---------------------------------------------------------------------------
# Curves and point sets


def curve_to_json(curve: PlaneCurve) -> dict:
    out: dict = {"family": curve.family, "irreducible": curve.irreducible}
    if curve.f.is_rational():
        out["f"] = curve.f.to_string()
    else:
        out["terms"] = [
            [list(exp), scalar_to_json(c)] for exp, c in curve.f.sorted_terms()
        ]
    return out


def auto_family(f: MPoly) -> str:
    """Most specific family tag the polynomial validates under."""
    for fam in ("line", "circle", "graph", "conic"):
        try:
            PlaneCurve(f, family=fam)
            return fam
        except InputError:
            continue
    return "general"


def curve_from_json(v) -> PlaneCurve:
    """Accepts a polynomial string or {"f"| "terms", "family", "irreducible"};
    without an explicit family the most specific tag is detected."""
    if isinstance(v, str):
        f = curve_poly(v)
        return PlaneCurve(f, family=auto_family(f))
    if not isinstance(v, Mapping):
        raise InputError(f"cannot read a curve from {v!r}")
    if "f" in v:
        f = curve_poly(str(v["f"]))
    elif "terms" in v:
        terms = {}
        for item in v["terms"]:
            exp, c = item
            terms[tuple(int(e) for e in exp)] = scalar_from_json(c)
        f = MPoly(("x", "y"), terms)
    else:
        raise InputError("curve object needs 'f' or 'terms'")
    return PlaneCurve(
        f,
        family=str(v["family"]) if "family" in v else auto_family(f),
        irreducible=bool(v.get("irreducible", False)),
    )


def pointset_to_json(ps: PointSet) -> dict:
    return {"points": [point_to_json(p) for p in ps]}


def pointset_from_json(v, curve: PlaneCurve, default_seed: int = 0) -> PointSet:
    """Explicit {"points": [...]} (or a bare list), or a generator spec
    {"mode", "count", "seed", "start", "through"}."""
    if isinstance(v, Sequence) and not isinstance(v, str):
        return PointSet(curve, [point_from_json(p) for p in v])
    if not isinstance(v, Mapping):
        raise InputError(f"cannot read points from {v!r}")
    if "points" in v:
        return PointSet(curve, [point_from_json(p) for p in v["points"]])
    if "count" not in v:
        raise InputError("point generator spec needs 'count'")
    through = v.get("through")
    return generate_points(
        curve,
        int(v["count"]),
        seed=int(v.get("seed", default_seed)),
        mode=str(v.get("mode", "arithmetic")),
        start=int(v.get("start", 0)),
        through=point_from_json(through) if through is not None else None,
    )


# ---------------------------------------------------------------------------
# Isometries and affine maps


def isometry_to_json(T: Isometry) -> dict:
    return {
        "kind": T.kind,
        "c": scalar_to_json(T.c),
        "s": scalar_to_json(T.s),
        "sigma": T.sigma,
        "t1": scalar_to_json(T.t1),
        "t2": scalar_to_json(T.t2),
    }


def isometry_from_json(v) -> Isometry:
    return Isometry(
        scalar_from_json(v["c"]),
        scalar_from_json(v["s"]),
        int(v["sigma"]),
        scalar_from_json(v.get("t1", 0)),
        scalar_from_json(v.get("t2", 0)),
    )


def affine_to_json(T: AffineMap) -> dict:
    (a, b), (c, d) = T.matrix()
    return {
        "matrix": [[scalar_to_json(a), scalar_to_json(b)], [scalar_to_json(c), scalar_to_json(d)]],
        "translation": [scalar_to_json(T.t1), scalar_to_json(T.t2)],
    }


# ---------------------------------------------------------------------------
# Configurations


def config_from_json(v) -> tuple:
    """Reads {"c1", "c2", "s1", "s2", "seed"} into (Config, seed).

    c2 may be omitted or null for a single-curve setup; s2 is then either
    given explicitly or obtained by splitting s1 in half (first ceil(n/2)
    points against the rest)."""
    from .elekes import Config

    if not isinstance(v, Mapping):
        raise InputError("config must be a JSON object")
    if "c1" not in v or "s1" not in v:
        raise InputError("config needs at least 'c1' and 's1'")
    seed = int(v.get("seed", 0))
    c1 = curve_from_json(v["c1"])
    same = v.get("c2") is None
    c2 = c1 if same else curve_from_json(v["c2"])
    s1 = pointset_from_json(v["s1"], c1, default_seed=seed)
    if "s2" in v and v["s2"] is not None:
        s2 = pointset_from_json(v["s2"], c2, default_seed=seed + 1)
    elif same:
        pts = list(s1.points)
        half = (len(pts) + 1) // 2
        if half == len(pts):
            raise InputError("too few points to split one set into two")
        s1 = PointSet(c1, pts[:half])
        s2 = PointSet(c2, pts[half:])
    else:
        raise InputError("config needs 's2' when c2 is given")
    return Config(s1, s2), seed


def config_to_json(config, seed: int = 0) -> dict:
    return {
        "c1": curve_to_json(config.c1),
        "c2": curve_to_json(config.c2),
        "s1": pointset_to_json(config.s1),
        "s2": pointset_to_json(config.s2),
        "seed": seed,
    }


# ---------------------------------------------------------------------------
# Reports

COUNT_COLUMNS = ["m", "n", "D", "Q", "bound", "I", "classes", "gamma0_size"]


def count_report_to_json(row: Mapping) -> dict:
    return {k: row.get(k) for k in COUNT_COLUMNS}


def rows_to_csv(rows: Sequence[Mapping], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: _csv_cell(row.get(k)) for k in columns})
    return buf.getvalue()


def _csv_cell(v) -> object:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return f"{v:.6f}"
    return v


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def load_json(path_or_text: str):
    """Reads JSON from a file path, or from the text itself when it looks
    like an inline literal."""
    stripped = path_or_text.strip()
    if stripped.startswith(("{", "[", '"')) or stripped.isdigit():
        return json.loads(stripped)
    with open(path_or_text) as fh:
        return json.load(fh)
