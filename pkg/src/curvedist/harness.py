"""Scenario runner, growth-exponent estimation, and the verification suites.

A scenario fixes host curves and point generators, then walks a ladder of
(m, n) sizes, counting distances, quadruples, and incidences at each size.
All counts are exact; only the fitted log-log slope uses floating point,
and it is never fed back into an exact assertion.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .curves import (
    CommonComponent,
    FinitePoints,
    PlaneCurve,
    PointSet,
    _coord_interval,
    box_eval,
    curve_poly,
    intersect_curves,
)
from .elekes import (
    Config,
    FourCurve,
    R4,
    SymmetryFound,
    _distance_form,
    build_four_curves,
    constraint_conic,
    count_incidences,
    distance_set,
    incidence,
    line_case_intersection,
    normalize_config,
    partition,
    quadruple_report,
    same_distance_symmetry_test,
    sqdist,
)
from .errors import ExcludedPair, InputError, PreconditionError
from .isometry import fixes_curve
from .mpoly import MPoly, det_bareiss, resultant, sylvester_matrix
from .scalar import Scalar
from .serialize import curve_from_json, pointset_from_json
from .symmetry import FiniteSymmetries, find_symmetries
from .upoly import UPoly, isolate_real_roots, root_bounds

DISTANCE_CAP = 400
INCIDENCE_CAP = 16
SUPERLINEAR_SLOPE = 4.0 / 3.0 - 0.05

REGIMES = ("exceptional-linear", "superlinear")


# ---------------------------------------------------------------------------
# Scenarios


@dataclass(frozen=True)
class Scenario:
    """A config template plus a ladder of (m, n) sizes.

    The template fixes the curves and the per-set point generator specs; the
    ladder supplies each generator's count.  c2 None puts both sets on c1,
    drawing m + n points from the s1 generator and splitting them."""

    name: str
    c1: PlaneCurve
    c2: Optional[PlaneCurve]
    s1_spec: Mapping
    s2_spec: Optional[Mapping]
    ladder: tuple[tuple[int, int], ...]
    seed: int = 0
    regime: str = "superlinear"
    distance_cap: int = DISTANCE_CAP

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise InputError(f"unknown regime {self.regime!r}")
        if not self.ladder:
            raise InputError("ladder is empty")
        prev = None
        for m, n in self.ladder:
            if m < 1 or n < 1:
                raise InputError("ladder sizes must be positive")
            if max(m, n) > self.distance_cap:
                raise InputError(f"ladder size ({m}, {n}) above the cap {self.distance_cap}")
            if prev is not None and (n <= prev[1] or m < prev[0]):
                raise InputError("ladder must increase strictly in n (m nondecreasing)")
            prev = (m, n)
        for spec in (self.s1_spec, self.s2_spec):
            if spec is not None and "points" in spec:
                raise InputError("scenario point sets must be generator specs, not fixed lists")


def scenario_from_json(v, distance_cap: Optional[int] = None) -> Scenario:
    if not isinstance(v, Mapping):
        raise InputError("scenario must be a JSON object")
    try:
        c1 = curve_from_json(v["c1"])
        ladder = tuple((int(m), int(n)) for m, n in v["ladder"])
        s1_spec = dict(v["s1"])
    except KeyError as e:
        raise InputError(f"scenario is missing {e}")
    except (TypeError, ValueError) as e:
        raise InputError(f"bad scenario field: {e}")
    c2 = curve_from_json(v["c2"]) if v.get("c2") is not None else None
    s2_spec = dict(v["s2"]) if v.get("s2") is not None else None
    if c2 is not None and s2_spec is None:
        raise InputError("a scenario with a second curve needs 's2'")
    if distance_cap is None:
        distance_cap = int(v.get("distance_cap", DISTANCE_CAP))
    return Scenario(
        name=str(v.get("name", "scenario")),
        c1=c1,
        c2=c2,
        s1_spec=s1_spec,
        s2_spec=s2_spec,
        ladder=ladder,
        seed=int(v.get("seed", 0)),
        regime=str(v.get("regime", "superlinear")),
        distance_cap=distance_cap,
    )


@dataclass(frozen=True)
class RunRow:
    m: int
    n: int
    d_count: int
    q_count: int
    bound: Fraction
    incidences: Optional[int]  # None above the enumeration cap
    wall_time: float

    def as_dict(self) -> dict:
        # wall_time deliberately omitted: emitted reports must be
        # byte-identical across reruns
        return {
            "m": self.m,
            "n": self.n,
            "D": self.d_count,
            "Q": self.q_count,
            "bound": str(self.bound),
            "I": self.incidences,
        }


@dataclass(frozen=True)
class RunReport:
    name: str
    regime: str
    rows: tuple[RunRow, ...]
    slope: Optional[float]
    passed: bool
    excluded_case: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "regime": self.regime,
            "rows": [r.as_dict() for r in self.rows],
            "slope": None if self.slope is None else round(self.slope, 6),
            "passed": self.passed,
            "excluded_case": self.excluded_case,
        }


def _scenario_config(s: Scenario, m: int, n: int) -> Config:
    if s.c2 is None:
        spec = dict(s.s1_spec)
        spec["count"] = m + n
        pts = pointset_from_json(spec, s.c1, default_seed=s.seed)
        seq = list(pts.points)
        return Config(PointSet(s.c1, seq[:m]), PointSet(s.c1, seq[m:]))
    spec1 = dict(s.s1_spec)
    spec1["count"] = m
    spec2 = dict(s.s2_spec)
    spec2["count"] = n
    s1 = pointset_from_json(spec1, s.c1, default_seed=s.seed)
    s2 = pointset_from_json(spec2, s.c2, default_seed=s.seed + 1)
    return Config(s1, s2)


def run_scenario(s: Scenario, incidence_cap: int = INCIDENCE_CAP) -> RunReport:
    """Walks the ladder: normalize, count distances and quadruples, and
    enumerate incidences when the sizes permit.

    An excluded curve pair (the linear counterexamples) is reported by name
    and counted on the raw configuration: the counting identities hold with
    or without normalization, only the growth lemmas need it."""
    rows = []
    excluded = None
    for m, n in s.ladder:
        t0 = time.monotonic()
        raw = _scenario_config(s, m, n)
        try:
            cfg, _ = normalize_config(raw)
        except ExcludedPair as e:
            excluded = e.case
            cfg = raw
        rep = quadruple_report(cfg)
        d_count = len(distance_set(cfg.s1, cfg.s2))
        if d_count != rep.d_count:
            raise AssertionError("distance set size disagrees with the quadruple report")
        if rep.q_count * d_count < cfg.m**2 * cfg.n**2:
            raise AssertionError("quadruple lower bound violated")
        inc = None
        if cfg.m <= incidence_cap and cfg.n <= incidence_cap:
            inc = count_incidences(cfg)
            if inc != rep.q_count:
                raise AssertionError(
                    f"incidence count {inc} disagrees with quadruple count {rep.q_count}"
                )
        rows.append(
            RunRow(
                m=cfg.m,
                n=cfg.n,
                d_count=d_count,
                q_count=rep.q_count,
                bound=rep.bound,
                incidences=inc,
                wall_time=time.monotonic() - t0,
            )
        )
    slope = None
    if len(rows) >= 3:
        slope = estimate_exponent([(r.n, r.d_count) for r in rows])
    if s.regime == "exceptional-linear":
        passed = all(r.d_count <= 2 * r.n for r in rows)
    else:
        passed = slope is not None and slope >= SUPERLINEAR_SLOPE
    return RunReport(
        name=s.name,
        regime=s.regime,
        rows=tuple(rows),
        slope=slope,
        passed=passed,
        excluded_case=excluded,
    )


def estimate_exponent(rows: Sequence[tuple[int, int]]) -> float:
    """Least-squares slope of log |D| against log n, fitted through the
    origin (a pure power-law exponent); reporting only."""
    if len(rows) < 3:
        raise InputError("exponent estimation needs at least 3 rows")
    ns = [n for n, _ in rows]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise InputError("sizes must increase strictly")
    if any(d <= 0 for _, d in rows):
        raise InputError("distance counts must be positive")
    xs = [math.log(n) for n, _ in rows]
    ys = [math.log(d) for _, d in rows]
    return sum(x * y for x, y in zip(xs, ys)) / sum(x * x for x in xs)


# ---------------------------------------------------------------------------
# Random instance generators (shared with the test suites)

_XAXIS = PlaneCurve(curve_poly("y"), family="line")
_CUBIC = PlaneCurve(curve_poly("y - x^3"), family="graph")

_ROTATIONS = (
    (Fraction(1), Fraction(0)),
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(8, 17), Fraction(15, 17)),
)


def cubic_config(rng: random.Random, m: int, n: int) -> Config:
    """m + n distinct points on y = x^3 split into the two sets."""
    xs = rng.sample(range(-40, 41), m + n)
    pts = [(Scalar(x), Scalar(x) ** 3) for x in xs]
    return Config(PointSet(_CUBIC, pts[:m]), PointSet(_CUBIC, pts[m:]))


def four_curve_from_anchors(i: int, j: int, p_i, p_j, c2: PlaneCurve) -> FourCurve:
    """A distance curve for explicit anchor points over the host c2."""
    p_i = (Scalar.coerce(p_i[0]), Scalar.coerce(p_i[1]))
    p_j = (Scalar.coerce(p_j[0]), Scalar.coerce(p_j[1]))
    f2 = c2.f
    return FourCurve(
        i=i,
        j=j,
        p_i=p_i,
        p_j=p_j,
        f2_s=f2.with_vars(R4),
        f2_t=f2.rename_vars({"x": "xp", "y": "yp"}).with_vars(R4),
        F=_distance_form(p_i, p_j),
    )


def random_line_case_quadruple(rng: random.Random):
    """Two distance curves over the x-axis meeting the line-case
    preconditions, or None when the draw violates one of them."""
    pts = []
    seen_a: set[int] = set()
    while len(pts) < 4:
        a, b = rng.randint(-9, 9), rng.randint(1, 9) * rng.choice((1, -1))
        if a in seen_a:
            continue
        seen_a.add(a)
        pts.append((Scalar(a), Scalar(b)))
    p_i, p_j, p_k, p_l = pts
    if sqdist(p_i, p_k) == sqdist(p_j, p_l):
        return None
    if p_i[1] * p_i[1] == p_j[1] * p_j[1] or p_k[1] * p_k[1] == p_l[1] * p_l[1]:
        return None
    cij = four_curve_from_anchors(1, 2, p_i, p_j, _XAXIS)
    ckl = four_curve_from_anchors(3, 4, p_k, p_l, _XAXIS)
    host = Config(
        PointSet(_CUBIC, [(2, 8)]),
        PointSet(_XAXIS, [(0, 0)]),
    )
    return cij, ckl, host


def random_conic_sextuple(rng: random.Random):
    """Six rational points meeting the different-distances preconditions,
    with the second anchor pair a rotated copy scaled by a rational L."""

    def pt():
        return (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))

    for _ in range(500):
        p_i, p_k, p_q, p_j = pt(), pt(), pt(), pt()
        if p_i == p_k:
            continue
        dx, dy = p_k[0] - p_i[0], p_k[1] - p_i[1]
        qx, qy = p_q[0] - p_i[0], p_q[1] - p_i[1]
        if dx * qy - dy * qx == 0:  # p_q on the anchor line makes b = 0
            continue
        L = rng.choice((Fraction(2), Fraction(3), Fraction(1, 2), Fraction(3, 2), Fraction(2, 3)))
        c_, s_ = rng.choice(_ROTATIONS)
        sg = rng.choice((1, -1))
        p_l = (p_j[0] + L * (c_ * dx - sg * s_ * dy), p_j[1] + L * (s_ * dx + sg * c_ * dy))
        p_r = pt()
        if sqdist(p_i, p_q) == sqdist(p_j, p_r) or sqdist(p_k, p_q) == sqdist(p_l, p_r):
            continue
        return p_i, p_k, p_q, p_j, p_l, p_r
    raise AssertionError("failed to draw an admissible sextuple")


def conic_solution_check(conic, grid: Sequence[Fraction]):
    """Independent elimination oracle for a constraint quadric.

    For each gridded (u, v) the two linear relations are solved for (x, y)
    from scratch; membership in the full distance system must then agree
    with the quadric vanishing.  Returns (solutions_seen, mismatch)."""
    L, a, b, c, d = conic.L, conic.a, conic.b, conic.c, conic.d
    if b == 0:
        raise PreconditionError("oracle needs the third anchor off the base line")
    seen = 0

    def system_holds(u, v):
        x = L * u + (1 - L * L) / 2
        y = (c * u + d * v - a * x + (a * a + b * b - c * c - d * d) / 2) / b
        return (
            x * x + y * y == u * u + v * v
            and (x - 1) ** 2 + y * y == (u - L) ** 2 + v * v
            and (x - a) ** 2 + (y - b) ** 2 == (u - c) ** 2 + (v - d) ** 2
        )

    for u in grid:
        for v in grid:
            holds = system_holds(u, v)
            on_quadric = conic.value(u, v) == 0
            if holds != on_quadric:
                return seen, (u, v)
            seen += holds
        # rational points of the quadric above this u must solve the system
        A = conic.vv
        B = conic.uv * u + conic.lv
        C = conic.uu * u * u + conic.lu * u + conic.const
        for v in _quadratic_rational_roots(A, B, C):
            if not system_holds(u, v):
                return seen, (u, v)
            seen += 1
    return seen, None


def _quadratic_rational_roots(A: Fraction, B: Fraction, C: Fraction) -> list[Fraction]:
    if A == 0:
        if B == 0:
            return []
        return [-C / B]
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    r = _sqrt_fraction(disc)
    if r is None:
        return []
    return sorted({(-B + r) / (2 * A), (-B - r) / (2 * A)})


def _sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# Verification suites


@dataclass(frozen=True)
class SuiteResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""
    counterexample: Optional[dict] = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = {k: str(v) for k, v in self.counterexample.items()}
        return out


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[SuiteResult, ...]
    budget: int

    @property
    def all_passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def as_dict(self) -> dict:
        return {
            "budget": self.budget,
            "all_passed": self.all_passed,
            "results": [r.as_dict() for r in self.results],
        }


def _suite_scalar_axioms(rng: random.Random):
    def draw():
        return Scalar(
            Fraction(rng.randint(-40, 40), rng.randint(1, 12)),
            Fraction(rng.randint(-40, 40), rng.randint(1, 12)),
            2,
        )

    for _ in range(60):
        a, b, c = draw(), draw(), draw()
        if (a + b) * c != a * c + b * c:
            return False, "distributivity failed", {"a": a, "b": b, "c": c}
        if a * (b * c) != (a * b) * c:
            return False, "associativity failed", {"a": a, "b": b, "c": c}
        if a and a * a.inverse() != Scalar(1):
            return False, "inverse failed", {"a": a}
        lo, hi = a.bounds()
        if lo > hi:
            return False, "empty enclosure", {"a": a}
    return True, "60 random triples over the sqrt-2 field", None


def _suite_root_isolation(rng: random.Random):
    for trial in range(25):
        coeffs = [Scalar(rng.randint(-6, 6)) for _ in range(rng.randint(3, 5))]
        coeffs.append(Scalar(rng.randint(1, 6)))
        sf = UPoly(coeffs).squarefree_part()
        roots = isolate_real_roots(sf)
        changes = 0
        grid = [Fraction(k, 4) for k in range(-48, 49)]
        signs = [sf(Scalar(g)).sign() for g in grid]
        for u, v in zip(signs, signs[1:]):
            if u != 0 and v != 0 and u != v:
                changes += 1
        inside = 0
        for r in roots:
            lo, hi = root_bounds(r, Fraction(1, 8))
            if hi > -13 and lo < 13:
                inside += 1
        if inside < changes:
            return False, "missed a sign change", {"coeffs": coeffs, "trial": trial}
    return True, "isolation dominates grid sign changes on 25 polynomials", None


def _rand_bipoly(rng: random.Random, deg: int) -> MPoly:
    vars2 = ("x", "y")
    terms = {}
    for ex in range(deg + 1):
        for ey in range(deg + 1 - ex):
            if rng.random() < 0.7:
                c = rng.randint(-5, 5)
                if c:
                    terms[(ex, ey)] = Scalar(c)
    terms[(0, deg)] = Scalar(rng.randint(1, 5))
    return MPoly(vars2, terms)


def _suite_resultant_oracle(rng: random.Random):
    checked = 0
    while checked < 12:
        f = _rand_bipoly(rng, 2)
        g = _rand_bipoly(rng, 2)
        if f.degree_in("y") < 1 or g.degree_in("y") < 1:
            continue
        quick = resultant(f, g, "y")
        slow = det_bareiss(sylvester_matrix(f, g, "y"))
        if quick != slow:
            return False, "remainder sequence disagrees with the Sylvester determinant", {
                "f": f.to_string(),
                "g": g.to_string(),
            }
        checked += 1
    return True, "12 random pairs against Sylvester determinants", None


def _suite_bezout(rng: random.Random):
    checked = 0
    while checked < 10:
        f = _rand_bipoly(rng, 2)
        g = _rand_bipoly(rng, 2)
        try:
            c1, c2 = PlaneCurve(f), PlaneCurve(g)
        except InputError:
            continue
        got = intersect_curves(c1, c2)
        if isinstance(got, FinitePoints):
            if len(got.points) > f.total_degree() * g.total_degree():
                return False, "isolated intersections above the degree product", {
                    "f": f.to_string(),
                    "g": g.to_string(),
                }
        elif not isinstance(got, CommonComponent):
            return False, "unknown intersection result", {"f": f.to_string()}
        checked += 1
    shared = curve_poly("x + y - 1")
    got = intersect_curves(
        PlaneCurve(shared * curve_poly("x - y")),
        PlaneCurve(shared * curve_poly("x + y + 3")),
    )
    if not isinstance(got, CommonComponent):
        return False, "missed a shared factor", {"shared": shared.to_string()}
    return True, "10 random pairs bounded; a shared factor is certified", None


def _suite_symmetry_group(rng: random.Random):
    quart = PlaneCurve(curve_poly("x^4 + y^4 - 1"), irreducible=True)
    got = find_symmetries(quart)
    if not isinstance(got, FiniteSymmetries) or len(got.members) != 8 or got.unrepresentable:
        return False, "quartic symmetry group is not the expected 8", {"got": got}
    members = set(got.members)
    for T in members:
        if not fixes_curve(T, quart):
            return False, "member does not fix the curve", {"T": T}
        for U in members:
            if T.compose(U) not in members:
                return False, "group not closed under composition", {"T": T, "U": U}
    return True, "8 members, closed, all fixing the curve", None


def _suite_incidence_agreement(rng: random.Random):
    """Three-way agreement: curve membership, the distance relation, and the
    quadruple count; a sign error in the distance form produces a witness."""
    for _ in range(8):
        cfg = cubic_config(rng, rng.randint(2, 4), rng.randint(2, 4))
        total = 0
        for fc in build_four_curves(cfg):
            for si, qs in enumerate(cfg.s2, start=1):
                for ti, qt in enumerate(cfg.s2, start=1):
                    by_curve = incidence(fc, qs, qt)
                    by_dist = sqdist(fc.p_i, qs) == sqdist(fc.p_j, qt)
                    if by_curve != by_dist:
                        return (
                            False,
                            "curve membership disagrees with the distance relation",
                            {"i": fc.i, "j": fc.j, "s": si, "t": ti},
                        )
                    total += by_curve
        rep = quadruple_report(cfg)
        if total != rep.q_count:
            return False, "incidence total differs from the quadruple count", {
                "I": total,
                "Q": rep.q_count,
            }
    return True, "8 random cubic configs, every tuple agrees", None


def _suite_cauchy_schwarz(rng: random.Random):
    for _ in range(12):
        cfg = cubic_config(rng, rng.randint(2, 5), rng.randint(2, 5))
        rep = quadruple_report(cfg)
        if rep.q_count * rep.d_count < cfg.m**2 * cfg.n**2:
            return False, "counting bound violated", {"m": cfg.m, "n": cfg.n}
        if sum(c for _, c in rep.histogram) != cfg.m * cfg.n:
            return False, "histogram mass is not m*n", {"m": cfg.m, "n": cfg.n}
        if sum(c * c for _, c in rep.histogram) != rep.q_count:
            return False, "quadruples are not the square sum", {"m": cfg.m, "n": cfg.n}
    return True, "12 random configs satisfy the counting identities", None


def _suite_line_case(rng: random.Random):
    done = 0
    while done < 25:
        inst = random_line_case_quadruple(rng)
        if inst is None:
            continue
        cij, ckl, host = inst
        pts = line_case_intersection(cij, ckl, host)
        if len(pts) > 4:
            return False, "more than four intersections", {
                "ij": (cij.p_i, cij.p_j),
                "kl": (ckl.p_i, ckl.p_j),
            }
        for x, xp in pts:
            if not _on_hyperbola(cij, x, xp) or not _on_hyperbola(ckl, x, xp):
                return False, "returned point misses a hyperbola", {"x": x, "xp": xp}
        done += 1
    return True, "25 admissible quadruples, all within the bound", None


def _hyperbola_poly(fc: FourCurve) -> MPoly:
    vars2 = ("x", "y")  # y stands for x'
    x = MPoly.var(vars2, "x")
    y = MPoly.var(vars2, "y")
    ai, bi = fc.p_i
    aj, bj = fc.p_j
    return (x - ai) ** 2 - (y - aj) ** 2 - (bj * bj - bi * bi)


def _on_hyperbola(fc: FourCurve, x, xp) -> bool:
    if isinstance(x, Scalar) and isinstance(xp, Scalar):
        ai, bi = fc.p_i
        aj, bj = fc.p_j
        return (x - ai) ** 2 - (xp - aj) ** 2 == bj * bj - bi * bi
    lo, hi = box_eval(_hyperbola_poly(fc), _coord_interval(x), _coord_interval(xp))
    return lo <= 0 <= hi


def _suite_constraint_conic(rng: random.Random):
    grid = [Fraction(t, 2) for t in range(-6, 7)]
    for _ in range(10):
        sextuple = random_conic_sextuple(rng)
        conic = constraint_conic(*sextuple)
        seen, mismatch = conic_solution_check(conic, grid)
        if mismatch is not None:
            return False, "oracle disagrees with the quadric", {
                "u": mismatch[0],
                "v": mismatch[1],
                "sextuple": sextuple,
            }
    return True, "10 sextuples, elimination oracle agrees on the full grid", None


def _suite_partition(rng: random.Random):
    for _ in range(3):
        cfg = cubic_config(rng, 3, 3)
        res = partition(cfg)
        d = cfg.d
        if len(res.classes) > d**4 + 1:
            return False, "too many classes", {"classes": len(res.classes)}
        if len(res.gamma0) > 4 * d * cfg.m:
            return False, "symmetric part too large", {"gamma0": len(res.gamma0)}
        for cls in res.classes:
            for a in range(len(cls)):
                for b in range(a + 1, len(cls)):
                    fa, fb = cls[a], cls[b]
                    if fa.p_i == fb.p_i:
                        continue
                    if sqdist(fa.p_i, fb.p_i) != sqdist(fa.p_j, fb.p_j):
                        continue
                    got = same_distance_symmetry_test(cfg, fa.i, fa.j, fb.i, fb.j)
                    if isinstance(got, SymmetryFound):
                        return False, "conflict edge inside a class", {
                            "a": (fa.i, fa.j),
                            "b": (fb.i, fb.j),
                        }
    return True, "3 cubic configs: class count, symmetric part, no internal edges", None


def _suite_normalization(rng: random.Random):
    circ = PlaneCurve(curve_poly("x^2 + y^2 - 25"), family="circle")
    for _ in range(6):
        xs = rng.sample(range(-7, 8), 5)
        s1 = PointSet(_CUBIC, [(Scalar(x), Scalar(x) ** 3) for x in xs])
        s2 = PointSet(circ, [(3, 4), (5, 0), (-3, 4), (0, -5)])
        total1, total2 = len(s1), len(s2)
        cfg, rep = normalize_config(Config(s1, s2))
        d = max(_CUBIC.degree, circ.degree)
        if cfg.m * 4 * d * d < total1 or cfg.n * 4 * d * d < total2:
            return False, "removed more than the pruning bound allows", {
                "kept_m": cfg.m,
                "kept_n": cfg.n,
            }
        if not cfg.normalized:
            return False, "output not marked normalized", {}
    return True, "retention bound holds on 6 mixed configs", None


SUITES: tuple[tuple[str, int, Callable], ...] = (
    ("scalar-field-axioms", 1, _suite_scalar_axioms),
    ("root-isolation", 2, _suite_root_isolation),
    ("resultant-sylvester", 1, _suite_resultant_oracle),
    ("intersection-bezout", 2, _suite_bezout),
    ("symmetry-group", 2, _suite_symmetry_group),
    ("incidence-three-way-agreement", 1, _suite_incidence_agreement),
    ("quadruple-counting", 1, _suite_cauchy_schwarz),
    ("line-case-bound", 2, _suite_line_case),
    ("constraint-conic-oracle", 2, _suite_constraint_conic),
    ("partition-invariants", 2, _suite_partition),
    ("normalization-retention", 1, _suite_normalization),
)

DEFAULT_BUDGET = sum(cost for _, cost, _ in SUITES)


def verify_all(budget: int = DEFAULT_BUDGET, seed: int = 0) -> SuiteReport:
    """Runs the invariant suites in order while the budget lasts; suites
    beyond the budget are reported skipped, never failed."""
    if budget < 0:
        raise InputError("budget must be nonnegative")
    remaining = budget
    results = []
    for idx, (name, cost, fn) in enumerate(SUITES):
        if cost > remaining:
            results.append(SuiteResult(name, "skip", f"needs {cost}, only {remaining} left"))
            continue
        remaining -= cost
        rng = random.Random(seed * 10007 + idx)
        ok, detail, witness = fn(rng)
        results.append(SuiteResult(name, "pass" if ok else "fail", detail, counterexample=witness))
    return SuiteReport(results=tuple(results), budget=budget)
