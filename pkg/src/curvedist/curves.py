"""Plane algebraic curves over exact scalars.

A curve is the zero set of a nonconstant polynomial in (x, y) plus a family
tag (line / circle / conic / graph / general) that records how the curve was
constructed.  Intersection of two curves without a common component returns
certified points: rational coordinates are exact, irrational ones come as
isolating intervals tied to a defining univariate polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random
from typing import Sequence, Union

from .errors import (
    BudgetExceeded,
    DegreeError,
    InputError,
    UnsupportedScalar,
)
from .mpoly import MPoly, poly_gcd, resultant, squarefree_part, subresultant
from .parsepoly import parse_poly
from .scalar import Scalar
from .upoly import (
    RealAlgebraic,
    UPoly,
    compare_roots,
    count_roots_between,
    isolate_real_roots,
    sturm_chain,
)

CURVE_VARS = ("x", "y")
FAMILIES = ("line", "circle", "conic", "graph", "general")

Coord = Union[Scalar, RealAlgebraic]


def curve_poly(text: str) -> MPoly:
    return parse_poly(text, CURVE_VARS)


def detect_special(f: MPoly) -> tuple[str, tuple] | None:
    """Recognize polynomials whose zero set is literally a line or a circle
    (up to repeated factors).  Returns ("line", (a, b, c)) for ax+by+c, or
    ("circle", (cx, cy, r2)); None when the form does not match."""
    sf = squarefree_part(f)
    d = sf.total_degree()
    if d == 1:
        a = sf.coefficient((1, 0))
        b = sf.coefficient((0, 1))
        c = sf.coefficient((0, 0))
        return ("line", (a, b, c))
    if d == 2:
        axx = sf.coefficient((2, 0))
        ayy = sf.coefficient((0, 2))
        axy = sf.coefficient((1, 1))
        if axx == ayy and axx and not axy:
            inv = axx.inverse()
            dd = sf.coefficient((1, 0)) * inv
            ee = sf.coefficient((0, 1)) * inv
            ff = sf.coefficient((0, 0)) * inv
            cx = -dd / 2
            cy = -ee / 2
            r2 = cx * cx + cy * cy - ff
            if r2.sign() > 0:
                return ("circle", (cx, cy, r2))
    return None


class PlaneCurve:
    """Zero set of f(x, y) with a family tag and a user-asserted
    irreducibility flag.  The polynomial is stored as given (not rescaled)."""

    __slots__ = ("f", "family", "irreducible")

    def __init__(self, f: MPoly, family: str = "general", irreducible: bool = False):
        if f.vars != CURVE_VARS:
            f = f.with_vars(CURVE_VARS)
        if f.is_zero or f.is_constant:
            raise InputError("curve polynomial must be nonconstant")
        if family not in FAMILIES:
            raise InputError(f"unknown family {family!r}")
        self.f = f
        self.family = family
        self.irreducible = bool(irreducible)
        self._validate_family()

    def _validate_family(self) -> None:
        d = self.degree
        if self.family == "line":
            if d != 1:
                raise InputError("line tag requires degree 1")
        elif self.family == "circle":
            if self.circle_params() is None:
                raise InputError("circle tag requires (x-a)^2 + (y-b)^2 - r^2 with r^2 > 0")
        elif self.family == "conic":
            if d != 2:
                raise InputError("conic tag requires degree 2")
        elif self.family == "graph":
            if self.graph_poly() is None:
                raise InputError("graph tag requires the form c*(y - p(x))")

    @property
    def degree(self) -> int:
        return self.f.total_degree()

    def circle_params(self) -> tuple[Scalar, Scalar, Scalar] | None:
        """(center_x, center_y, r^2) when f is a circle up to scalar."""
        if self.f.total_degree() != 2:
            return None
        axx = self.f.coefficient((2, 0))
        ayy = self.f.coefficient((0, 2))
        if not axx or axx != ayy or self.f.coefficient((1, 1)):
            return None
        inv = axx.inverse()
        dd = self.f.coefficient((1, 0)) * inv
        ee = self.f.coefficient((0, 1)) * inv
        ff = self.f.coefficient((0, 0)) * inv
        cx, cy = -dd / 2, -ee / 2
        r2 = cx * cx + cy * cy - ff
        if r2.sign() <= 0:
            return None
        return (cx, cy, r2)

    def graph_poly(self) -> UPoly | None:
        """p with f = c*(y - p(x)), or None."""
        if self.f.degree_in("y") != 1:
            return None
        coeffs = self.f.coeffs_in("y")
        c = coeffs[1]
        if not c.is_constant:
            return None
        cv = c.constant_value()
        q = coeffs[0] * cv.inverse()
        try:
            return -q.as_upoly("x")
        except DegreeError:  # pragma: no cover - q has only x by construction
            return None

    def is_line_or_circle(self) -> bool:
        if self.family in ("line", "circle"):
            return True
        return detect_special(self.f) is not None

    def contains(self, p: Sequence) -> bool:
        x, y = Scalar.coerce(p[0]), Scalar.coerce(p[1])
        return not self.f.evaluate({"x": x, "y": y})

    def __eq__(self, other):
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        from .mpoly import normalize_primitive

        return normalize_primitive(self.f) == normalize_primitive(other.f)

    def __hash__(self):
        from .mpoly import normalize_primitive

        return hash(normalize_primitive(self.f))

    def __repr__(self):
        return f"PlaneCurve({self.f.to_string()!r}, family={self.family!r})"


def contains_point(curve: PlaneCurve, p: Sequence) -> bool:
    return curve.contains(p)


# ---------------------------------------------------------------------------
# Conic classification


@dataclass(frozen=True)
class ConicClass:
    kind: str  # ellipse | parabola | hyperbola | degenerate
    subtag: str | None = None

    def __str__(self):
        return self.kind if self.subtag is None else f"{self.kind}({self.subtag})"


def classify_conic(curve: PlaneCurve) -> ConicClass:
    """Classify a degree-2 curve by the discriminant of its quadratic part
    and the determinant of the full 3x3 symmetric matrix.  Real point sets
    that collapse (line pairs, single points, empty) are degenerate."""
    f = curve.f
    if f.total_degree() != 2:
        raise DegreeError("classify_conic requires a degree-2 curve")
    A = f.coefficient((2, 0))
    B = f.coefficient((1, 1))
    C = f.coefficient((0, 2))
    D = f.coefficient((1, 0))
    E = f.coefficient((0, 1))
    F = f.coefficient((0, 0))
    disc = B * B - 4 * A * C
    # 4 * det of [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]], scaled to
    # stay rational: det3 = 4*det
    det3 = (
        4 * A * C * F
        + B * D * E
        - A * E * E
        - C * D * D
        - F * B * B
    )
    ds = disc.sign()
    if det3.sign() != 0:
        if ds < 0:
            # real iff the form takes both signs; test via (A+C) * det < 0
            if ((A + C) * det3).sign() < 0:
                circle = bool(A == C and not B)
                return ConicClass("ellipse", "circle" if circle else None)
            return ConicClass("degenerate", "empty")
        if ds == 0:
            return ConicClass("parabola")
        return ConicClass("hyperbola")
    # det3 == 0: degenerate shapes
    if ds > 0:
        return ConicClass("degenerate", "line_pair")
    if ds < 0:
        return ConicClass("degenerate", "point")
    # parabolic degenerate: parallel lines, a double line, or empty;
    # decided by the (constant) discriminant of f as a quadratic in one
    # variable
    if C:
        # viewing f = C y^2 + (Bx + E) y + (Ax^2 + Dx + F), the discriminant
        # Delta(x) = (Bx+E)^2 - 4C(Ax^2+Dx+F) is constant here: its x^2
        # coefficient is -disc and its x coefficient squares to a multiple
        # of det3
        delta = E * E - 4 * C * F
    else:
        # C == 0 and disc == 0 force B == 0, so f = A x^2 + D x + E y + F
        # with det3 = -A E^2 = 0, hence E == 0: univariate in x
        delta = D * D - 4 * A * F
    s = delta.sign()
    if s > 0:
        return ConicClass("degenerate", "parallel_lines")
    if s == 0:
        return ConicClass("degenerate", "double_line")
    return ConicClass("degenerate", "empty")


# ---------------------------------------------------------------------------
# Intersection


@dataclass(frozen=True)
class IntersectionPoint:
    x: Coord
    y: Coord

    def as_floats(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))

    def is_rational(self) -> bool:
        return isinstance(self.x, Scalar) and isinstance(self.y, Scalar)

    def __repr__(self):
        def show(c):
            if isinstance(c, Scalar):
                return str(c)
            return f"[{c.lo},{c.hi}]"

        return f"({show(self.x)}, {show(self.y)})"


@dataclass(frozen=True)
class CommonComponent:
    certificate: MPoly

    @property
    def kind(self):
        return "common_component"


@dataclass(frozen=True)
class FinitePoints:
    points: tuple[IntersectionPoint, ...]

    @property
    def kind(self):
        return "finite"

    def __len__(self):
        return len(self.points)


IntersectionResult = Union[CommonComponent, FinitePoints]

_SHEARS = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 7, -7, 11, -11, 13]


class _BadShear(Exception):
    pass


def intersect_curves(c1: PlaneCurve, c2: PlaneCurve) -> IntersectionResult:
    """Common component certificate, or all real intersection points.

    Points are found by shearing x -> x + t*y so that both polynomials keep a
    constant leading coefficient in y, then reading common roots off the
    resultant in y; the shear is retried when a specialization is ambiguous.
    """
    f, g = c1.f, c2.f
    if not (f.is_rational() and g.is_rational()):
        raise UnsupportedScalar("intersection requires rational coefficients")
    h = poly_gcd(f, g)
    if not h.is_constant:
        return CommonComponent(h)
    ftop = f.homogeneous_part(f.total_degree())
    gtop = g.homogeneous_part(g.total_degree())
    for lam in _SHEARS:
        lam_s = Scalar(lam)
        if not ftop.evaluate({"x": lam_s, "y": Scalar(1)}):
            continue
        if not gtop.evaluate({"x": lam_s, "y": Scalar(1)}):
            continue
        try:
            pts = _intersect_with_shear(f, g, Fraction(lam))
            break
        except _BadShear:
            continue
    else:
        raise BudgetExceeded("no usable shear for intersection (degenerate tangency)")
    bound = c1.degree * c2.degree
    assert len(pts) <= bound, "intersection exceeded degree bound"
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if (
                compare_roots(pts[i].x, pts[j].x) == 0
                and compare_roots(pts[i].y, pts[j].y) == 0
            ):  # pragma: no cover - the shear map is injective
                raise AssertionError("duplicate intersection point")
    return FinitePoints(tuple(pts))


def _shear(f: MPoly, lam: Fraction) -> MPoly:
    """f(x + lam*y, y) with x renamed to u."""
    x = MPoly.var(CURVE_VARS, "x")
    y = MPoly.var(CURVE_VARS, "y")
    return f.subst({"x": x + y * lam}).rename_vars({"x": "u"})


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_scale(a, c: Fraction):
    if c >= 0:
        return (a[0] * c, a[1] * c)
    return (a[1] * c, a[0] * c)


def _iv_div(num, den):
    """num/den for intervals with den sign-definite."""
    cands = [num[0] / den[0], num[0] / den[1], num[1] / den[0], num[1] / den[1]]
    return (min(cands), max(cands))


def box_eval(f: MPoly, x_iv, y_iv) -> tuple[Fraction, Fraction]:
    """Interval enclosure of f over a rational box (rational f only)."""
    lo = hi = Fraction(0)
    for (ex, ey), c in f.terms.items():
        t = (Fraction(1), Fraction(1))
        for iv, e in ((x_iv, ex), (y_iv, ey)):
            if not e:
                continue
            a, b = iv
            cands = [a**e, b**e]
            plo = min(cands)
            phi = max(cands)
            if e % 2 == 0 and a < 0 < b:
                plo = Fraction(0)
                phi = max(a**e, b**e)
            t = (
                min(t[0] * plo, t[0] * phi, t[1] * plo, t[1] * phi),
                max(t[0] * plo, t[0] * phi, t[1] * plo, t[1] * phi),
            )
        cf = c.as_fraction()
        tl, th = (t[0] * cf, t[1] * cf) if cf >= 0 else (t[1] * cf, t[0] * cf)
        lo += tl
        hi += th
    return (lo, hi)


def _coord_interval(c: Coord, scale: int = 16):
    if isinstance(c, Scalar):
        lo, hi = c.bounds(scale)
        return (lo, hi)
    return (c.lo, c.hi)


def _intersect_with_shear(f: MPoly, g: MPoly, lam: Fraction) -> list[IntersectionPoint]:
    fl = _shear(f, lam)
    gl = _shear(g, lam)
    ru = resultant(fl, gl, "y").as_upoly("u")
    assert not ru.is_zero, "coprime curves must have a nonzero resultant"
    if ru.degree < 1:
        return []
    rx = resultant(f, g, "y").as_upoly("x").squarefree_part()
    ry = resultant(f, g, "x").as_upoly("y").squarefree_part()
    dyf = fl.degree_in("y")
    dyg = gl.degree_in("y")
    kmax = min(dyf, dyg)
    if kmax == 1:
        # a degree-1 factor is its own gcd at every specialization: read the
        # common root straight off a(u)*y + b(u)
        lin = fl if dyf == 1 else gl
        cs = lin.coeffs_in("y")
        fixed_ab = (cs[1].as_upoly("u"), cs[0].as_upoly("u"))
        sres: list[UPoly] = []
        sres_full: list = []
    else:
        fixed_ab = None
        # principal subresultant coefficients as polynomials in u, for the
        # irrational specializations
        sres = []
        sres_full = []
        for j in range(1, kmax):
            S = subresultant(fl, gl, "y", j)
            cs = S.coeffs_in("y")
            lead = cs[j].as_upoly("u") if len(cs) > j else UPoly([])
            sres.append(lead)
            sres_full.append(cs)
    points: list[IntersectionPoint] = []
    for xi in isolate_real_roots(ru):
        if isinstance(xi, Scalar):
            if not xi.is_rational:
                # quadratic-irrational u-coordinates go through the interval
                # route with their minimal polynomial
                xi = _to_interval(xi)
            else:
                points.extend(_points_at_rational_u(fl, gl, xi, lam))
                continue
        points.extend(
            _points_at_algebraic_u(xi, lam, fixed_ab, sres, sres_full, rx, ry, f, g)
        )
    return points


def _to_interval(s: Scalar) -> RealAlgebraic:
    # minimal polynomial (x - a)^2 - b^2 k, monic with rational coefficients
    a, b, k = s.a, s.b, s.k
    poly = UPoly([Scalar(a * a - b * b * k), Scalar(-2 * a), Scalar(1)])
    scale = 8
    while True:
        lo, hi = s.bounds(scale)
        if poly(lo) and poly(hi) and count_roots_between(sturm_chain(poly), lo, hi) == 1:
            return RealAlgebraic(poly, lo, hi)
        scale += 16


def _points_at_rational_u(fl: MPoly, gl: MPoly, xi: Scalar, lam: Fraction):
    fy = fl.partial_eval({"u": xi}).as_upoly("y")
    gy = gl.partial_eval({"u": xi}).as_upoly("y")
    h = fy.gcd(gy)
    assert h.degree >= 1, "resultant root must give a common factor"
    out = []
    for y0 in isolate_real_roots(h):
        if isinstance(y0, Scalar):
            out.append(IntersectionPoint(xi + Scalar(lam) * y0, y0))
        else:
            if lam == 0:
                out.append(IntersectionPoint(xi, y0))
            else:
                xa = Scalar.coerce(xi.as_fraction())
                comp = y0.poly.compose_affine(
                    Scalar(Fraction(1, 1) / lam), Scalar(-xa.as_fraction() / lam)
                )
                lo = xa.as_fraction() + lam * (y0.lo if lam > 0 else y0.hi)
                hi = xa.as_fraction() + lam * (y0.hi if lam > 0 else y0.lo)
                out.append(IntersectionPoint(RealAlgebraic(comp, lo, hi), y0))
    return out


def _points_at_algebraic_u(
    xi: RealAlgebraic,
    lam: Fraction,
    fixed_ab: tuple[UPoly, UPoly] | None,
    sres: list[UPoly],
    sres_full,
    rx: UPoly,
    ry: UPoly,
    f: MPoly,
    g: MPoly,
):
    if fixed_ab is not None:
        a_poly, b_poly = fixed_ab
    else:
        k = None
        for idx, lead in enumerate(sres):
            if lead.is_zero:
                continue
            if xi.sign_of(lead) != 0:
                k = idx + 1
                break
        if k != 1:
            raise _BadShear
        cs = sres_full[0]
        a_poly = cs[1].as_upoly("u")
        b_poly = cs[0].as_upoly("u")
    # y* = -b(xi)/a(xi), a(xi) != 0 certified above
    y = _pin_value(
        xi,
        lambda l, h: _neg_ratio_interval(b_poly, a_poly, l, h),
        ry,
        lambda r: xi.sign_of(a_poly * r + b_poly) == 0,
    )
    # x = xi + lam*y*, and x == r iff a(xi)*(xi - r) - lam*b(xi) == 0
    x = _pin_value(
        xi,
        lambda l, h: _x_interval(b_poly, a_poly, l, h, lam),
        rx,
        lambda r: xi.sign_of(a_poly * UPoly([Scalar(-r), Scalar(1)]) - b_poly * lam) == 0,
    )
    pt = IntersectionPoint(x, y)
    _check_point(f, pt)
    _check_point(g, pt)
    return [pt]


def _neg_ratio_interval(b_poly: UPoly, a_poly: UPoly, lo: Fraction, hi: Fraction):
    """Enclosure of -b/a over [lo, hi], or None while a's sign is unresolved."""
    alo, ahi = a_poly.eval_interval(lo, hi)
    if alo <= 0 <= ahi:
        return None
    blo, bhi = b_poly.eval_interval(lo, hi)
    nlo, nhi = -bhi, -blo
    return _iv_div((nlo, nhi), (alo, ahi))


def _x_interval(b_poly, a_poly, lo, hi, lam):
    yiv = _neg_ratio_interval(b_poly, a_poly, lo, hi)
    if yiv is None:
        return None
    return _iv_add((lo, hi), _iv_scale(yiv, lam))


def _pin_value(xi: RealAlgebraic, iv_fn, target: UPoly, rational_test) -> Coord:
    """Resolve a value known to be a root of `target` (squarefree): exact
    rational when one of target's rational roots passes the exact test,
    otherwise an isolating interval around the value."""
    target_roots = isolate_real_roots(target)
    rational_candidates = [r for r in target_roots if isinstance(r, Scalar) and r.is_rational]
    for r in rational_candidates:
        if rational_test(r.as_fraction()):
            return r
    chain = sturm_chain(target)
    for _ in range(400):
        iv = iv_fn(xi.lo, xi.hi)
        if iv is not None:
            lo, hi = iv
            if target(lo) and target(hi) and count_roots_between(chain, lo, hi) == 1:
                if not any(lo < r.as_fraction() < hi for r in rational_candidates):
                    return RealAlgebraic(target, lo, hi)
        xi.refine(2)
    raise BudgetExceeded("interval refinement budget exhausted")  # pragma: no cover


def _check_point(poly: MPoly, pt: IntersectionPoint) -> None:
    """Interval sanity check: the defining polynomial must be able to vanish
    on the point's box."""
    for _ in range(3):
        lo, hi = box_eval(poly, _coord_interval(pt.x), _coord_interval(pt.y))
        if lo <= 0 <= hi:
            return
        if isinstance(pt.x, RealAlgebraic):
            pt.x.refine(2)
        if isinstance(pt.y, RealAlgebraic):
            pt.y.refine(2)
    raise AssertionError("intersection point failed interval validation")


# ---------------------------------------------------------------------------
# Point sets and generation


class PointSet:
    """Distinct points with exact coordinates lying on a host curve; the
    label of a point is its 1-based position."""

    __slots__ = ("curve", "points")

    def __init__(self, curve: PlaneCurve, points: Sequence[Sequence]):
        pts = []
        seen = set()
        for p in points:
            x, y = Scalar.coerce(p[0]), Scalar.coerce(p[1])
            if not curve.contains((x, y)):
                raise InputError(f"point ({x}, {y}) is not on the curve")
            key = (x, y)
            if key in seen:
                raise InputError(f"duplicate point ({x}, {y})")
            seen.add(key)
            pts.append(key)
        self.curve = curve
        self.points = tuple(pts)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def labels(self):
        return range(1, len(self.points) + 1)

    def __repr__(self):
        return f"PointSet({len(self.points)} points on {self.curve.f.to_string()!r})"


def line_curve(a, b, c) -> PlaneCurve:
    """a*x + b*y + c = 0."""
    f = (
        MPoly.var(CURVE_VARS, "x") * Scalar.coerce(a)
        + MPoly.var(CURVE_VARS, "y") * Scalar.coerce(b)
        + MPoly.const(CURVE_VARS, c)
    )
    return PlaneCurve(f, "line", irreducible=True)


def circle_curve(cx, cy, r) -> PlaneCurve:
    """(x-cx)^2 + (y-cy)^2 = r^2 with r > 0."""
    r = Scalar.coerce(r)
    if r.sign() <= 0:
        raise InputError("circle radius must be positive")
    x = MPoly.var(CURVE_VARS, "x")
    y = MPoly.var(CURVE_VARS, "y")
    f = (x - Scalar.coerce(cx)) ** 2 + (y - Scalar.coerce(cy)) ** 2 - r * r
    return PlaneCurve(f, "circle", irreducible=True)


def graph_curve(p: UPoly) -> PlaneCurve:
    """y = p(x)."""
    f = MPoly.var(CURVE_VARS, "y") - MPoly.from_upoly(p, CURVE_VARS, "x")
    return PlaneCurve(f, "graph", irreducible=True)


def conic_curve(f: MPoly, irreducible: bool = True) -> PlaneCurve:
    return PlaneCurve(f, "conic", irreducible=irreducible)


def _seeded_fractions(seed: int):
    rng = random.Random(seed)
    while True:
        yield Fraction(rng.randrange(-10**6, 10**6 + 1), rng.randrange(1, 1000))


def generate_points(
    curve: PlaneCurve,
    count: int,
    seed: int = 0,
    mode: str = "arithmetic",
    start: int = 0,
    through: Sequence | None = None,
) -> PointSet:
    """`count` distinct rational points exactly on the curve.

    line/graph: abscissas start, start+1, ... (or seeded rationals in
    random mode); circle: tan-half-angle parametrization over t = start,
    start+1, ... (rational radius required); conic: chords of rational slope
    through the supplied rational point."""
    if count < 1:
        raise InputError("count must be >= 1")
    if mode not in ("arithmetic", "random"):
        raise InputError(f"unknown mode {mode!r}")

    def abscissas():
        if mode == "arithmetic":
            t = Fraction(start)
            while True:
                yield t
                t += 1
        else:
            yield from _seeded_fractions(seed)

    fam = curve.family
    pts: list[tuple] = []
    if fam == "line":
        a = curve.f.coefficient((1, 0))
        b = curve.f.coefficient((0, 1))
        c = curve.f.coefficient((0, 0))
        for t in abscissas():
            ts = Scalar.coerce(t)
            if b:
                pts.append((ts, -(a * ts + c) / b))
            else:
                pts.append((-c / a, ts))
            if len(pts) == count:
                break
    elif fam == "circle":
        cx, cy, r2 = curve.circle_params()
        try:
            r = r2.sqrt()
        except Exception:
            raise InputError("rational point generation needs a rational radius")
        if not r.is_rational:
            raise InputError("rational point generation needs a rational radius")
        for t in abscissas():
            ts = Scalar.coerce(t)
            den = (ts * ts + 1).inverse()
            pts.append(((1 - ts * ts) * den * r + cx, 2 * ts * den * r + cy))
            if len(pts) == count:
                break
    elif fam == "graph":
        p = curve.graph_poly()
        for t in abscissas():
            ts = Scalar.coerce(t)
            pts.append((ts, p(ts)))
            if len(pts) == count:
                break
    elif fam == "conic":
        if through is None:
            raise InputError("conic generation needs a rational point on the curve")
        x0, y0 = Scalar.coerce(through[0]), Scalar.coerce(through[1])
        if not curve.contains((x0, y0)):
            raise InputError("supplied point is not on the conic")
        if classify_conic(curve).kind == "degenerate":
            raise InputError("degenerate conics are not supported for generation")
        seen = {(x0, y0)}
        slopes = abscissas()
        budget = 40 * count + 50
        directions = [(Scalar(0), Scalar(1))]
        while len(pts) < count and budget:
            budget -= 1
            if directions:
                dx, dy = directions.pop()
            else:
                dx, dy = Scalar(1), Scalar.coerce(next(slopes))
            q = _second_chord_point(curve.f, x0, y0, dx, dy)
            if q is None or q in seen:
                continue
            seen.add(q)
            pts.append(q)
        if len(pts) < count:
            raise InputError("could not find enough rational points on the conic")
    else:
        raise InputError(f"no generator for family {fam!r}")
    return PointSet(curve, pts)


def _second_chord_point(f: MPoly, x0, y0, dx, dy):
    """Second intersection of the line (x0,y0) + s*(dx,dy) with the conic."""
    svars = ("s",)
    s = MPoly.var(svars, "s")
    xs = s * dx + Scalar.coerce(x0)
    ys = s * dy + Scalar.coerce(y0)
    acc = MPoly.zero(svars)
    for (ex, ey), c in f.terms.items():
        acc = acc + xs**ex * ys**ey * c
    c2 = acc.coefficient((2,))
    c1 = acc.coefficient((1,))
    if not c2 or not c1:
        return None
    sstar = -c1 / c2
    return (x0 + sstar * dx, y0 + sstar * dy)
