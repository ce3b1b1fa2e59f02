"""Distance quadruples between two curves via four-dimensional curves.

For anchor points p_i, p_j on the first curve, the locus of pairs
(q, q') on the second curve with d(p_i, q) = d(p_j, q') is a curve in R^4
cut out by f2(x, y), f2(x', y'), and the distance form F.  Counting
incidences of these curves with pairs from the second point set counts
equal-distance quadruples exactly; Cauchy-Schwarz turns the count into a
lower bound on the number of distinct distances.

Everything here works with squared distances so that all arithmetic stays
rational (or in a fixed quadratic field).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .curves import (
    CommonComponent,
    PlaneCurve,
    PointSet,
    detect_special,
    intersect_curves,
)
from .errors import (
    AssumptionViolation,
    DegreeError,
    ExcludedPair,
    InputError,
    NonGenericSeed,
    PreconditionError,
    UnsupportedScalar,
)
from .isometry import (
    Isometry,
    apply_to_poly,
    fixes_curve,
    isometry_from_point_pairs,
    reflection_across_line,
)
from .mpoly import MPoly, normalize_primitive, resultant, squarefree_part
from .scalar import Scalar
from .symmetry import FiniteSymmetries, find_symmetries

R4 = ("x", "y", "xp", "yp")

Point = tuple[Scalar, Scalar]


def sqdist(p, q) -> Scalar:
    """Squared euclidean distance; exact."""
    dx = Scalar.coerce(p[0]) - Scalar.coerce(q[0])
    dy = Scalar.coerce(p[1]) - Scalar.coerce(q[1])
    return dx * dx + dy * dy


# ---------------------------------------------------------------------------
# Configurations


class Config:
    """Two host curves with a finite point set on each.

    The degree bound d is the larger of the two curve degrees; most
    counting operations expect a normalized configuration (see
    normalize_config)."""

    __slots__ = ("s1", "s2", "normalized")

    def __init__(self, s1: PointSet, s2: PointSet, normalized: bool = False):
        self.s1 = s1
        self.s2 = s2
        self.normalized = normalized

    @property
    def c1(self) -> PlaneCurve:
        return self.s1.curve

    @property
    def c2(self) -> PlaneCurve:
        return self.s2.curve

    @property
    def m(self) -> int:
        return len(self.s1)

    @property
    def n(self) -> int:
        return len(self.s2)

    @property
    def d(self) -> int:
        return max(self.c1.degree, self.c2.degree)

    def __repr__(self):
        return f"Config(m={self.m}, n={self.n}, d={self.d}, normalized={self.normalized})"


@dataclass(frozen=True)
class Removal:
    set_name: str
    label: int
    point: Point
    rule: str


@dataclass(frozen=True)
class NormalizationReport:
    rotation: Optional[Isometry]
    removals: tuple[Removal, ...]
    kept_s1: int
    kept_s2: int
    original_s1: int
    original_s2: int


_PYTHAGOREAN = (
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(8, 17), Fraction(15, 17)),
)


def _line_data(curve: PlaneCurve):
    got = detect_special(curve.f)
    if got is not None and got[0] == "line":
        return got[1]
    return None


def _circle_data(curve: PlaneCurve):
    got = detect_special(curve.f)
    if got is not None and got[0] == "circle":
        return got[1]
    return None


def _is_vertical_line(curve: PlaneCurve) -> bool:
    data = _line_data(curve)
    return data is not None and not data[1]


def _retag(curve: PlaneCurve, f: MPoly) -> PlaneCurve:
    family = curve.family if curve.family in ("line", "circle") else "general"
    return PlaneCurve(f, family=family, irreducible=curve.irreducible)


def normalize_config(raw: Config) -> tuple[Config, NormalizationReport]:
    """Establish the standing assumptions by one exact rotation and
    deterministic pruning (lowest label survives).

    Raises ExcludedPair for the curve pairs the counting theorem excludes:
    parallel lines, orthogonal lines, and concentric circles."""
    l1, l2 = _line_data(raw.c1), _line_data(raw.c2)
    if l1 is not None and l2 is not None:
        a1, b1, _ = l1
        a2, b2, _ = l2
        if a1 * b2 - a2 * b1 == 0:
            raise ExcludedPair("parallel lines")
        if a1 * a2 + b1 * b2 == 0:
            raise ExcludedPair("orthogonal lines")
    k1, k2 = _circle_data(raw.c1), _circle_data(raw.c2)
    if k1 is not None and k2 is not None and k1[0] == k2[0] and k1[1] == k2[1]:
        raise ExcludedPair("concentric circles")

    # (1) rotate away vertical lines
    rotation = None
    c1, c2 = raw.c1, raw.c2
    pts1 = list(raw.s1.points)
    pts2 = list(raw.s2.points)
    if _is_vertical_line(c1) or _is_vertical_line(c2):
        for cv, sv in _PYTHAGOREAN:
            rot = Isometry.rotation(Scalar(cv), Scalar(sv))
            n1 = _retag(c1, apply_to_poly(rot, c1.f))
            n2 = _retag(c2, apply_to_poly(rot, c2.f))
            if not _is_vertical_line(n1) and not _is_vertical_line(n2):
                rotation = rot
                c1, c2 = n1, n2
                pts1 = [rot.apply(p) for p in pts1]
                pts2 = [rot.apply(p) for p in pts2]
                break
        else:  # pragma: no cover - three distinct angles, at most two bad
            raise ExcludedPair("vertical lines resist all stock rotations")

    removals: list[Removal] = []
    live1 = [(lab, p) for lab, p in zip(raw.s1.labels(), pts1)]
    live2 = [(lab, p) for lab, p in zip(raw.s2.labels(), pts2)]

    # (2) disjointness: alternate which set keeps each shared point
    common = sorted(
        (p for _, p in live1 if any(q == p for _, q in live2)),
        key=lambda p: min(lab for lab, q in live1 if q == p),
    )
    for idx, p in enumerate(common):
        if idx % 2 == 0:
            lab = next(l for l, q in live2 if q == p)
            live2 = [(l, q) for l, q in live2 if q != p]
            removals.append(Removal("s2", lab, p, "(2)"))
        else:
            lab = next(l for l, q in live1 if q == p)
            live1 = [(l, q) for l, q in live1 if q != p]
            removals.append(Removal("s1", lab, p, "(2)"))

    # (3) circle centers
    def drop_center(live, circle, name):
        if circle is None:
            return live
        center = (Scalar.coerce(circle[0]), Scalar.coerce(circle[1]))
        out = []
        for lab, p in live:
            if p == center:
                removals.append(Removal(name, lab, p, "(3)"))
            else:
                out.append((lab, p))
        return out

    circ1, circ2 = _circle_data(c1), _circle_data(c2)
    live2 = drop_center(live2, circ1, "s2")
    live1 = drop_center(live1, circ2, "s1")

    # keep the lowest label in every equivalence class of a key function
    def prune(live, key, name, rule):
        seen = {}
        out = []
        for lab, p in live:
            k = key(p)
            if k in seen:
                removals.append(Removal(name, lab, p, rule))
            else:
                seen[k] = lab
                out.append((lab, p))
        return out

    # (4) at most one point per circle concentric with the other curve
    if circ1 is not None:
        o = (Scalar.coerce(circ1[0]), Scalar.coerce(circ1[1]))
        live2 = prune(live2, lambda p: sqdist(p, o), "s2", "(4)")
    if circ2 is not None:
        o = (Scalar.coerce(circ2[0]), Scalar.coerce(circ2[1]))
        live1 = prune(live1, lambda p: sqdist(p, o), "s1", "(4)")

    # (5) parallel-line unions, (6) orthogonal lines, when the other curve
    # is a line ax + by + c = 0
    def line_keys(data):
        a, b, cc = (Scalar.coerce(v) for v in data)
        norm2 = a * a + b * b

        def par(p):  # squared distance to the line
            v = a * p[0] + b * p[1] + cc
            return v * v * norm2.inverse()

        def orth(p):  # which orthogonal line the point is on
            return b * p[0] - a * p[1]

        return par, orth

    nl1, nl2 = _line_data(c1), _line_data(c2)
    if nl1 is not None:
        par, orth = line_keys(nl1)
        live2 = prune(live2, par, "s2", "(5)")
        live2 = prune(live2, orth, "s2", "(6)")
    if nl2 is not None:
        par, orth = line_keys(nl2)
        live1 = prune(live1, par, "s1", "(5)")
        live1 = prune(live1, orth, "s1", "(6)")

    s1 = PointSet(c1, [p for _, p in live1])
    s2 = PointSet(c2, [p for _, p in live2])
    report = NormalizationReport(
        rotation=rotation,
        removals=tuple(removals),
        kept_s1=len(s1),
        kept_s2=len(s2),
        original_s1=len(raw.s1),
        original_s2=len(raw.s2),
    )
    return Config(s1, s2, normalized=True), report


# ---------------------------------------------------------------------------
# The four-dimensional curves


@dataclass(frozen=True)
class FourCurve:
    i: int
    j: int
    p_i: Point
    p_j: Point
    f2_s: MPoly
    f2_t: MPoly
    F: MPoly

    def __repr__(self):
        return f"FourCurve(i={self.i}, j={self.j})"


def _distance_form(p_i: Point, p_j: Point) -> MPoly:
    x = MPoly.var(R4, "x")
    y = MPoly.var(R4, "y")
    xp = MPoly.var(R4, "xp")
    yp = MPoly.var(R4, "yp")
    ai, bi = p_i
    aj, bj = p_j
    return (x - ai) ** 2 + (y - bi) ** 2 - (xp - aj) ** 2 - (yp - bj) ** 2


def four_curve(config: Config, i: int, j: int) -> FourCurve:
    p_i = config.s1[i - 1]
    p_j = config.s1[j - 1]
    f2 = config.c2.f
    return FourCurve(
        i=i,
        j=j,
        p_i=p_i,
        p_j=p_j,
        f2_s=f2.with_vars(R4),
        f2_t=f2.rename_vars({"x": "xp", "y": "yp"}).with_vars(R4),
        F=_distance_form(p_i, p_j),
    )


def build_four_curves(config: Config) -> list[FourCurve]:
    """All m^2 four-dimensional curves, indices in row-major label order."""
    return [four_curve(config, i, j) for i in config.s1.labels() for j in config.s1.labels()]


def incidence(fc: FourCurve, qs, qt) -> bool:
    """Does the pair (qs, qt) lie on the four-dimensional curve?  Evaluates
    the distance form exactly; equivalent to d2(p_i,qs) = d2(p_j,qt)."""
    val = fc.F.evaluate({"x": qs[0], "y": qs[1], "xp": qt[0], "yp": qt[1]})
    return not val


def count_incidences(config: Config) -> int:
    """Brute-force incidence count between the m^2 curves and the n^2 pairs:
    the number of quadruples (i, j, s, t) with F_ij(q_s, q_t) = 0."""
    total = 0
    curves = build_four_curves(config)
    pairs = [(qs, qt) for qs in config.s2 for qt in config.s2]
    for fc in curves:
        for qs, qt in pairs:
            if incidence(fc, qs, qt):
                total += 1
    return total


# ---------------------------------------------------------------------------
# Quadruples and distances


@dataclass(frozen=True)
class QuadrupleReport:
    q_count: int
    histogram: tuple[tuple[Scalar, int], ...]  # (squared distance, |E_d|)
    d_count: int
    bound: Fraction  # m^2 n^2 / |D|
    m: int
    n: int


def _dist_key(v: Scalar):
    return (float(v), str(v))


def quadruple_report(config: Config) -> QuadrupleReport:
    hist: dict[Scalar, int] = {}
    for p in config.s1:
        for q in config.s2:
            d2 = sqdist(p, q)
            hist[d2] = hist.get(d2, 0) + 1
    m, n = config.m, config.n
    q_count = sum(c * c for c in hist.values())
    d_count = len(hist)
    if sum(hist.values()) != m * n:
        raise AssertionError("histogram lost pairs")
    bound = Fraction(m * m * n * n, d_count) if d_count else Fraction(0)
    if q_count < bound:
        raise AssertionError("Cauchy-Schwarz bound violated; counting bug")
    ordered = tuple(sorted(hist.items(), key=lambda kv: _dist_key(kv[0])))
    return QuadrupleReport(q_count=q_count, histogram=ordered, d_count=d_count, bound=bound, m=m, n=n)


def distance_set(s1: Sequence, s2: Sequence, exclude_diagonal: bool = False) -> set:
    """Exact set of squared distances between two point collections; with
    exclude_diagonal, coincident points contribute nothing."""
    out = set()
    for p in s1:
        for q in s2:
            if exclude_diagonal and p[0] == q[0] and p[1] == q[1]:
                continue
            out.add(sqdist(p, q))
    return out


# ---------------------------------------------------------------------------
# The same-distance symmetry criterion


@dataclass(frozen=True)
class SymmetryFound:
    symmetry: Isometry


@dataclass(frozen=True)
class NoSymmetry:
    pass


def same_distance_symmetry_test(config: Config, i: int, j: int, k: int, l: int):
    """Candidate symmetries of the second curve mapping p_i -> p_j and
    p_k -> p_l: the direct isometry and its composition with the reflection
    in the source line.  If neither fixes the curve, the two 4D curves
    C_ij and C_kl can only meet in finitely many points."""
    p_i, p_j = config.s1[i - 1], config.s1[j - 1]
    p_k, p_l = config.s1[k - 1], config.s1[l - 1]
    if p_i == p_k:
        raise PreconditionError("need distinct source anchors")
    if sqdist(p_i, p_k) != sqdist(p_j, p_l):
        raise PreconditionError("anchor pairs are not at the same distance")
    direct = isometry_from_point_pairs(p_i, p_k, p_j, p_l)
    if fixes_curve(direct, config.c2):
        return SymmetryFound(direct)
    mirrored = direct.compose(reflection_across_line(p_i, p_k))
    if fixes_curve(mirrored, config.c2):
        return SymmetryFound(mirrored)
    return NoSymmetry()


# ---------------------------------------------------------------------------
# The constraint conic for different-distance pairs


@dataclass(frozen=True)
class ConstraintConic:
    """Quadric constraint on the normalized second point (u, v).

    Normalization data: similarities take p_i -> (0,0), p_k -> (1,0) with
    p_q -> (a, b), and p_j -> (0,0), p_l -> (L,0) with p_r -> (c, d); both
    planes are scaled by the same factor so distance equalities persist."""

    L: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    uu: Fraction
    vv: Fraction
    uv: Fraction
    lu: Fraction
    lv: Fraction
    const: Fraction

    @property
    def quadratic_zero(self) -> bool:
        return not (self.uu or self.vv or self.uv)

    @property
    def contradiction(self) -> bool:
        """Constraint degenerated to nonzero = 0: no (u, v) can satisfy the
        three distance equations, so the configuration is impossible."""
        return self.quadratic_zero and not (self.lu or self.lv) and bool(self.const)

    @property
    def vacuous(self) -> bool:
        """All six coefficients zero: the constraint says nothing."""
        return self.quadratic_zero and not (self.lu or self.lv or self.const)

    def value(self, u, v) -> Fraction:
        u = Fraction(u)
        v = Fraction(v)
        return (
            self.uu * u * u
            + self.vv * v * v
            + self.uv * u * v
            + self.lu * u
            + self.lv * v
            + self.const
        )


def from_normalized(L, a, b, c, d) -> ConstraintConic:
    """Quadric coefficients from already-normalized data."""
    L, a, b, c, d = (Fraction(v) for v in (L, a, b, c, d))
    if L in (0, 1):
        raise PreconditionError("normalized data needs L different from 0 and 1")
    e = (a * a + b * b - c * c - d * d + a * L * L - a) / 2
    w = c - a * L
    return ConstraintConic(
        L=L,
        a=a,
        b=b,
        c=c,
        d=d,
        uu=b * b * L * L + w * w - b * b,
        vv=d * d - b * b,
        uv=2 * d * w,
        lu=b * b * L * (1 - L * L) + 2 * e * w,
        lv=2 * e * d,
        const=b * b * (1 - L * L) ** 2 / 4 + e * e,
    )


def _rational(v) -> Fraction:
    s = Scalar.coerce(v)
    if not s.is_rational:
        raise UnsupportedScalar("constraint conic needs rational points")
    return s.as_fraction()


def _similarity_to_unit(p, k):
    """Rational similarity taking p -> (0,0) and k -> (1,0); scales by
    1/|pk|.  Entries are rational for any rational inputs."""
    dx = _rational(k[0]) - _rational(p[0])
    dy = _rational(k[1]) - _rational(p[1])
    h2 = dx * dx + dy * dy

    def apply(q):
        qx = _rational(q[0]) - _rational(p[0])
        qy = _rational(q[1]) - _rational(p[1])
        return ((dx * qx + dy * qy) / h2, (-dy * qx + dx * qy) / h2)

    return apply, h2


def constraint_conic(p_i, p_k, p_q, p_j, p_l, p_r) -> ConstraintConic:
    """Normalize the six anchors and build the quadric every admissible
    (u, v) must satisfy.  Distance preconditions follow the three strict
    inequalities of the different-distances setting."""
    d_ik, d_jl = sqdist(p_i, p_k), sqdist(p_j, p_l)
    if d_ik == d_jl:
        raise PreconditionError("d(p_i,p_k) = d(p_j,p_l)")
    if sqdist(p_i, p_q) == sqdist(p_j, p_r):
        raise PreconditionError("d(p_i,p_q) = d(p_j,p_r)")
    if sqdist(p_k, p_q) == sqdist(p_l, p_r):
        raise PreconditionError("d(p_k,p_q) = d(p_l,p_r)")
    if not d_ik:
        raise PreconditionError("p_i = p_k")
    if not d_jl:
        raise PreconditionError("p_j = p_l")
    ratio = _rational(d_jl) / _rational(d_ik)
    Lr = _fraction_sqrt(ratio)
    if Lr is None:
        raise UnsupportedScalar(
            "the normalizing rotation is not rational for these anchors"
        )
    first, h2 = _similarity_to_unit(p_i, p_k)
    a, b = first(p_q)
    # scale the second plane by the same 1/|p_i p_k|: compose the unit
    # normalization of (p_j, p_l) with multiplication by L
    second, _ = _similarity_to_unit(p_j, p_l)
    cr, dr = second(p_r)
    c, d = cr * Lr, dr * Lr
    return from_normalized(Lr, a, b, c, d)


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    from math import isqrt

    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# The line case


def line_case_intersection(cij: FourCurve, ckl: FourCurve, config: Config) -> list:
    """Intersection of two four-dimensional curves over a line, worked in
    the xx'-plane.  Under the standing assumptions the count is at most 4."""
    data = _line_data(config.c2)
    if data is None or data[0] != 0 or data[2] != 0:
        raise PreconditionError("the second curve must be the x-axis")
    if sqdist(cij.p_i, ckl.p_i) == sqdist(cij.p_j, ckl.p_j):
        raise PreconditionError("anchor pairs at equal distance: line case needs different distances")
    ai, bi = cij.p_i
    aj, bj = cij.p_j
    ak, bk = ckl.p_i
    al, bl = ckl.p_j
    if cij.i != cij.j and bj * bj == bi * bi:
        raise AssumptionViolation("(5)", "anchor heights coincide up to sign")
    if ckl.i != ckl.j and bl * bl == bk * bk:
        raise AssumptionViolation("(5)", "anchor heights coincide up to sign")
    if cij.i != ckl.i and ai == ak:
        raise AssumptionViolation("(6)", "anchors share a vertical line")
    vars2 = ("x", "y")  # y stands for x'
    x = MPoly.var(vars2, "x")
    yq = MPoly.var(vars2, "y")
    e1 = (x - ai) ** 2 - (yq - aj) ** 2 - (bj * bj - bi * bi)
    e2 = (x - ak) ** 2 - (yq - al) ** 2 - (bl * bl - bk * bk)
    got = intersect_curves(PlaneCurve(e1), PlaneCurve(e2))
    if isinstance(got, CommonComponent):
        raise PreconditionError("the two hyperbolas share a component; assumptions must have failed")
    pts = [(p.x, p.y) for p in got.points]
    if len(pts) > 4:  # pragma: no cover - excluded by the lemma
        raise AssertionError("line case produced more than four points")
    return pts


# ---------------------------------------------------------------------------
# Partition into classes with finite pairwise intersections


@dataclass(frozen=True)
class PartitionResult:
    gamma0: tuple[FourCurve, ...]
    classes: tuple[tuple[FourCurve, ...], ...]
    p0: tuple[tuple[int, int], ...]
    p_classes: tuple[tuple[tuple[int, int], ...], ...]
    L: int


def _maps_point_to(T: Isometry, p, q) -> bool:
    ix, iy = T.apply(p)
    return ix == q[0] and iy == q[1]


def _iv_mul(a, b):
    c = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(c), max(c))


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_neg(a):
    return (-a[1], -a[0])


def _box_maps_point_to(box, p, q) -> bool:
    """Could an isometry inside the box map p to q?  Conservative interval
    test; the matrix is ((c, -sigma*s), (s, sigma*c))."""
    px = Scalar.coerce(p[0]).bounds(64)
    py = Scalar.coerce(p[1]).bounds(64)
    qx = Scalar.coerce(q[0]).bounds(64)
    qy = Scalar.coerce(q[1]).bounds(64)
    sig = lambda iv: iv if box.sigma > 0 else _iv_neg(iv)
    ximg = _iv_add(_iv_add(_iv_mul(box.c_box, px), _iv_neg(sig(_iv_mul(box.s_box, py)))), box.t1_box)
    yimg = _iv_add(_iv_add(_iv_mul(box.s_box, px), sig(_iv_mul(box.c_box, py))), box.t2_box)
    return not (qx[1] < ximg[0] or qx[0] > ximg[1] or qy[1] < yimg[0] or qy[0] > yimg[1])


def _respected_pairs(curve: PlaneCurve, pts: PointSet) -> set[tuple[int, int]]:
    """Label pairs (i, j) such that some symmetry of the curve maps point i
    to point j; box candidates are checked conservatively by intervals."""
    labels = list(pts.labels())
    syms = find_symmetries(curve)
    if not isinstance(syms, FiniteSymmetries):
        # infinitely many symmetries: every pair might be respected
        return {(i, j) for i in labels for j in labels}
    out = set()
    for T in syms.members:
        for i in labels:
            img = T.apply(pts[i - 1])
            for j in labels:
                q = pts[j - 1]
                if img[0] == q[0] and img[1] == q[1]:
                    out.add((i, j))
                    break
    for box in syms.unrepresentable:
        for i in labels:
            for j in labels:
                if _box_maps_point_to(box, pts[i - 1], pts[j - 1]):
                    out.add((i, j))
    return out


def partition(config: Config) -> PartitionResult:
    """Split the m^2 curves into a small symmetric part and classes with
    pairwise finite intersections, plus the dual split of the n^2 pairs."""
    L = config.d**4 + 1
    gamma0_pairs, classes_pairs = _partition_half(config.s1, config.c2)
    curves = {(fc.i, fc.j): fc for fc in build_four_curves(config)}
    gamma0 = tuple(curves[ij] for ij in sorted(gamma0_pairs))
    classes = tuple(tuple(curves[ij] for ij in sorted(cls)) for cls in classes_pairs)
    p0_pairs, p_classes_pairs = _partition_half(config.s2, config.c1)
    p0 = tuple(sorted(p0_pairs))
    p_classes = tuple(tuple(sorted(cls)) for cls in p_classes_pairs)
    return PartitionResult(gamma0=gamma0, classes=classes, p0=p0, p_classes=p_classes, L=L)


def _partition_half(anchors: PointSet, other_curve: PlaneCurve):
    """One side of the partition: anchor pairs over `anchors`, conflicts
    certified against `other_curve`."""
    labels = list(anchors.labels())
    if other_curve.is_line_or_circle():
        gamma0: set[tuple[int, int]] = set()
    else:
        gamma0 = _respected_pairs(other_curve, anchors)
    rest = [(i, j) for i in labels for j in labels if (i, j) not in gamma0]
    conflicts: dict[tuple[int, int], set[tuple[int, int]]] = {ij: set() for ij in rest}
    cfg_like = _AnchorView(anchors, other_curve)
    for a in range(len(rest)):
        i, j = rest[a]
        for b in range(a + 1, len(rest)):
            k, l = rest[b]
            p_i, p_k = anchors[i - 1], anchors[k - 1]
            p_j, p_l = anchors[j - 1], anchors[l - 1]
            if p_i == p_k:
                continue
            if sqdist(p_i, p_k) != sqdist(p_j, p_l):
                continue
            got = same_distance_symmetry_test(cfg_like, i, j, k, l)
            if isinstance(got, SymmetryFound):
                conflicts[(i, j)].add((k, l))
                conflicts[(k, l)].add((i, j))
    color: dict[tuple[int, int], int] = {}
    ncolors = 0
    for ij in rest:
        used = {color[kl] for kl in conflicts[ij] if kl in color}
        c = 0
        while c in used:
            c += 1
        color[ij] = c
        ncolors = max(ncolors, c + 1)
    classes = [set() for _ in range(ncolors)]
    for ij, c in color.items():
        classes[c].add(ij)
    return gamma0, classes


class _AnchorView:
    """Adapter exposing one anchor set and the opposite curve with the
    Config surface used by same_distance_symmetry_test."""

    def __init__(self, anchors: PointSet, other_curve: PlaneCurve):
        self.s1 = anchors
        self._c2 = other_curve

    @property
    def c2(self):
        return self._c2


# ---------------------------------------------------------------------------
# Generic projection to the plane


@dataclass(frozen=True)
class ProjectionReport:
    matrix: tuple
    seed_used: int
    retries: int
    images: tuple
    plane_curves: tuple
    incidences_before: int
    incidences_after: int


def _rand_matrix(rng: random.Random):
    while True:
        M = [[Fraction(rng.randint(-5, 5)) for _ in range(4)] for _ in range(4)]
        if _det4(M):
            return M


def _det4(M) -> Fraction:
    rows = [r[:] for r in M]
    det = Fraction(1)
    for col in range(4):
        piv = next((r for r in range(col, 4) if rows[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, 4):
            f = rows[r][col] / rows[col][col]
            for c in range(col, 4):
                rows[r][c] -= f * rows[col][c]
    return det


def _inv4(M):
    n = 4
    aug = [list(M[r]) + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [v / f for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                g = aug[r][col]
                aug[r] = [a - g * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


_W4 = ("x", "y", "z", "w")


def _project_curve(fc: FourCurve, Minv) -> MPoly:
    """Plane equation of the projected curve by iterated resultants in the
    image coordinates w = M v."""
    wvars = [MPoly.var(_W4, v) for v in _W4]
    images = {}
    for r, name in enumerate(_W4):
        acc = MPoly.zero(_W4)
        for c in range(4):
            if Minv[r][c]:
                acc = acc + wvars[c] * Minv[r][c]
        images[name] = acc

    def pull(p: MPoly) -> MPoly:
        return normalize_primitive(p.rename_vars({"xp": "z", "yp": "w"}).subst(images))

    G1 = pull(fc.f2_s)
    G2 = pull(fc.f2_t)
    G3 = pull(fc.F)
    try:
        r1 = resultant(G1, G3, "w")
        r2 = resultant(G2, G3, "w")
        if r1.is_zero or r2.is_zero:
            raise NonGenericSeed("resultant vanished during elimination")
        R = resultant(normalize_primitive(r1), normalize_primitive(r2), "z")
    except DegreeError as e:
        raise NonGenericSeed(f"degenerate elimination: {e}")
    if R.is_zero:
        raise NonGenericSeed("final resultant vanished")
    R = normalize_primitive(R)
    # repeated factors only get removed while the bivariate gcd is cheap;
    # past that the zero set is what matters and squares are harmless
    if R.total_degree() <= 6:
        R = squarefree_part(R)
    return R


def generic_projection(config: Config, curve_subset: Sequence[FourCurve], seed: int = 0, matrix=None) -> ProjectionReport:
    """Project the n^2 sample pairs and the given curves to the plane by a
    seeded random invertible matrix; verify incidences transfer exactly.

    A seed whose projection loses injectivity or creates spurious
    incidences is rejected and retried (at most 16 times)."""
    sample = [(s, t) for s in config.s2.labels() for t in config.s2.labels()]
    pts4 = {
        (s, t): (
            config.s2[s - 1][0],
            config.s2[s - 1][1],
            config.s2[t - 1][0],
            config.s2[t - 1][1],
        )
        for (s, t) in sample
    }
    for attempt in range(17):
        cur_seed = seed + attempt
        if matrix is not None and attempt == 0:
            M = [[Fraction(v) for v in row] for row in matrix]
            if not _det4(M):
                raise InputError("projection matrix must be invertible")
            Minv = _inv4(M)
        else:
            # draw the small-integer matrix on the substitution side so the
            # eliminated polynomials keep small coefficients
            Minv = _rand_matrix(random.Random(cur_seed))
            M = _inv4(Minv)
        images = {}
        for st, v in pts4.items():
            w = [sum((v[c] * M[r][c] for c in range(4)), Scalar(0)) for r in range(2)]
            images[st] = (w[0], w[1])
        vals = list(images.values())
        if len(set(vals)) != len(vals):
            continue  # collision: not injective on the sample
        try:
            planes = [_project_curve(fc, Minv) for fc in curve_subset]
        except NonGenericSeed:
            continue
        before = after = 0
        ok = True
        for fc, R in zip(curve_subset, planes):
            for st in sample:
                qs = (pts4[st][0], pts4[st][1])
                qt = (pts4[st][2], pts4[st][3])
                b = incidence(fc, qs, qt)
                a = not R.evaluate({"x": images[st][0], "y": images[st][1]})
                before += int(b)
                after += int(a)
                if b != a:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        return ProjectionReport(
            matrix=tuple(tuple(row) for row in M),
            seed_used=cur_seed,
            retries=attempt,
            images=tuple((images[st][0], images[st][1]) for st in sample),
            plane_curves=tuple(planes),
            incidences_before=before,
            incidences_after=after,
        )
    raise NonGenericSeed("no generic projection found within the retry budget")
