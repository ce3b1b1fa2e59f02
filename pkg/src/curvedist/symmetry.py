"""Exhaustive symmetry enumeration for plane curves.

Writes the unknown isometry as S(x,y) = (c x - sigma*s y + t1,
s x + sigma*c y + t2) with c^2 + s^2 = 1, expands f(S(x,y)) - lam*f(x,y),
and equates coefficients.  The scale lam is eliminated by cross-multiplying
against the leading coefficient of f; the pure (c,s) part of the system is
reduced modulo s^2 = 1 - c^2 to A(c) + B(c)*s and then to norm equations
N = A^2 - (1-c^2)B^2, whose gcd pins c.  Translations follow by exact
linear algebra (or small resultant systems), and every candidate is
verified against the curve before being reported.

Rotation data of algebraic degree > 2 cannot be carried by Scalar; such
solutions are reported separately as certified isolating boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence, Union

from .curves import PlaneCurve, detect_special
from .errors import EliminationBudget, UnsupportedScalar
from .isometry import Isometry, fixes_curve
from .mpoly import MPoly, resultant
from .scalar import Scalar
from .upoly import (
    RealAlgebraic,
    UPoly,
    isolate_real_roots,
)

_RING = ("x", "y", "c", "s", "t1", "t2")


@dataclass(frozen=True)
class InfiniteFamily:
    tag: str  # "line" or "circle"
    description: str

    @property
    def kind(self):
        return "infinite"


@dataclass(frozen=True)
class UnrepresentableCandidate:
    """A symmetry whose rotation entries have algebraic degree > 2: reported
    as isolating boxes plus the exact defining polynomial of c."""

    sigma: int
    c_box: tuple[Fraction, Fraction]
    s_box: tuple[Fraction, Fraction]
    t1_box: tuple[Fraction, Fraction]
    t2_box: tuple[Fraction, Fraction]
    c_poly: UPoly


@dataclass(frozen=True)
class FiniteSymmetries:
    members: tuple[Isometry, ...]
    unrepresentable: tuple[UnrepresentableCandidate, ...] = ()

    @property
    def kind(self):
        return "finite"

    def __len__(self):
        return len(self.members)


SymmetryList = Union[FiniteSymmetries, InfiniteFamily]


def find_symmetries(curve: PlaneCurve) -> SymmetryList:
    """All isometries fixing the curve's polynomial up to scale.

    Lines and circles get an InfiniteFamily; otherwise a verified finite
    group plus, possibly, unrepresentable rotation boxes."""
    if curve.family == "line":
        return InfiniteFamily("line", "all translations along the line and flips across it")
    if curve.family == "circle":
        cx, cy, _ = curve.circle_params()
        return InfiniteFamily("circle", f"all rotations about ({cx}, {cy}) and reflections through it")
    special = detect_special(curve.f)
    if special is not None:
        tag, data = special
        if tag == "line":
            return InfiniteFamily("line", "all translations along the line and flips across it")
        return InfiniteFamily("circle", f"all rotations about ({data[0]}, {data[1]}) and reflections through it")
    if not curve.f.is_rational():
        raise UnsupportedScalar("symmetry enumeration requires rational coefficients")
    members: list[Isometry] = []
    boxes: list[UnrepresentableCandidate] = []
    for sigma in (1, -1):
        got = _solve_branch(curve, sigma)
        if got == "radial-invariant":
            # polynomial invariant under every rotation about a point
            return InfiniteFamily("circle", "all rotations about the radial center")
        mem, box = got
        members.extend(mem)
        boxes.extend(box)
    uniq: dict = {}
    for m in members:
        uniq.setdefault(m.key(), m)
    ordered = sorted(
        uniq.values(),
        key=lambda m: (m.sigma, float(m.c), str(m.c), float(m.s), str(m.s), float(m.t1), float(m.t2), str(m.t1), str(m.t2)),
    )
    return FiniteSymmetries(tuple(ordered), tuple(boxes))


# ---------------------------------------------------------------------------
# Equation assembly


def _branch_equations(f: MPoly, sigma: int):
    """Lambda-free coefficient equations of f(S) = lam*f, keyed by the (x,y)
    exponent; values are polynomials in (c, s, t1, t2)."""
    fr = f.with_vars(_RING)
    x = MPoly.var(_RING, "x")
    y = MPoly.var(_RING, "y")
    c = MPoly.var(_RING, "c")
    s = MPoly.var(_RING, "s")
    t1 = MPoly.var(_RING, "t1")
    t2 = MPoly.var(_RING, "t2")
    X = c * x - s * y * sigma + t1
    Y = s * x + c * y * sigma + t2
    img = fr.subst({"x": X, "y": Y})
    co = img.collect(("x", "y"))
    piv, qpiv = f.leading()
    co_piv = co[piv]
    zero = MPoly.zero(co_piv.vars)
    eqs: dict[tuple[int, int], MPoly] = {}
    for e in set(co) | set(f.terms):
        lhs = co.get(e, zero)
        rhs = f.terms.get(e, Scalar(0))
        eqs[e] = lhs * qpiv - co_piv * rhs
    return eqs, piv


_ONE_MINUS_C2 = UPoly([Scalar(1), Scalar(0), Scalar(-1)])


def _reduce_cs(p: MPoly) -> tuple[UPoly, UPoly]:
    """p(c, s) modulo s^2 -> 1 - c^2, returned as (A, B) with p = A + B*s."""
    A = UPoly()
    B = UPoly()
    pw: list[UPoly] = [UPoly.const(1)]
    for exp, coeff in p.terms.items():
        a, b = exp[p.vars.index("c")], exp[p.vars.index("s")]
        q, r = divmod(b, 2)
        while len(pw) <= q:
            pw.append(pw[-1] * _ONE_MINUS_C2)
        term = pw[q] * UPoly([Scalar(0)] * a + [coeff])
        if r:
            B = B + term
        else:
            A = A + term
    return A, B


def _cs_term(p: MPoly, cv: Scalar, sv: Scalar) -> Scalar:
    vals = {v: Scalar(0) for v in p.vars}
    vals["c"] = cv
    vals["s"] = sv
    return p.evaluate(vals)


# ---------------------------------------------------------------------------
# Rational reconstruction of quadratic roots


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -_simplest_between(-hi, -lo)
    n = lo.numerator // lo.denominator
    m = n + (0 if lo == n else 1)  # ceil(lo)
    if m <= hi:
        return Fraction(m)
    frac = _simplest_between(1 / (hi - n), 1 / (lo - n))
    return n + 1 / frac


def materialize_quadratic_roots(roots: list) -> list:
    """Replace conjugate pairs of isolated roots by exact quadratic Scalars
    when an x^2 - Sx + P factor with small rational S, P divides the
    defining polynomial.  Non-matching intervals pass through unchanged."""
    out = list(roots)
    idx = [i for i, r in enumerate(out) if isinstance(r, RealAlgebraic)]
    used: set[int] = set()
    for ii, i in enumerate(idx):
        if i in used:
            continue
        for j in idx[ii + 1 :]:
            if j in used or out[j].poly is not out[i].poly:
                continue
            pair = _try_quadratic_pair(out[i], out[j])
            if pair is not None:
                out[i], out[j] = pair
                used.add(i)
                used.add(j)
                break
    return out


def _try_quadratic_pair(u: RealAlgebraic, v: RealAlgebraic):
    poly = u.poly
    for _ in range(4):
        u.refine(10)
        v.refine(10)
        slo, shi = u.lo + v.lo, u.hi + v.hi
        pcands = (u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi)
        plo, phi = min(pcands), max(pcands)
        S = _simplest_between(slo, shi)
        P = _simplest_between(plo, phi)
        q = UPoly([Scalar(P), Scalar(-S), Scalar(1)])
        if (poly % q).is_zero:
            disc = S * S - 4 * P
            if disc <= 0:
                return None
            try:
                rt = Scalar.coerce(disc).sqrt()
            except Exception:
                return None
            half = Fraction(1, 2)
            r_plus = Scalar(S * half) + rt * half
            r_minus = Scalar(S * half) - rt * half
            # map each Scalar back to its interval (u < v or v < u)
            lo, hi = (r_minus, r_plus) if u.lo < v.lo else (r_plus, r_minus)
            if _inside(lo, u) and _inside(hi, v):
                return (lo, hi)
            return None
    return None


def _inside(r: Scalar, iv: RealAlgebraic) -> bool:
    return (r - iv.lo).sign() > 0 and (r - iv.hi).sign() < 0


# ---------------------------------------------------------------------------
# Interval helpers for the unrepresentable boxes


def _iv_mul(a, b):
    cands = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(cands), max(cands))


def _iv_sub(a, b):
    return (a[0] - b[1], a[1] - b[0])


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_div(a, b):
    cands = (a[0] / b[0], a[0] / b[1], a[1] / b[0], a[1] / b[1])
    return (min(cands), max(cands))


def _sqrt_iv(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Sound enclosure of sqrt over [max(lo,0), hi]."""
    lo = max(lo, Fraction(0))
    SC = 1 << 64

    def lower(q):
        return Fraction(isqrt(q.numerator * q.denominator * SC * SC), q.denominator * SC)

    def upper(q):
        return Fraction(isqrt(q.numerator * q.denominator * SC * SC) + 1, q.denominator * SC)

    return (lower(lo), upper(hi))


def _poly_iv(p: UPoly, box) -> tuple[Fraction, Fraction]:
    return p.eval_interval(box[0], box[1])


def _cs_poly_iv(p: MPoly, cbox, sbox):
    """Interval value of p(c, s) over a box (rational coefficients)."""
    acc = (Fraction(0), Fraction(0))
    for exp, coeff in p.terms.items():
        ci = exp[p.vars.index("c")]
        si = exp[p.vars.index("s")]
        t = (Fraction(1), Fraction(1))
        for box, e in ((cbox, ci), (sbox, si)):
            for _ in range(e):
                t = _iv_mul(t, box)
        cf = coeff.as_fraction()
        t = (t[0] * cf, t[1] * cf) if cf >= 0 else (t[1] * cf, t[0] * cf)
        acc = _iv_add(acc, t)
    return acc


# ---------------------------------------------------------------------------
# Branch solver


def _solve_branch(curve: PlaneCurve, sigma: int):
    f = curve.f
    d = f.total_degree()
    eqs, piv = _branch_equations(f, sigma)
    top_pairs = []
    low_eqs = {}
    for e, p in eqs.items():
        if e[0] + e[1] == d:
            if p.degree_in("t1") > 0 or p.degree_in("t2") > 0:  # pragma: no cover
                raise AssertionError("top level must be translation-free")
            top_pairs.append(_cs_only(p))
        else:
            low_eqs[e] = p
    top_pairs = [ab for ab in top_pairs if not (ab[0].is_zero and ab[1].is_zero)]
    if not top_pairs:
        return _solve_radial(curve, sigma, low_eqs)
    norms = []
    for A, B in top_pairs:
        n = A * A - _ONE_MINUS_C2 * B * B
        if not n.is_zero:
            norms.append(n)
    if not norms:  # pragma: no cover - A=B=0 pairs were filtered above
        return _solve_radial(curve, sigma, low_eqs)
    g = norms[0]
    for n in norms[1:]:
        g = g.gcd(n)
    if g.degree < 1:
        return [], []
    members: list[Isometry] = []
    boxes: list[UnrepresentableCandidate] = []
    croots = materialize_quadratic_roots(isolate_real_roots(g))
    croots = [r for r in croots if _in_unit(r)]
    for cr in croots:
        if isinstance(cr, Scalar):
            pairs = _signed_pairs(cr, top_pairs)
            if pairs is None:
                boxes.extend(_box_candidates_scalar(curve, sigma, cr, top_pairs, low_eqs))
                continue
            for cv, sv in pairs:
                members.extend(_translations_for(curve, sigma, cv, sv, low_eqs))
        else:
            boxes.extend(_box_candidates(curve, sigma, cr, top_pairs, low_eqs))
    return members, boxes


def _cs_only(p: MPoly) -> tuple[UPoly, UPoly]:
    q = MPoly(("c", "s"))
    ic = p.vars.index("c")
    is_ = p.vars.index("s")
    for exp, coeff in p.terms.items():
        q.terms[(exp[ic], exp[is_])] = coeff
    return _reduce_cs(q)


def _in_unit(r) -> bool:
    if isinstance(r, Scalar):
        return (r - 1).sign() <= 0 and (r + 1).sign() >= 0
    return r.compare_rational(Fraction(1)) <= 0 and r.compare_rational(Fraction(-1)) >= 0


def _signed_pairs(cv: Scalar, top_pairs):
    """Exact sine values compatible with the top-level equations at c=cv,
    or None when the sine is not representable alongside this cosine."""
    s2 = Scalar(1) - cv * cv
    if not s2:
        cands = [Scalar(0)]
    else:
        try:
            root = s2.sqrt() if s2.is_rational else s2.sqrt_in_field()
        except Exception:
            root = None
        if root is None:
            return None
        cands = [root, -root]
    out = []
    for sv in cands:
        ok = True
        for A, B in top_pairs:
            if A(cv) + B(cv) * sv:
                ok = False
                break
        if ok:
            out.append((cv, sv))
    return out


def _translations_for(curve: PlaneCurve, sigma: int, cv: Scalar, sv: Scalar, low_eqs) -> list[Isometry]:
    teqs = []
    for p in low_eqs.values():
        q = p.partial_eval({"c": cv, "s": sv})
        q = _restrict_t(q)
        if not q.is_zero:
            teqs.append(q)
    sols = _solve_tpair(teqs)
    out = []
    for t1v, t2v in sols:
        cand = Isometry(cv, sv, sigma, t1v, t2v)
        if fixes_curve(cand, curve):
            out.append(cand)
    return out


def _restrict_t(p: MPoly) -> MPoly:
    q = MPoly(("t1", "t2"))
    i1 = p.vars.index("t1")
    i2 = p.vars.index("t2")
    for exp, coeff in p.terms.items():
        key = (exp[i1], exp[i2])
        cur = q.terms.get(key, Scalar(0)) + coeff
        if cur:
            q.terms[key] = cur
        else:
            q.terms.pop(key, None)
    return q


def _solve_tpair(teqs: list[MPoly]) -> list[tuple[Scalar, Scalar]]:
    """All common zeros of polynomials in (t1, t2); raises EliminationBudget
    when the solution set is not finite or needs unsupported arithmetic."""
    eqs = [e for e in teqs if not e.is_zero]
    if not eqs:
        raise EliminationBudget("translation variety is not finite")
    for e in eqs:
        if e.is_constant:
            return []
    # exact linear solve when two independent linear equations exist
    linear = [e for e in eqs if e.total_degree() == 1]
    rows = []
    for e in linear:
        rows.append(
            (
                e.coefficient((1, 0)),
                e.coefficient((0, 1)),
                e.coefficient((0, 0)),
            )
        )
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            a1, b1, g1 = rows[i]
            a2, b2, g2 = rows[j]
            det = a1 * b2 - a2 * b1
            if not det:
                continue
            inv = det.inverse()
            t1v = (b1 * g2 - b2 * g1) * inv
            t2v = (a2 * g1 - a1 * g2) * inv
            if all(not e.evaluate({"t1": t1v, "t2": t2v}) for e in eqs):
                return [(t1v, t2v)]
            return []
    return _solve_tpair_nonlinear(eqs)


def _solve_tpair_nonlinear(eqs: list[MPoly]) -> list[tuple[Scalar, Scalar]]:
    cands1: list[UPoly] = []
    for e in eqs:
        if e.degree_in("t2") == 0 and e.degree_in("t1") >= 1:
            cands1.append(e.as_upoly("t1"))
    withy = [e for e in eqs if e.degree_in("t2") >= 1]
    for i in range(len(withy)):
        for j in range(i + 1, len(withy)):
            r = resultant(withy[i], withy[j], "t2")
            if r.is_zero:
                continue
            if r.is_constant:
                return []
            cands1.append(r.as_upoly("t1"))
    if not cands1:
        raise EliminationBudget("cannot isolate the translation: common components remain")
    g = cands1[0]
    for p in cands1[1:]:
        g = g.gcd(p)
    if g.degree < 1:
        return []
    if not g.is_rational():
        raise EliminationBudget("translation solving over this field is unsupported")
    out = []
    for r1 in materialize_quadratic_roots(isolate_real_roots(g)):
        if not isinstance(r1, Scalar):
            raise EliminationBudget("translation entry of algebraic degree > 2")
        sub = []
        for e in eqs:
            q = e.partial_eval({"t1": r1})
            if q.is_constant:
                if q.constant_value():
                    sub = None
                    break
                continue
            sub.append(q.as_upoly("t2"))
        if sub is None:
            continue
        if not sub:
            raise EliminationBudget("translation variety is not finite")
        h = sub[0]
        for p in sub[1:]:
            h = h.gcd(p)
        if h.degree < 1:
            continue
        if not h.is_rational():
            h_roots = _roots_scalar_coeffs(h)
        else:
            h_roots = materialize_quadratic_roots(isolate_real_roots(h))
        for r2 in h_roots:
            if not isinstance(r2, Scalar):
                raise EliminationBudget("translation entry of algebraic degree > 2")
            if all(not e.evaluate({"t1": r1, "t2": r2}) for e in eqs):
                out.append((r1, r2))
    return out


def _roots_scalar_coeffs(h: UPoly) -> list[Scalar]:
    """Scalar roots of a polynomial with quadratic-field coefficients, found
    through the rational norm h * conj(h) and verified exactly."""
    conj = UPoly([Scalar(c.a, -c.b, c.k) if not c.is_rational else c for c in h.coeffs])
    norm = h * conj
    if not norm.is_rational():  # pragma: no cover
        raise EliminationBudget("norm trick failed")
    out = []
    for r in materialize_quadratic_roots(isolate_real_roots(norm)):
        if isinstance(r, Scalar):
            try:
                if not h(r):
                    out.append(r)
            except Exception:
                continue
        else:
            raise EliminationBudget("translation entry of algebraic degree > 2")
    return out


# ---------------------------------------------------------------------------
# Radial top form: the scale is forced to 1 and translations are solved
# symbolically before c


def _solve_radial(curve: PlaneCurve, sigma: int, low_eqs):
    f = curve.f
    d = f.total_degree()
    if d % 2:  # pragma: no cover - odd-degree forms cannot be radial
        raise EliminationBudget("degenerate top level")
    # with lam eliminated by the pivot, remaining equations already encode
    # lam = co_piv/qpiv; for radial tops that ratio is identically 1, so
    # low_eqs is the full system.  Level d-1 is linear in (t1, t2).
    lin = []
    rest = []
    for e, p in low_eqs.items():
        q = p
        if e[0] + e[1] == d - 1:
            lin.append(q)
        else:
            rest.append(q)
    best = None
    for i in range(len(lin)):
        for j in range(i + 1, len(lin)):
            a1, b1, g1 = _lin_parts(lin[i])
            a2, b2, g2 = _lin_parts(lin[j])
            det = a1 * b2 - a2 * b1
            dA, dB = _cs_only(det)
            if dA.is_zero and dB.is_zero:
                continue
            best = (a1, b1, g1, a2, b2, g2, det)
            break
        if best:
            break
    if best is None:
        raise EliminationBudget("radial translation system is degenerate")
    a1, b1, g1, a2, b2, g2, det = best
    n1 = b1 * g2 - b2 * g1
    n2 = a2 * g1 - a1 * g2
    # substitute t1 = n1/det, t2 = n2/det into every remaining equation and
    # clear denominators
    cs_eqs = []
    for p in lin + rest:
        by_t = p.collect(("t1", "t2"))
        m = max(sum(k) for k in by_t)
        acc = MPoly.zero(p.vars)
        for (e1, e2), coeff in by_t.items():
            term = coeff.with_vars(p.vars) * n1**e1 * n2**e2 * det ** (m - e1 - e2)
            acc = acc + term
        A, B = _cs_only(acc)
        if not (A.is_zero and B.is_zero):
            cs_eqs.append((A, B))
    if not cs_eqs:
        return "radial-invariant"
    norms = [A * A - _ONE_MINUS_C2 * B * B for A, B in cs_eqs]
    norms = [n for n in norms if not n.is_zero]
    if not norms:
        return "radial-invariant"
    g = norms[0]
    for n in norms[1:]:
        g = g.gcd(n)
    if g.degree < 1:
        return [], []
    members = []
    boxes: list[UnrepresentableCandidate] = []
    croots = materialize_quadratic_roots(isolate_real_roots(g))
    croots = [r for r in croots if _in_unit(r)]
    for cr in croots:
        if not isinstance(cr, Scalar):
            raise EliminationBudget("radial rotation of algebraic degree > 2")
        pairs = _signed_pairs(cr, cs_eqs)
        if pairs is None:
            raise EliminationBudget("radial rotation with unrepresentable sine")
        for cv, sv in pairs:
            dv = _cs_term(det, cv, sv)
            if not dv:
                continue
            inv = dv.inverse()
            t1v = _cs_term(n1, cv, sv) * inv
            t2v = _cs_term(n2, cv, sv) * inv
            cand = Isometry(cv, sv, sigma, t1v, t2v)
            if fixes_curve(cand, curve):
                members.append(cand)
    return members, boxes


def _lin_parts(p: MPoly):
    """Split a (t1, t2)-linear equation into (a, b, g): a*t1 + b*t2 + g."""
    by_t = p.collect(("t1", "t2"))
    zero = MPoly.zero(tuple(v for v in p.vars if v not in ("t1", "t2")))
    a = by_t.get((1, 0), zero)
    b = by_t.get((0, 1), zero)
    g = by_t.get((0, 0), zero)
    full = p.vars
    return a.with_vars(full), b.with_vars(full), g.with_vars(full)


# ---------------------------------------------------------------------------
# Unrepresentable boxes


def _split_t(low_eqs):
    """(translation-free equations as (A, B) pairs, translation-carrying ones)."""
    tfree = []
    tdep = []
    for p in low_eqs.values():
        if p.degree_in("t1") == 0 and p.degree_in("t2") == 0:
            tfree.append(_cs_only(p))
        else:
            tdep.append(p)
    return tfree, tdep


def _surviving_signs(tfree_pairs, sgn) -> set[int]:
    """Which s-sign branches satisfy every translation-free equation
    A(c) + B(c) s = 0, given an exact sign oracle for polynomials at c."""
    branches = {1, -1}
    for A, B in tfree_pairs:
        if A.is_zero and B.is_zero:
            continue
        n = A * A - _ONE_MINUS_C2 * B * B
        if n.is_zero or sgn(n) == 0:
            sb = sgn(B) if not B.is_zero else 0
            if sb == 0:
                continue  # then A(c) = 0 as well: both branches pass
            sa = sgn(A) if not A.is_zero else 0
            if sa == 0:
                return set()  # would force s = 0, impossible for |c| < 1
            branches &= {-sa * sb}
            if not branches:
                return set()
        else:
            return set()
    return branches


def _t_linear(p: MPoly) -> bool:
    return all(e[p.vars.index("t1")] + e[p.vars.index("t2")] <= 1 for e in p.terms)


def _box_iv_eval(p: MPoly, boxes: dict) -> tuple[Fraction, Fraction]:
    """Sound interval value of a rational-coefficient equation over var boxes."""
    acc = (Fraction(0), Fraction(0))
    for exp, coeff in p.terms.items():
        t = (Fraction(1), Fraction(1))
        for v, e in zip(p.vars, exp):
            box = boxes[v]
            for _ in range(e):
                t = _iv_mul(t, box)
        cf = coeff.as_fraction()
        t = (t[0] * cf, t[1] * cf) if cf >= 0 else (t[1] * cf, t[0] * cf)
        acc = _iv_add(acc, t)
    return acc


def _assemble_box(curve, sigma, cboxes, top_pairs, low_eqs, cpoly, sgn):
    """Candidate boxes at an exact cosine with out-of-field data.  Every
    translation-free equation is decided exactly; translation-carrying
    equations are refuted by interval arithmetic when possible."""
    tfree, tdep = _split_t(low_eqs)
    branches = _surviving_signs(top_pairs + tfree, sgn)
    lin = [p for p in tdep if _t_linear(p)]
    out = []
    for s_sign in sorted(branches, reverse=True):
        cand = None
        alive = True
        for cbox in cboxes():
            s2 = _iv_sub((Fraction(1), Fraction(1)), _iv_mul(cbox, cbox))
            slo, shi = _sqrt_iv(s2[0], s2[1])
            sbox = (slo, shi) if s_sign > 0 else (-shi, -slo)
            got = _interval_cramer(lin, cbox, sbox)
            if got is None:
                continue
            boxes = {"c": cbox, "s": sbox, "t1": got[0], "t2": got[1]}
            refuted = False
            for p in tdep:
                lo, hi = _box_iv_eval(p, boxes)
                if lo > 0 or hi < 0:
                    refuted = True
                    break
            if refuted:
                alive = False
                break
            cand = UnrepresentableCandidate(sigma, cbox, sbox, got[0], got[1], cpoly)
            break
        if alive and cand is None:
            raise EliminationBudget("could not resolve a translation box")
        if cand is not None:
            out.append(cand)
    return out


def _box_candidates(curve, sigma, cr: RealAlgebraic, top_pairs, low_eqs):
    def cboxes():
        for _ in range(40):
            yield (cr.lo, cr.hi)
            cr.refine(4)

    return _assemble_box(curve, sigma, cboxes, top_pairs, low_eqs, cr.poly, cr.sign_of)


def _box_candidates_scalar(curve, sigma, cv: Scalar, top_pairs, low_eqs):
    """Boxes for an exact quadratic cosine whose sine leaves the field."""
    from .upoly import _min_quadratic

    def cboxes():
        for scale in (64, 96, 128, 192, 256):
            yield cv.bounds(scale)

    def sgn(u: UPoly) -> int:
        return u(cv).sign()

    return _assemble_box(curve, sigma, cboxes, top_pairs, low_eqs, _min_quadratic(cv), sgn)


def _interval_cramer(lin, cbox, sbox):
    n = len(lin)
    for i in range(n):
        for j in range(i + 1, n):
            a1, b1, g1 = (_cs_poly_iv(q, cbox, sbox) for q in _lin_parts_cs(lin[i]))
            a2, b2, g2 = (_cs_poly_iv(q, cbox, sbox) for q in _lin_parts_cs(lin[j]))
            det = _iv_sub(_iv_mul(a1, b2), _iv_mul(a2, b1))
            if det[0] <= 0 <= det[1]:
                continue
            t1 = _iv_div(_iv_sub(_iv_mul(b1, g2), _iv_mul(b2, g1)), det)
            t2 = _iv_div(_iv_sub(_iv_mul(a2, g1), _iv_mul(a1, g2)), det)
            return (t1, t2)
    return None


def _lin_parts_cs(p: MPoly):
    a, b, g = _lin_parts(p)
    return (_cs_mpoly(a), _cs_mpoly(b), _cs_mpoly(g))


def _cs_mpoly(p: MPoly) -> MPoly:
    q = MPoly(("c", "s"))
    ic = p.vars.index("c")
    is_ = p.vars.index("s")
    for exp, coeff in p.terms.items():
        key = (exp[ic], exp[is_])
        cur = q.terms.get(key, Scalar(0)) + coeff
        if cur:
            q.terms[key] = cur
        else:  # pragma: no cover
            q.terms.pop(key, None)
    return q
