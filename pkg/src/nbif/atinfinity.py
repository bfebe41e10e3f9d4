"""Behaviour at infinity: hypotheses, bifurcation set, family counts.

Conventions used throughout:

* Faces of class plus are taken from f~ = f - f(0,0); removing the constant
  term is what makes those faces visible at all (the origin has level 0, so
  any f with f(0,0) != 0 has no face of positive level).
* Bad faces and faces of class minus are taken from f itself, so b_P keeps
  the constant term and its values are genuine values of f.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .bivar import BiPoly
from .errors import (
    BadFaceNotAllowed,
    HypothesisViolated,
    MorseViolation,
    NonIsolatedSingularities,
    NotBadFace,
    NotDoubleRoot,
)
from .criticality import critical_values, has_isolated_singularities
from .exactmath import UniPoly, alg_image, count_real_roots, isolate_real_roots, squarefree_decomposition
from .exactmath.algebraic import RealAlgebraicNumber, alg_eq, alg_image_rational, dedupe, sort_values
from .exactmath.upoly import poly_gcd
from .fan import chart_expansion, complete_fan
from .newton import MINUS, PLUS, ZERO, bad_face_b, infinity_faces

ONE_SIDE, BOTH_SIDES, ISOLATED, UNDETERMINED = "one_side", "both_sides", "isolated", "undetermined"


def shifted(f):
    """f - f(0,0)."""
    c = f.constant_term()
    return f - c if c else f


def plus_faces(f):
    g = shifted(f)
    if g.is_zero():
        return []
    return [F for F in infinity_faces(g) if F.cls == PLUS]


def bad_faces(f):
    return [F for F in infinity_faces(f) if F.cls == ZERO]


def minus_faces(f):
    return [F for F in infinity_faces(f) if F.cls == MINUS]


def _nonzero_real_roots(p):
    if p.degree <= 0:
        return 0
    return count_real_roots(p, mode="nonzero")


def _has_nonzero_multiple_root(p):
    for fac, mult in squarefree_decomposition(p):
        if mult >= 2 and _nonzero_real_roots(fac):
            return True
    return False


# ---------------------------------------------------------------------------
# hypotheses


def is_nondegenerate(face):
    """No critical point of f_P in (R*)^2.

    With d != 0 the Euler relation p x f_x + q y f_y = d f_P forces f_P = 0
    at such a point, which reduces the question to a nonzero real multiple
    root of the profile phi.
    """
    if face.cls == ZERO:
        raise BadFaceNotAllowed(f"{face.P} is a bad face; use is_morse_bad_face")
    return not _has_nonzero_multiple_root(face.phi)


def _bad_b(face):
    if face.cls != ZERO:
        raise NotBadFace(f"{face.P} has level {face.d}")
    return bad_face_b(face)


def is_morse_bad_face(face):
    b = _bad_b(face)
    db = b.deriv()
    if db.degree <= 0:
        return True
    g = poly_gcd(db, db.deriv())
    return _nonzero_real_roots(g) == 0


@dataclass
class HypothesisVerdict:
    nondegenerate_plus_minus: bool
    degenerate_faces: list
    morse_bad_faces: bool
    non_morse_faces: list

    @property
    def ok(self):
        return self.nondegenerate_plus_minus and self.morse_bad_faces

    def summary(self):
        parts = []
        if self.degenerate_faces:
            parts.append("degenerate faces " + ", ".join(str(F.P) for F in self.degenerate_faces))
        if self.non_morse_faces:
            parts.append("non-Morse bad faces " + ", ".join(str(F.P) for F in self.non_morse_faces))
        return "; ".join(parts) if parts else "all hypotheses hold"


def check_hypotheses(f):
    deg = [F for F in plus_faces(f) + minus_faces(f) if not is_nondegenerate(F)]
    nm = [F for F in bad_faces(f) if not is_morse_bad_face(F)]
    return HypothesisVerdict(not deg, deg, not nm, nm)


# ---------------------------------------------------------------------------
# conditions (ii) and (iii)


def condition_ii(f):
    """(holds, witnesses): plus faces of f~ whose face function vanishes somewhere in (R*)^2."""
    wit = [F for F in plus_faces(f) if _nonzero_real_roots(F.phi)]
    return bool(wit), wit


def bad_face_critical_points(face):
    """Nonzero real critical points of b_P, ascending."""
    b = _bad_b(face)
    db = b.deriv()
    if db.degree <= 0:
        return []
    return [t for t in isolate_real_roots(db) if t.sign() != 0]


def condition_iii(f):
    """[(face, t*, b_P(t*))] over all bad faces, in counter-clockwise face order."""
    faces = bad_faces(f)
    bad = [F for F in faces if not is_morse_bad_face(F)]
    if bad:
        raise MorseViolation(bad)
    out = []
    for F in faces:
        b = bad_face_b(F)
        for t in bad_face_critical_points(F):
            out.append((F, t, alg_image(b, t)))
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass
class CountReport:
    R_plus: int
    R_zero: int
    total: int
    vanish_min: int
    vanish_max: int
    exact_split: tuple = None
    tangencies: list = field(default_factory=list)

    @property
    def cleav(self):
        return None if self.exact_split is None else self.exact_split[0]

    @property
    def vanish(self):
        return None if self.exact_split is None else self.exact_split[1]


@dataclass
class BifurcationReport:
    sigma: list
    cond_ii: bool
    cond_ii_faces: list
    cond_iii: list
    b_set: list  # [(RealAlgebraicNumber, set of tags)], ascending
    verdict: HypothesisVerdict = None
    counts: CountReport = None
    bound: object = None

    @property
    def values(self):
        return [v for v, _ in self.b_set]

    def __len__(self):
        return len(self.b_set)


def bifurcation_set(f):
    """B_f for f satisfying the non-degeneracy and Morse hypotheses."""
    if not isinstance(f, BiPoly):
        raise TypeError("expected a BiPoly")
    verdict = check_hypotheses(f)
    if not verdict.ok:
        raise HypothesisViolated(verdict)
    sigma = critical_values(f)
    ok2, wit = condition_ii(f)
    c3 = condition_iii(f)
    vals = list(sigma)
    tags = [{"critical"} for _ in sigma]
    if ok2:
        vals.append(RealAlgebraicNumber.from_rational(f.constant_term()))
        tags.append({"cond_ii"})
    for _, _, v in c3:
        vals.append(v)
        tags.append({"cond_iii"})
    merged = dedupe(vals, tags)
    order = sort_values([v for v, _ in merged])
    ordered = []
    for v in order:
        for w, t in merged:
            if w is v:
                ordered.append((v, t))
                break
    return BifurcationReport(sigma, ok2, wit, c3, ordered, verdict)


# ---------------------------------------------------------------------------
# tangency classification and counts


def _laurent_eval(p, k, s):
    """s^k p(s) for a polynomial p, integer k and real algebraic s != 0."""
    if k >= 0:
        return alg_image(p.mul_t(k), s)
    return alg_image_rational(p, UniPoly.const(1).mul_t(-k), s)


def classify_tangency(chart, c, s):
    """Side of the bad divisor on which {f = c} approaches the point (0, s).

    ``chart`` must belong to a cone whose left ray is a bad face (d_left = 0);
    s must be a double root of g~(v) = g(v) - c v^(-d_right).
    """
    if chart.d_left != 0:
        raise NotBadFace("chart does not sit on a bad divisor (d_left != 0)")
    if not isinstance(s, RealAlgebraicNumber):
        s = RealAlgebraicNumber.from_rational(s)
    if not isinstance(c, RealAlgebraicNumber):
        c = RealAlgebraicNumber.from_rational(c)
    if s.sign() == 0:
        raise NotDoubleRoot("root must be nonzero")
    # v^dr g~(v) = G(v) - c with G(v) = v^dr g(v): same nonzero roots and multiplicities
    g, k = chart.g, chart.d_right
    G0 = _laurent_eval(g, k, s)
    if not alg_eq(G0, c):
        raise NotDoubleRoot("s is not a root of g~")
    # G'(v) = v^(k-1) (k g + v g'); G''(s) != 0 iff (k g + v g')'(s) != 0 when G'(s) = 0
    dG = g * k + g.deriv().mul_t(1)
    if alg_image(dG, s).sign() != 0:
        raise NotDoubleRoot("s is a simple root of g~")
    if alg_image(dG.deriv(), s).sign() == 0:
        raise NotDoubleRoot("s has multiplicity above 2")
    h0 = chart.h.eval_x(0) if not chart.h.is_zero() else UniPoly()
    if h0.is_zero() or alg_image(h0, s).sign() == 0:
        return UNDETERMINED
    return ONE_SIDE


def _fan_for(f):
    covs = [F.P for F in infinity_faces(f)]
    return complete_fan(covs)


def bad_face_tangencies(f):
    """[(face, t*, s, c, kind)] for every nonzero critical point of every bad face."""
    out = []
    faces = bad_faces(f)
    if not faces:
        return out
    fan = _fan_for(f)
    for F in faces:
        i = fan.index_of(F.P)
        ch = chart_expansion(f, fan, i)
        b = bad_face_b(F)
        nxt = fan.cone(i)[1]
        # on u = 0 the face monomial x^|q| y^|p| equals v^e, e = +-1
        e = abs(F.P.q) * nxt.p + abs(F.P.p) * nxt.q
        for t in bad_face_critical_points(F):
            c = alg_image(b, t)
            s = t if e == 1 else t.reciprocal()
            out.append((F, t, s, c, classify_tangency(ch, c, s)))
    return out


def counts(f):
    """Numbers of cleaving and vanishing families at infinity."""
    verdict = check_hypotheses(f)
    if not verdict.ok:
        raise HypothesisViolated(verdict)
    if not has_isolated_singularities(f):
        raise NonIsolatedSingularities("the critical locus of f is not finite")
    R_plus = sum(_nonzero_real_roots(F.phi) for F in plus_faces(f))
    tang = bad_face_tangencies(f)
    R_zero = len(tang)
    total = 2 * (R_plus + R_zero)
    resolved = sum(1 for *_, kind in tang if kind == ONE_SIDE)
    open_ = R_zero - resolved
    vmin, vmax = resolved, resolved + 2 * open_
    split = None
    if open_ == 0:
        split = (total - R_zero, R_zero)
    return CountReport(R_plus, R_zero, total, vmin, vmax, split, tang)


def r_plus(f):
    return sum(_nonzero_real_roots(F.phi) for F in plus_faces(f))


def r_zero(f):
    return sum(_nonzero_real_roots(bad_face_b(F).deriv()) for F in bad_faces(f))


def constant_value(f):
    return Fraction(f.constant_term())
