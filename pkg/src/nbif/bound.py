"""Upper bound on |B_f| and its refinement by successive toric modifications.

The coarse bound is |Sigma_f| + eps + R0 + sum of mu over the minus faces.
``refine_bound`` replaces the (mu - 1) share of a rational multiple root of a
chart profile by what a local toric modification at that root actually
needs, keeping a ledger of the running total Lambda.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .atinfinity import bad_faces, minus_faces, plus_faces, _nonzero_real_roots
from .bivar import BiPoly, translate_y
from .criticality import critical_values
from .errors import ConstantPolynomial, NonPositiveCovector, WrongFaceClass
from .exactmath import count_real_roots, isolate_real_roots, squarefree_decomposition
from .fan import chart_expansion, complete_fan, complete_local_fan, expand_in_chart, chart_map
from .newton import MINUS, convex_hull, covector, edge_covectors, face_for, infinity_faces

MAX_DEPTH = 64


def _multiple_roots_weight(p):
    """Sum of (mult - 1) over the nonzero real roots of p."""
    total = 0
    for fac, mult in squarefree_decomposition(p):
        if mult >= 2:
            total += (mult - 1) * count_real_roots(fac, mode="nonzero") if fac.degree > 0 else 0
    return total


def mu_face(face):
    if face.cls != MINUS:
        raise WrongFaceClass(f"mu is defined on minus faces, got class {face.cls}")
    return _multiple_roots_weight(face.phi)


def _r0_profile(face):
    """Nonzero real critical points of t^k0 phi(t), k0 the base index (any sign)."""
    step = face.dir
    i = 0 if step[0] else 1
    k0 = face.base[i] // step[i]
    phi = face.phi
    # (t^k phi)' = t^(k-1) (k phi + t phi')
    d = phi * k0 + phi.deriv().mul_t(1)
    return _nonzero_real_roots(d)


@dataclass
class BoundReport:
    sigma_count: int
    epsilon: int
    R_zero: int
    mu_sum: int
    mu_faces: list = field(default_factory=list)  # [(covector, mu)]

    @property
    def bound(self):
        return self.sigma_count + self.epsilon + self.R_zero + self.mu_sum

    def __int__(self):
        return self.bound


def _check(f):
    if not isinstance(f, BiPoly):
        raise TypeError("expected a BiPoly")
    if f.is_constant():
        raise ConstantPolynomial("the bound needs a non-constant polynomial")


def theorem5_bound(f):
    """Itemised coarse bound; ``int(report)`` or ``report.bound`` is the number."""
    _check(f)
    sigma = len(critical_values(f))
    rp = sum(_nonzero_real_roots(F.phi) for F in plus_faces(f))
    r0 = sum(_r0_profile(F) for F in bad_faces(f))
    mus = [(F.P, mu_face(F)) for F in minus_faces(f)]
    return BoundReport(sigma, 1 if rp else 0, r0, sum(m for _, m in mus), mus)


# ---------------------------------------------------------------------------
# local data at a translated point


@dataclass(frozen=True)
class ChartNormalForm:
    """f^sigma = x^d (y + s)^d_prime F(x, y), F = y^mu g(y) + x h(x, y), g(0) != 0."""

    d: int
    d_prime: int
    s: Fraction
    mu: int
    F: BiPoly

    def __post_init__(self):
        col = self.F.eval_x(0)
        if col.is_zero() or col.order_at_zero() != self.mu:
            raise ValueError("F(0, y) must vanish to order exactly mu at y = 0")

    def shifted(self):
        return self.F.shift_exponents(self.d, 0)


@dataclass(frozen=True)
class LocalPolygon:
    support: frozenset
    faces: tuple  # compact faces (Face objects) with positive covectors, CCW


def local_polygon(cnf):
    G = cnf.shifted()
    pts = convex_hull(G.support)
    if len(pts) < 2:
        return LocalPolygon(frozenset(G.support), ())
    from .newton import NewtonPolygon

    covs = [P for P in edge_covectors(NewtonPolygon(frozenset(G.support), tuple(pts))) if P.p > 0 and P.q > 0]
    # counter-clockwise in the first quadrant: from (1, 0) towards (0, 1)
    covs.sort(key=lambda P: Fraction(P.q, P.p))
    return LocalPolygon(frozenset(G.support), tuple(face_for(G, P) for P in covs))


def _n_extent(face):
    (a, b) = face.endpoints
    return abs(a[1] - b[1])


def heights(cnf, poly=None):
    """(ell_plus, ell_zero, ell_minus); an empty region has height 0."""
    poly = poly or local_polygon(cnf)
    lm = sum(_n_extent(F) for F in poly.faces if F.d < 0)
    l0 = sum(_n_extent(F) for F in poly.faces if F.d == 0)
    return cnf.mu - lm - l0, l0, lm


def lambda_value(Q, cnf, untreated=None):
    """lambda(Q; f^sigma).

    ``untreated`` optionally restricts the d < 0 branch to the given nonzero
    roots of the face profile phi (values in its step variable); by default
    every multiple root counts as untreated.
    """
    Q = covector(Q)
    if not (Q.p > 0 and Q.q > 0):
        raise NonPositiveCovector(f"{Q} is not a positive covector")
    face = face_for(cnf.shifted(), Q)
    if face is None:
        return 0
    if face.d > 0:
        return 0
    if face.d == 0:
        return _r0_profile(face)
    if untreated is None:
        return _multiple_roots_weight(face.phi)
    from .exactmath.algebraic import alg_eq

    total = 0
    for fac, mult in squarefree_decomposition(face.phi):
        if mult < 2:
            continue
        for r in isolate_real_roots(fac):
            if r.sign() != 0 and any(alg_eq(r, u) for u in untreated):
                total += mult - 1
    return total


# ---------------------------------------------------------------------------
# sites and the ledger


@dataclass
class _Site:
    label: str
    mu: int
    s: object  # Fraction or RealAlgebraicNumber
    bracket: BiPoly  # g(v) + u h(u, v) in chart coordinates
    d: int
    d_prime: int
    depth: int


def _chart_sites(chart, d, d_prime, label, depth):
    """Nonzero real multiple roots of the chart profile g, as sites."""
    out = []
    bracket = BiPoly({(0, k): c for k, c in enumerate(chart.g.coeffs) if c}) + chart.h.shift_exponents(1, 0)
    for fac, mult in squarefree_decomposition(chart.g):
        if mult < 2 or fac.degree <= 0:
            continue
        for r in isolate_real_roots(fac):
            if r.sign() == 0:
                continue
            s = r.as_fraction() if r.is_rational() else r
            out.append(_Site(f"{label} s={s if r.is_rational() else r.approx(8)}", mult, s, bracket, d, d_prime, depth))
    return out


def _global_sites(f):
    faces = minus_faces(f)
    if not faces:
        return []
    fan = complete_fan([F.P for F in infinity_faces(f)])
    out = []
    for F in faces:
        i = fan.index_of(F.P)
        ch = chart_expansion(f, fan, i)
        out.extend(_chart_sites(ch, ch.d_left, ch.d_right, f"R={F.P}", 0))
    return out


def normal_form(site):
    F = translate_y(site.bracket, site.s)
    return ChartNormalForm(site.d, site.d_prime, Fraction(site.s), site.mu, F)


def _refine_site(site):
    """(epsilon_sigma, [(Q, lambda)], children, heights) for a rational site."""
    cnf = normal_form(site)
    poly = local_polygon(cnf)
    lp, l0, lm = heights(cnf, poly)
    eps = 1 if lp >= 2 else 0
    lambdas = []
    children = []
    if poly.faces:
        fan = complete_local_fan([F.P for F in poly.faces])
        for F in poly.faces:
            lam = lambda_value(F.P, cnf)
            lambdas.append((F.P, lam))
            if F.d < 0 and lam:
                j = fan.index_of(F.P)
                M = chart_map(fan, j)
                ch = expand_in_chart(cnf.F, M, j)
                nxt = fan.cone(j)[1]
                d_new = F.P.p * cnf.d + ch.d_left
                dp_new = nxt.p * cnf.d + ch.d_right
                for c in _chart_sites(ch, d_new, dp_new, f"{site.label} / Q={F.P}", site.depth + 1):
                    assert c.mu <= site.mu, "multiplicity grew under a toric modification"
                    children.append(c)
    return eps, lambdas, children, (lp, l0, lm)


@dataclass
class LedgerEntry:
    site: str
    lambdas: tuple  # ((covector, lambda), ...)
    epsilon_sigma: int
    Lambda: int
    heights: tuple = None


@dataclass
class Ledger:
    sigma_count: int
    coarse: BoundReport
    entries: list
    pending: list  # labels of sites left in the fallback

    @property
    def Lambda(self):
        return self.entries[-1].Lambda

    @property
    def final_bound(self):
        return self.sigma_count + self.Lambda

    def is_weakly_decreasing(self):
        L = [e.Lambda for e in self.entries]
        return all(a >= b for a, b in zip(L, L[1:]))


def refine_bound(f, max_depth=MAX_DEPTH):
    """Ledger of successive toric modifications at rational multiple roots."""
    _check(f)
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    max_depth = min(max_depth, MAX_DEPTH)
    coarse = theorem5_bound(f)
    Lam = coarse.epsilon + coarse.R_zero + coarse.mu_sum
    g_lams = tuple([(P, m) for P, m in coarse.mu_faces] + [(F.P, _r0_profile(F)) for F in bad_faces(f)])
    entries = [LedgerEntry("initial", g_lams, coarse.epsilon, Lam)]
    queue = _global_sites(f) if max_depth > 0 else []
    pending = []
    while queue:
        site = queue.pop(0)
        if site.depth >= max_depth or not isinstance(site.s, Fraction):
            pending.append(site.label)
            continue
        eps, lams, children, hts = _refine_site(site)
        Lam = Lam - (site.mu - 1) + eps + sum(v for _, v in lams)
        entries.append(LedgerEntry(site.label, tuple(lams), eps, Lam, hts))
        queue.extend(children)
    return Ledger(coarse.sigma_count, coarse, entries, pending)
