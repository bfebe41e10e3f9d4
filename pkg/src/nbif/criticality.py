"""Exact critical values of a bivariate polynomial.

The critical system f_x = f_y = 0 is split into

* pieces on the coordinate axes (coming from monomial factors of f_x, f_y),
* a one-dimensional part V(G), G = gcd of the remaining factors,
* a zero-dimensional part A = B = 0 with A, B coprime.

The zero-dimensional part is solved after a shear x -> x + k y that puts the
system in generic position: every root alpha of the resultant in y lifts to a
single y = beta(alpha), read off rationally from subresultant coefficients.
Critical values are then images C(alpha) of real algebraic numbers.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb

from .bivar import (
    BiPoly,
    X,
    Y,
    _int_y_rows,
    bipoly_divexact,
    bipoly_gcd,
    partial,
    resultant_elim,
    shear,
    squarefree_bipoly,
)
from .errors import ConstantPolynomial
from .exactmath import kernels
from .exactmath.algebraic import RealAlgebraicNumber, alg_images, dedupe, images_mod, sort_values
from .exactmath.quotient import QuotientRing
from .exactmath.roots import isolate_real_roots
from .exactmath.upoly import UniPoly, interpolate, poly_gcd, squarefree_part

MAX_SHEAR_TRIES = 40


class _NotGeneric(Exception):
    pass


def _shear_order():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _top_form_at(p, k):
    """Leading y-coefficient of p(x + k y, y): top homogeneous part at (k, 1)."""
    d = p.total_degree()
    return sum((c * Fraction(k) ** m for (m, n), c in p.items() if m + n == d), Fraction(0))


# ---------------------------------------------------------------------------
# subresultants by evaluation / interpolation


def _subres_matrix_cols(a, b, j):
    """Rows of the j-th subresultant matrix of a (deg p) and b (deg q), p >= q."""
    p, q = len(a) - 1, len(b) - 1
    ncols = p + q - j
    rows = []
    for s in range(q - j - 1, -1, -1):
        row = [0] * ncols
        for k, c in enumerate(a):
            row[ncols - 1 - (s + k)] = c
        rows.append(row)
    for s in range(p - j - 1, -1, -1):
        row = [0] * ncols
        for k, c in enumerate(b):
            row[ncols - 1 - (s + k)] = c
        rows.append(row)
    return rows


def _subres_coeff_at(a, b, j, i):
    """Coefficient of y^i in the j-th subresultant, numerically."""
    p, q = len(a) - 1, len(b) - 1
    rows = _subres_matrix_cols(a, b, j)
    nsq = p + q - 2 * j
    col = (p + q - j - 1) - i
    keep = list(range(nsq - 1)) + [col]
    return kernels.bareiss_det([[r[c] for c in keep] for r in rows])


class _SubresSystem:
    """Subresultant coefficients of two integer polys in y with x-polynomial coefficients."""

    def __init__(self, A, B):
        Ar, _ = _int_y_rows(A, Y)
        Br, _ = _int_y_rows(B, Y)
        if len(Ar) < len(Br):
            Ar, Br = Br, Ar
        self.Ar, self.Br = Ar, Br
        self.p, self.q = len(Ar) - 1, len(Br) - 1
        self.wA = max(len(r) for r in Ar) - 1
        self.wB = max(len(r) for r in Br) - 1
        self._pts = {}
        self._cache = {}

    def _at(self, w):
        v = self._pts.get(w)
        if v is None:
            v = (
                [kernels.eval_int(r, w) for r in self.Ar],
                [kernels.eval_int(r, w) for r in self.Br],
            )
            self._pts[w] = v
        return v

    def coeff(self, j, i):
        key = (j, i)
        if key in self._cache:
            return self._cache[key]
        bound = (self.q - j) * max(self.wA, 0) + (self.p - j) * max(self.wB, 0)
        if j == self.q == self.p:
            bound = max(self.wB, 0)
        pts = list(range(-(bound // 2), bound - bound // 2 + 1))
        vals = []
        for w in pts:
            a, b = self._at(w)
            if j == 0 and i == 0 and self.q == 0:
                vals.append(b[0] ** self.p)
            elif j == self.q == self.p:
                # the determinant formula is empty here; S_q is B itself
                vals.append(b[i])
            else:
                vals.append(_subres_coeff_at(a, b, j, i))
        poly = interpolate([Fraction(w) for w in pts], vals)
        self._cache[key] = poly
        return poly


# ---------------------------------------------------------------------------
# zero-dimensional systems


def _values_zero_dim(A, B, f):
    """Values of f at the real common zeros of coprime A, B.

    A, B, f are already sheared so that lc_y(A), lc_y(B) are nonzero
    constants.  Raises _NotGeneric if some fibre of the projection to x
    carries more than one solution.
    """
    if A.is_constant() or B.is_constant():
        return []
    sys = _SubresSystem(A, B)
    res = sys.coeff(0, 0)
    if res.is_zero():
        raise _NotGeneric("resultant vanishes identically")
    if res.degree <= 0:
        return []
    r = UniPoly.from_ints(res.primitive())
    Gm = squarefree_part(r)
    fy = f.y_coeffs()
    values = []
    m = 1
    while Gm.degree > 0:
        if m > sys.q:
            raise _NotGeneric("stratum beyond the smaller degree")
        psc = sys.coeff(m, m)
        Gnext = poly_gcd(Gm, psc) if not psc.is_zero() else Gm
        rm = Gm // Gnext
        if rm.degree > 0:
            roots = isolate_real_roots(rm)
            Q = QuotientRing(rm)
            s = Q.element(psc)
            t = Q.element(sys.coeff(m, m - 1))
            # generic position: S_m(alpha, y) must be a perfect m-th power
            ms = Q.scale(s, m)
            for jj in range(m - 1):
                Sj = Q.element(sys.coeff(m, jj))
                lhs = Q.mul(Sj, Q.pow(ms, m - jj))
                rhs = Q.scale(Q.mul(s, Q.pow(t, m - jj)), comb(m, jj))
                if lhs != rhs:
                    raise _NotGeneric("fibre with several solutions")
            if roots:
                beta = Q.mul(Q.neg(t), Q.inv(ms))
                C = ([], 1)
                for cj in reversed(fy):
                    C = Q.add(Q.mul(C, beta), Q.element(cj))
                values.extend(images_mod(Q, C, roots))
        Gm = Gnext
        m += 1
    return values


# ---------------------------------------------------------------------------
# one-dimensional components


def _x_content(G):
    rows = G.y_coeffs()
    g = UniPoly()
    for r in rows:
        if not r.is_zero():
            g = r if g.is_zero() else poly_gcd(g, r)
    return g.monic() if not g.is_zero() else g


def _sample_points(D):
    """Rationals meeting every interval of the real line cut out by roots of D."""
    if D.degree <= 0:
        return [Fraction(0)]
    roots = isolate_real_roots(D)
    if not roots:
        return [Fraction(0)]
    pts = [roots[0].interval[0] - 1]
    for a, b in zip(roots, roots[1:]):
        hi = a.interval[1]
        lo = b.interval[0]
        pts.append((hi + lo) / 2 if hi < lo else hi)
    pts.append(roots[-1].interval[1] + 1)
    return pts


def _curve_values(G, f, Gy_solver):
    """Values of f on the real points of V(G); G square-free, sheared.

    Returns (values, has_curve) where has_curve says V(G) has a real arc.
    """
    values = []
    has_curve = False
    c = _x_content(G)
    if c.degree > 0:
        f0 = f.eval_y(0)
        xs0 = isolate_real_roots(c)
        has_curve = bool(xs0)
        values.extend(alg_images(f0, xs0))
        G = bipoly_divexact(G, BiPoly.from_y_coeffs([c]))
    if G.degree(Y) <= 0:
        return values, has_curve
    Gy = partial(G, Y)
    values.extend(Gy_solver(G, Gy))
    D = resultant_elim(G, Gy, Y) if Gy.degree(Y) > 0 else UniPoly([1])
    lc = G.y_coeffs()[-1]
    D = D * lc
    for xs in _sample_points(D):
        line = _restrict_x(G, xs)
        if line.degree <= 0:
            continue
        fl = _restrict_x(f, xs)
        betas = isolate_real_roots(line)
        has_curve |= bool(betas)
        values.extend(alg_images(fl, betas))
    return values, has_curve


def _restrict_x(f, x0):
    """UniPoly in y of f(x0, y)."""
    x0 = Fraction(x0)
    co = {}
    for (m, n), c in f.items():
        co[n] = co.get(n, 0) + c * x0**m
    if not co:
        return UniPoly()
    return UniPoly([co.get(i, 0) for i in range(max(co) + 1)])


# ---------------------------------------------------------------------------
# axis pieces


def _axis_values(R, f, axis):
    """Values of f at points of {axis = 0} where R vanishes.

    Returns (values, whole_line) with whole_line True if R vanishes on the
    entire axis line.
    """
    if axis == X:
        line = _restrict_x(R, 0)
        fl = _restrict_x(f, 0)
    else:
        line = R.eval_y(0)
        fl = f.eval_y(0)
    if line.is_zero():
        # the whole line is critical; f is constant there
        return [RealAlgebraicNumber.from_rational(fl.coeff(0))], True
    return alg_images(fl, isolate_real_roots(line)), False


# ---------------------------------------------------------------------------


def _strip_axes(P):
    a = P.min_degree(X)
    b = P.min_degree(Y)
    return a, b, P.shift_exponents(-a, -b)


@lru_cache(maxsize=256)
def _analyze_cached(key):
    f = BiPoly(dict(key))
    return _analyze(f)


def _analyze(f):
    fx = partial(f, X)
    fy = partial(f, Y)
    values = []
    curve = False
    if fx.is_zero() or fy.is_zero():
        # f depends on one variable only: critical lines
        g = fy if fx.is_zero() else fx
        var_line = _restrict_x(g, 0) if fx.is_zero() else g.eval_y(0)
        fl = _restrict_x(f, 0) if fx.is_zero() else f.eval_y(0)
        ts = isolate_real_roots(var_line) if var_line.degree > 0 else []
        curve = bool(ts)
        values.extend(alg_images(fl, ts))
        return _finish(values), not curve

    a1, b1, P = _strip_axes(fx)
    a2, b2, Q = _strip_axes(fy)
    if a1:
        v, w = _axis_values(fy, f, X)
        values += v
        curve |= w
    if b1:
        v, w = _axis_values(fy, f, Y)
        values += v
        curve |= w
    if a2:
        v, w = _axis_values(fx, f, X)
        values += v
        curve |= w
    if b2:
        v, w = _axis_values(fx, f, Y)
        values += v
        curve |= w

    G = bipoly_gcd(P, Q)
    if not G.is_constant():
        A = bipoly_divexact(P, G)
        B = bipoly_divexact(Q, G)
        Gs = squarefree_bipoly(G)
    else:
        A, B, Gs = P, Q, None

    last = None
    for tries, k in enumerate(_shear_order()):
        if tries > MAX_SHEAR_TRIES:
            raise RuntimeError("no generic shear found") from last
        polys = [A, B] + ([Gs] if Gs is not None else [])
        if any(not p.is_constant() and _top_form_at(p, k) == 0 for p in polys):
            continue
        Ak, Bk, fk = shear(A, k), shear(B, k), shear(f, k)
        try:
            vals = list(_values_zero_dim(Ak, Bk, fk))
            if Gs is not None:
                Gk = shear(Gs, k)

                def solver(G1, G1y, fk=fk):
                    # G1y may be constant (G1 linear in y): no such points
                    if G1y.is_constant():
                        return []
                    return _values_zero_dim(G1, G1y, fk)

                cv, has = _curve_values(Gk, fk, solver)
                vals += cv
                curve |= has
        except _NotGeneric as e:
            last = e
            continue
        values += vals
        break
    return _finish(values), not curve


def _finish(values):
    return tuple(sort_values(dedupe(values)))


def _key(f):
    return tuple(sorted(f.items()))


def _check(f):
    if not isinstance(f, BiPoly):
        raise TypeError("expected a BiPoly")
    if f.is_constant():
        raise ConstantPolynomial("critical values of a constant polynomial")


def critical_values(f):
    """Sorted list of the distinct real critical values of f (Sigma_f)."""
    _check(f)
    return list(_analyze_cached(_key(f))[0])


def has_isolated_singularities(f):
    """True iff the real critical locus {f_x = f_y = 0} is finite."""
    _check(f)
    return _analyze_cached(_key(f))[1]
