"""Real algebraic numbers as (square-free integer polynomial, isolating interval).

Every decision (sign, equality, ordering) is made with exact rationals;
floating point appears only in ``approx`` output.
"""
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from math import lcm

from . import kernels

from .quotient import QuotientRing
from .roots import _count_half_open, isolate_intervals, sturm_sequence
from .upoly import UniPoly, ip_gcd, ip_primitive, ip_sqf_part, ip_taylor_at

# above this many bits in the leading coefficient we do not attempt to
# recognise a rational value after alg_image (display nicety only)
_RATIONAL_DETECT_BITS = 128


def _sign_at(p, q):
    v = kernels.eval_homog(p, q.numerator, q.denominator)
    return (v > 0) - (v < 0)


@total_ordering
class RealAlgebraicNumber:
    """A real root of ``minpoly`` singled out by an isolating interval.

    ``minpoly`` is a primitive, square-free integer coefficient list (lowest
    degree first, positive leading coefficient).  For a rational value the
    interval is the point (v, v) and the minpoly is linear.
    """

    __slots__ = ("_p", "_lo", "_hi")
    __hash__ = None  # equality is semantic; use dedupe() for sets

    def __init__(self, minpoly, lo, hi):
        p = minpoly.primitive() if isinstance(minpoly, UniPoly) else ip_primitive(minpoly)
        lo, hi = Fraction(lo), Fraction(hi)
        if len(p) < 2:
            raise ValueError("minpoly must have positive degree")
        if lo > hi:
            raise ValueError("empty interval")
        if lo == hi:
            if _sign_at(p, lo) != 0:
                raise ValueError("point interval is not a root of minpoly")
            self._set_rational(lo)
            return
        p = ip_sqf_part(p)
        if _sign_at(p, lo) == 0 or _sign_at(p, hi) == 0:
            raise ValueError("interval endpoint is a root of minpoly")
        n = _count_half_open(sturm_sequence(p), lo, hi)
        if n != 1:
            raise ValueError(f"interval contains {n} roots, expected exactly 1")
        self._p, self._lo, self._hi = p, lo, hi

    def _set_rational(self, v):
        self._p = [-v.numerator, v.denominator]
        self._lo = self._hi = v

    @classmethod
    def _trusted(cls, p, lo, hi):
        obj = cls.__new__(cls)
        obj._p, obj._lo, obj._hi = p, Fraction(lo), Fraction(hi)
        return obj

    @classmethod
    def from_rational(cls, v):
        v = Fraction(v)
        obj = cls.__new__(cls)
        obj._set_rational(v)
        return obj

    # -- accessors ------------------------------------------------------------------
    @property
    def minpoly(self):
        return UniPoly.from_ints(self._p)

    @property
    def minpoly_ints(self):
        return list(self._p)

    @property
    def interval(self):
        return (self._lo, self._hi)

    def is_rational(self):
        return self._lo == self._hi

    def as_fraction(self):
        if self._lo != self._hi:
            raise ValueError("not a rational number (or not recognised as one)")
        return self._lo

    # -- refinement -----------------------------------------------------------------
    def _bisect(self):
        """One bisection step; returns (p, lo, hi) with lo == hi on an exact hit."""
        p, lo, hi = self._p, self._lo, self._hi
        if lo == hi:
            return p, lo, hi
        mid = (lo + hi) / 2
        sm = _sign_at(p, mid)
        if sm == 0:
            return [-mid.numerator, mid.denominator], mid, mid
        if sm == _sign_at(p, lo):
            return p, mid, hi
        return p, lo, mid

    def _split_at(self, c):
        """Interval restricted to one side of c (or the point c)."""
        p, lo, hi = self._p, self._lo, self._hi
        if lo == hi or not (lo < c < hi):
            return self
        sc = _sign_at(p, c)
        if sc == 0:
            return RealAlgebraicNumber.from_rational(c)
        if sc == _sign_at(p, lo):
            return RealAlgebraicNumber._trusted(p, c, hi)
        return RealAlgebraicNumber._trusted(p, lo, c)

    def refine(self, width):
        """Equal number whose interval is no wider than ``width``."""
        width = Fraction(width)
        p, lo, hi = self._p, self._lo, self._hi
        cur = self
        while hi - lo > width:
            p, lo, hi = cur._bisect()
            cur = RealAlgebraicNumber._trusted(p, lo, hi)
        return cur

    def refined_once(self):
        p, lo, hi = self._bisect()
        return RealAlgebraicNumber._trusted(p, lo, hi)

    # -- sign, arithmetic by rationals -------------------------------------------------
    def sign(self):
        a = self._split_at(Fraction(0))
        if a._lo == a._hi:
            return (a._lo > 0) - (a._lo < 0)
        return 1 if a._lo >= 0 else -1

    def nonzero_interval(self):
        """Same number with an interval not straddling 0 (0 itself stays a point)."""
        return self._split_at(Fraction(0))

    def __neg__(self):
        p = [(-c if i % 2 else c) for i, c in enumerate(self._p)]
        return RealAlgebraicNumber._trusted(ip_primitive(p), -self._hi, -self._lo)

    def shift(self, q):
        """self + q for rational q."""
        q = Fraction(q)
        if self.is_rational():
            return RealAlgebraicNumber.from_rational(self._lo + q)
        p = UniPoly.from_ints(self._p).translate(-q).primitive()
        return RealAlgebraicNumber._trusted(p, self._lo + q, self._hi + q)

    def scale(self, lam):
        """lam * self for rational lam."""
        lam = Fraction(lam)
        if lam == 0:
            return RealAlgebraicNumber.from_rational(0)
        if self.is_rational():
            return RealAlgebraicNumber.from_rational(self._lo * lam)
        p = UniPoly.from_ints(self._p).scale_arg(1 / lam).primitive()
        a, b = self._lo * lam, self._hi * lam
        if a > b:
            a, b = b, a
        return RealAlgebraicNumber._trusted(p, a, b)

    def reciprocal(self):
        if self.is_rational():
            return RealAlgebraicNumber.from_rational(1 / self._lo)
        a = self.nonzero_interval()
        if a.is_rational():
            return RealAlgebraicNumber.from_rational(1 / a._lo)
        lo, hi = a._lo, a._hi
        if lo == 0 or hi == 0:
            # push the interval off zero
            while lo == 0 or hi == 0:
                p, lo, hi = a._bisect()
                a = RealAlgebraicNumber._trusted(p, lo, hi)
                if lo == hi:
                    return RealAlgebraicNumber.from_rational(1 / lo)
        p = ip_primitive(a._p[::-1])
        return RealAlgebraicNumber._trusted(p, 1 / hi, 1 / lo)

    # -- comparison --------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraicNumber.from_rational(other)
        if not isinstance(other, RealAlgebraicNumber):
            return NotImplemented
        return alg_eq(self, other)

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraicNumber.from_rational(other)
        if not isinstance(other, RealAlgebraicNumber):
            return NotImplemented
        return alg_cmp(self, other) < 0

    # -- display -----------------------------------------------------------------------
    def approx(self, digits=15):
        """Decimal string with ``digits`` significant digits (display only)."""
        if self.is_rational():
            v = self._lo
            if v.denominator == 1:
                return str(v.numerator)
            with localcontext() as ctx:
                ctx.prec = digits
                return str(Decimal(v.numerator) / Decimal(v.denominator))
        a = self.nonzero_interval()
        if a.is_rational():
            return a.approx(digits)
        tol = Fraction(1, 10 ** (digits + 2))
        while True:
            lo, hi = a._lo, a._hi
            mag = min(abs(lo), abs(hi))
            if (lo > 0 or hi < 0) and hi - lo <= mag * tol:
                break
            p, lo, hi = a._bisect()
            a = RealAlgebraicNumber._trusted(p, lo, hi)
            if lo == hi:
                return RealAlgebraicNumber.from_rational(lo).approx(digits)
        mid = (a._lo + a._hi) / 2
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(mid.numerator) / Decimal(mid.denominator))

    def __float__(self):
        return float(self.approx(20))

    def __repr__(self):
        if self.is_rational():
            return f"RealAlgebraicNumber({self._lo})"
        return (
            f"RealAlgebraicNumber(minpoly={self.minpoly.to_str('t')}, "
            f"interval=({self._lo}, {self._hi}), approx={self.approx(12)})"
        )

    def __str__(self):
        if self.is_rational():
            return str(self._lo)
        return f"root of {self.minpoly.to_str('t')} in ({self._lo}, {self._hi}) ~ {self.approx(12)}"


# ---------------------------------------------------------------------------


def _disjoint(a, b):
    return a._hi < b._lo or b._hi < a._lo or (
        (a._hi == b._lo or b._hi == a._lo) and not (a.is_rational() and b.is_rational())
    )


def alg_eq(a, b):
    """Exact equality of two real algebraic numbers."""
    if a.is_rational() and b.is_rational():
        return a._lo == b._lo
    if a.is_rational() or b.is_rational():
        q, x = (a, b) if a.is_rational() else (b, a)
        v = q._lo
        return x._lo < v < x._hi and _sign_at(x._p, v) == 0
    # cheap separation attempts before the gcd
    for _ in range(4):
        if _disjoint(a, b):
            return False
        a = a.refined_once()
        b = b.refined_once()
        if a.is_rational() or b.is_rational():
            return alg_eq(a, b)
    if _disjoint(a, b):
        return False
    g = ip_gcd(a._p, b._p)
    if len(g) < 2:
        return False
    lo = max(a._lo, b._lo)
    hi = min(a._hi, b._hi)
    if lo >= hi:
        return False
    return _count_half_open(sturm_sequence(g), lo, hi) > 0


def alg_cmp(a, b):
    """-1, 0 or 1 according to a < b, a == b, a > b."""
    if alg_eq(a, b):
        return 0
    while True:
        if a._hi < b._lo or (a._hi == b._lo and not (a.is_rational() and b.is_rational())):
            return -1
        if b._hi < a._lo or (b._hi == a._lo and not (a.is_rational() and b.is_rational())):
            return 1
        if a.is_rational() and b.is_rational():
            return (a._lo > b._lo) - (a._lo < b._lo)
        if not a.is_rational():
            a = a.refined_once()
        if not b.is_rational():
            b = b.refined_once()


def dedupe(values, tags=None):
    """Remove alg_eq duplicates, keeping first occurrences.

    With ``tags`` (parallel list of sets), duplicates merge their tags and
    the result is a list of (value, tagset).
    """
    out = []
    for i, v in enumerate(values):
        for j, (w, t) in enumerate(out):
            if alg_eq(v, w):
                if tags is not None:
                    t |= set(tags[i])
                break
        else:
            out.append((v, set(tags[i]) if tags is not None else None))
    if tags is None:
        return [v for v, _ in out]
    return out


def sort_values(values):
    from functools import cmp_to_key

    return sorted(values, key=cmp_to_key(alg_cmp))


# ---------------------------------------------------------------------------
# images b(alpha)


def _int_enclosure(bI, D, lo, hi):
    """Closed interval containing bI([lo, hi]) / D (Taylor form at the midpoint)."""
    mid = (lo + hi) / 2
    r = (hi - lo) / 2
    den = lcm(mid.denominator, r.denominator)
    num = mid.numerator * (den // mid.denominator)
    rad = r.numerator * (den // r.denominator)
    T = ip_taylor_at(bI, num, den)
    err = 0
    rp = 1
    for c in T[1:]:
        rp *= rad
        err += abs(c) * rp
    scale = D * den ** (len(bI) - 1)
    return Fraction(T[0] - err, scale), Fraction(T[0] + err, scale)


def _bisect_iv(R, iv):
    lo, hi = iv
    if lo == hi:
        return iv
    mid = (lo + hi) / 2
    sm = _sign_at(R, mid)
    if sm == 0:
        return mid, mid
    return (mid, hi) if sm == _sign_at(R, lo) else (lo, mid)


def _meets(iv, jlo, jhi):
    lo, hi = iv
    if lo == hi:
        return jlo <= lo <= jhi
    return lo < jhi and hi > jlo


def images_mod(Q, e, alphas):
    """Values e(alpha) for roots alpha of the modulus of the quotient ring Q.

    ``e`` is a ring element; one value polynomial is shared by all alphas.
    """
    b = Q.to_poly(e)
    if b.degree <= 0:
        v = RealAlgebraicNumber.from_rational(b.coeff(0))
        return [v for _ in alphas]
    out = []
    irr = [a for a in alphas if not a.is_rational()]
    if b.degree == 1:
        return [
            RealAlgebraicNumber.from_rational(b(a._lo)) if a.is_rational() else a.scale(b.coeff(1)).shift(b.coeff(0))
            for a in alphas
        ]
    if irr:
        R, ivs = isolate_intervals(Q.value_poly(e))
        bI = b.primitive()
        D = bI[-1] / b.lc  # b = bI / D
        D = Fraction(D)
        # keep D an integer by folding its denominator into bI
        bI = [c * D.denominator for c in bI]
        D = D.numerator
        if D < 0:
            bI, D = [-c for c in bI], -D
    for a in alphas:
        if a.is_rational():
            out.append(RealAlgebraicNumber.from_rational(b(a._lo)))
            continue
        while True:
            jlo, jhi = _int_enclosure(bI, D, a._lo, a._hi)
            if jlo == jhi:
                out.append(RealAlgebraicNumber.from_rational(jlo))
                break
            cands = [i for i, iv in enumerate(ivs) if _meets(iv, jlo, jhi)]
            if len(cands) == 1:
                lo, hi = ivs[cands[0]]
                if lo == hi:
                    out.append(RealAlgebraicNumber.from_rational(lo))
                else:
                    Rv = R
                    if R[0] == 0 and (lo > 0 or hi < 0):
                        Rv = R[1:]  # the value is not 0; drop the factor t
                    out.append(_maybe_rational(RealAlgebraicNumber._trusted(Rv, lo, hi)))
                break
            if not cands:
                raise ArithmeticError("image enclosure misses every root")  # pragma: no cover
            for i in cands:
                ivs[i] = _bisect_iv(R, ivs[i])
            p, lo, hi = a._bisect()
            a = RealAlgebraicNumber._trusted(p, lo, hi)
            if lo == hi:
                out.append(RealAlgebraicNumber.from_rational(b(lo)))
                break
    return out


def _maybe_rational(x):
    """Replace x by an exact rational when its minpoly has that rational as root."""
    p = x._p
    lead = abs(p[-1])
    if len(p) == 2:
        return RealAlgebraicNumber.from_rational(Fraction(-p[0], p[1]))
    if lead.bit_length() > _RATIONAL_DETECT_BITS:
        return x
    # any rational root u/v has v | lead; two such numbers differ by >= 1/lead^2
    target = Fraction(1, 2 * lead * lead)
    y = x
    while y._hi - y._lo > target:
        y = y.refined_once()
        if y.is_rational():
            return y
    cand = ((y._lo + y._hi) / 2).limit_denominator(lead)
    if y._lo < cand < y._hi and _sign_at(p, cand) == 0:
        return RealAlgebraicNumber.from_rational(cand)
    return x


def alg_image(b, alpha):
    """The real algebraic number b(alpha) for a rational polynomial b."""
    return alg_images(b, [alpha])[0]


def alg_images(b, alphas):
    """[b(alpha) for alpha in alphas], sharing work between equal minpolys."""
    if not isinstance(b, UniPoly):
        b = UniPoly(b)
    out = [None] * len(alphas)
    groups = {}
    for i, a in enumerate(alphas):
        if a.is_rational():
            out[i] = RealAlgebraicNumber.from_rational(b(a._lo))
        else:
            groups.setdefault(tuple(a._p), []).append(i)
    for m, idx in groups.items():
        Q = QuotientRing(list(m))
        vals = images_mod(Q, Q.element(b), [alphas[i] for i in idx])
        for i, v in zip(idx, vals):
            out[i] = v
    return out


def alg_image_rational(num, den, alpha):
    """num(alpha) / den(alpha) for rational polynomials with den(alpha) != 0."""
    if not isinstance(num, UniPoly):
        num = UniPoly(num)
    if not isinstance(den, UniPoly):
        den = UniPoly(den)
    if alpha.is_rational():
        return RealAlgebraicNumber.from_rational(num(alpha._lo) / den(alpha._lo))
    from .upoly import invmod

    m = alpha.minpoly
    # den may share a factor with the square-free minpoly; alpha is not a root
    # of that factor, so drop it first
    from .upoly import poly_gcd

    g = poly_gcd(m, den)
    if g.degree > 0:
        m2 = m // g
        a2 = RealAlgebraicNumber._trusted(m2.primitive(), alpha._lo, alpha._hi)
        return alg_image_rational(num, den, a2)
    b = (num * invmod(den, m)) % m
    return alg_image(b, alpha)
