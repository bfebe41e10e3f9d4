"""Newton polygons, faces at infinity and their univariate profiles."""
from dataclasses import dataclass, field
from math import atan2, gcd, pi

from .bivar import BiPoly
from .errors import InvalidCovector, NotBadFace, ZeroPolynomial
from .exactmath.upoly import UniPoly

PLUS, ZERO, MINUS = "plus", "zero", "minus"


@dataclass(frozen=True, order=True)
class PrimitiveCovector:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0) or gcd(self.p, self.q) != 1:
            raise InvalidCovector(f"({self.p}, {self.q}) is not a primitive covector")

    def __iter__(self):
        return iter((self.p, self.q))

    def __getitem__(self, i):
        return (self.p, self.q)[i]

    def level(self, m, n):
        return self.p * m + self.q * n

    def at_infinity(self):
        return self.p < 0 or self.q < 0

    def angle(self):
        """Polar angle in [0, 2*pi); used only for display."""
        a = atan2(self.q, self.p)
        return a + 2 * pi if a < 0 else a

    def __str__(self):
        return f"({self.p},{self.q})"


def covector(P):
    if isinstance(P, PrimitiveCovector):
        return P
    return PrimitiveCovector(int(P[0]), int(P[1]))


def ccw_key(v):
    """Exact sort key for direction vectors, counter-clockwise from (1, 0)."""
    p, q = v
    half = 0 if (q > 0 or (q == 0 and p > 0)) else 1
    return half, _CrossKey(p, q)


class _CrossKey:
    __slots__ = ("p", "q")

    def __init__(self, p, q):
        self.p, self.q = p, q

    def __lt__(self, other):
        # within one half-plane: a before b iff cross(a, b) > 0
        return self.p * other.q - self.q * other.p > 0

    def __eq__(self, other):
        return self.p * other.q - self.q * other.p == 0 and self.p * other.p + self.q * other.q > 0


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Extreme points in counter-clockwise order (Andrew's monotone chain).

    Collinear boundary points are dropped; one or two points come back as is.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper = []
    for pt in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 or (len(hull) >= 3 and all(_cross(hull[0], hull[1], h) == 0 for h in hull[2:])):
        return [pts[0], pts[-1]]
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    support: frozenset
    vertices: tuple

    @property
    def dimension(self):
        return min(len(self.vertices) - 1, 2)

    def edges(self):
        """Edges as (start, end) pairs in counter-clockwise order."""
        v = self.vertices
        if len(v) < 2:
            return []
        if len(v) == 2:
            return [(v[0], v[1]), (v[1], v[0])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def newton_polygon(f):
    if f.is_zero():
        raise ZeroPolynomial("Newton polygon of zero")
    sup = frozenset(f.support)
    return NewtonPolygon(sup, tuple(convex_hull(sup)))


@dataclass(frozen=True)
class Face:
    P: PrimitiveCovector
    d: int
    cls: str
    base: tuple
    dir: tuple
    phi: UniPoly
    ell: int
    points: tuple = field(default=(), compare=False)

    @property
    def endpoints(self):
        b, (dx, dy) = self.base, self.dir
        return b, (b[0] + self.ell * dx, b[1] + self.ell * dy)

    def face_function(self):
        t = {}
        for k, c in enumerate(self.phi.coeffs):
            if c:
                t[(self.base[0] + k * self.dir[0], self.base[1] + k * self.dir[1])] = c
        return BiPoly(t)

    def __str__(self):
        return f"face P={self.P} d={self.d} [{self.cls}] phi={self.phi}"


def _classify(d):
    return PLUS if d > 0 else (ZERO if d == 0 else MINUS)


def level(f, P):
    """d(P; f): minimum of pX + qY over the support."""
    P = covector(P)
    return min(P.p * m + P.q * n for m, n in f.support)


def face_function(f, P):
    """Sum of the terms of f on the face Delta(P; f)."""
    P = covector(P)
    d = level(f, P)
    return BiPoly({k: c for k, c in f.items() if P.p * k[0] + P.q * k[1] == d})


def face_for(f, P):
    """The one-dimensional face Delta(P; f) as a Face, or None if it is a vertex."""
    P = covector(P)
    d = level(f, P)
    pts = sorted(k for k in f.support if P.p * k[0] + P.q * k[1] == d)
    if len(pts) < 2:
        return None
    a, b = pts[0], pts[-1]
    ex, ey = b[0] - a[0], b[1] - a[1]
    ell = gcd(ex, ey)
    step = (ex // ell, ey // ell)
    coeffs = [f.coeff(a[0] + k * step[0], a[1] + k * step[1]) for k in range(ell + 1)]
    return Face(P, d, _classify(d), a, step, UniPoly(coeffs), ell, tuple(pts))


def edge_covectors(poly):
    """Inner primitive normals of all edges (both sides for a segment)."""
    out = []
    for a, b in poly.edges():
        ex, ey = b[0] - a[0], b[1] - a[1]
        g = gcd(ex, ey)
        out.append(PrimitiveCovector(-ey // g, ex // g))
    return out


def all_faces(f):
    """Every one-dimensional face with its inner covector, counter-clockwise."""
    poly = newton_polygon(f)
    covs = sorted(edge_covectors(poly), key=lambda P: ccw_key((P.p, P.q)))
    return [face_for(f, P) for P in covs]


def infinity_faces(f):
    """Faces with p < 0 or q < 0, counter-clockwise from (1, 0)."""
    if f.is_zero():
        raise ZeroPolynomial("faces of zero")
    return [F for F in all_faces(f) if F.P.at_infinity()]


def faces_of_class(f, cls):
    return [F for F in infinity_faces(f) if F.cls == cls]


def bad_face_b(face, P=None):
    """b_P with f_P(x, y) = b_P(x^|q| y^|p|) on a bad face.

    Accepts a Face, or a polynomial together with a covector.
    """
    if isinstance(face, BiPoly):
        if P is None:
            raise TypeError("covector needed when passing a polynomial")
        f = face
        face = face_for(f, covector(P)) if not f.is_zero() else None
        if face is None:
            raise NotBadFace(f"Delta({covector(P)}) is not a one-dimensional face")
    if face.cls != ZERO or not face.P.at_infinity():
        raise NotBadFace(f"{face.P} is not a bad face (d = {face.d})")
    p, q = face.P.p, face.P.q
    assert p * q <= 0, "a bad face covector has entries of opposite sign (or a zero entry)"
    step = (abs(q), abs(p))
    if face.dir != step:
        raise NotBadFace("face direction is not the bad-face step")  # cannot happen
    k0 = face.base[0] // step[0] if step[0] else face.base[1] // step[1]
    return face.phi.mul_t(k0)
