"""Admissible (unimodular) fans and chart expansions of f in each cone."""
from dataclasses import dataclass
from functools import cmp_to_key

from .bivar import BiPoly, MonomialMap, monomial_substitute
from .errors import InvalidCovector, NonPositiveCovector
from .exactmath.upoly import UniPoly
from .newton import PrimitiveCovector, ccw_key, covector

E1 = PrimitiveCovector(1, 0)
E2 = PrimitiveCovector(0, 1)


def det(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _egcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _between(a, b):
    """A primitive w with det(a, w) = 1 and 1 <= det(w, b) < max(|det(a, b)|, 2).

    For det(a, b) > 1 the ray lies strictly inside the cone; for det(a, b) <= 0
    (an angle of at least pi) it splits the angle into two smaller pieces.
    """
    g, s, t = _egcd(a[0], a[1])
    assert g == 1
    w0 = (-t, s)  # det(a, w0) = s*a0 + t*a1 = 1
    c = det(w0, b)
    n = det(a, b)
    if n == 0:
        k = 0
    elif n > 0:
        # c + k n in [1, n - 1]
        k = -((c - 1) // n)
    else:
        m = -n
        # c + k n = c - k m in [1, m]
        k = (c - 1) // m
    return (w0[0] + k * a[0], w0[1] + k * a[1])


def _fill(a, b, out):
    """Append the rays strictly between a and b (counter-clockwise) to out."""
    if det(a, b) == 1:
        return
    w = _between(a, b)
    _fill(a, w, out)
    out.append(w)
    _fill(w, b, out)


def _subdivide(chain, closed):
    pairs = list(zip(chain, chain[1:]))
    if closed:
        pairs.append((chain[-1], chain[0]))
    result = []
    for a, b in pairs:
        result.append(a)
        _fill(a, b, result)
    if not closed:
        result.append(chain[-1])
    return result


def _ccw_sorted(vs):
    return sorted(vs, key=lambda v: ccw_key((v[0], v[1])))


@dataclass(frozen=True)
class AdmissibleFan:
    """Counter-clockwise rays; ``closed`` fans wrap around (global charts),
    open ones run from (1, 0) to (0, 1) inside the first quadrant (local charts)."""

    rays: tuple
    closed: bool = True

    def __len__(self):
        return len(self.rays)

    def cone(self, i):
        """(R_i, R_{i+1}) with 1-based i; the wrap cone (R_m, R_1) for closed fans."""
        m = len(self.rays)
        if not 1 <= i <= (m if self.closed else m - 1):
            raise IndexError(f"no cone with index {i}")
        return self.rays[i - 1], self.rays[i % m]

    def cone_indices(self):
        m = len(self.rays)
        return list(range(1, (m if self.closed else m - 1) + 1))

    def index_of(self, P):
        P = covector(P)
        return self.rays.index(P) + 1

    def determinants(self):
        return [det(*self.cone(i)) for i in self.cone_indices()]

    def check(self):
        r = self.rays
        assert all(isinstance(v, PrimitiveCovector) for v in r)
        assert all(d == 1 for d in self.determinants()), self.determinants()
        if self.closed:
            assert r[0] == E1 and r[1] == E2
            assert all(v.at_infinity() for v in r[2:])
        else:
            assert r[0] == E1 and r[-1] == E2
            assert all(v.p > 0 and v.q > 0 for v in r[1:-1])
        return True

    def __str__(self):
        return " ".join(str(v) for v in self.rays)


def complete_fan(required=()):
    """Closed unimodular fan starting (1, 0), (0, 1) that contains ``required``."""
    req = [covector(P) for P in required]
    for P in req:
        if not P.at_infinity():
            raise InvalidCovector(f"{P} has no negative entry")
    if len(set(req)) != len(req):
        raise InvalidCovector("required covectors must be distinct")
    base = [(1, 0), (0, 1)] + [(P.p, P.q) for P in req]
    chain = _ccw_sorted(base)
    rays = _subdivide(chain, closed=True)
    fan = AdmissibleFan(tuple(PrimitiveCovector(*v) for v in rays), True)
    return fan


def complete_local_fan(required=()):
    """Open unimodular chain (1, 0) ... (0, 1) through the given positive covectors."""
    req = [covector(P) for P in required]
    for P in req:
        if not (P.p > 0 and P.q > 0):
            raise NonPositiveCovector(f"{P} is not a positive covector")
    inner = sorted(set((P.p, P.q) for P in req), key=cmp_to_key(lambda a, b: -det(a, b)))
    chain = [(1, 0)] + inner + [(0, 1)]
    rays = _subdivide(chain, closed=False)
    return AdmissibleFan(tuple(PrimitiveCovector(*v) for v in rays), False)


@dataclass(frozen=True)
class Chart:
    """f = u^d_left v^d_right (g(v) + u h(u, v)) in the chart of cone ``index``."""

    index: int
    map: MonomialMap
    d_left: int
    d_right: int
    g: UniPoly
    h: BiPoly

    def reconstruct(self):
        """The Laurent polynomial u^d_left v^d_right (g(v) + u h)."""
        gp = BiPoly({(0, k): c for k, c in enumerate(self.g.coeffs) if c})
        return (gp + self.h.shift_exponents(1, 0)).shift_exponents(self.d_left, self.d_right)


def chart_map(fan, i):
    a, b = fan.cone(i)
    return MonomialMap.from_columns((a.p, a.q), (b.p, b.q))


def expand_in_chart(f, M, index=0):
    F = monomial_substitute(f, M)
    dl = min(k[0] for k in F.support)
    dr = min(k[1] for k in F.support)
    gco = {}
    h = {}
    for (m, n), c in F.items():
        if m == dl:
            gco[n - dr] = c
        else:
            h[(m - dl - 1, n - dr)] = c
    g = UniPoly([gco.get(k, 0) for k in range(max(gco) + 1)]) if gco else UniPoly()
    return Chart(index, M, dl, dr, g, BiPoly(h))


def chart_expansion(f, fan, i):
    """Decomposition f(u, v) = u^d(R_i) v^d(R_{i+1}) (g_i(v) + u h_i(u, v))."""
    return expand_in_chart(f, chart_map(fan, i), i)
