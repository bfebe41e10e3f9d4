"""Bivariate (Laurent) polynomials over Q with a sparse exponent map."""
from fractions import Fraction
from math import comb, lcm

from .errors import DegenerateInput, ZeroPolynomial
from .exactmath import kernels
from .exactmath.upoly import UniPoly, interpolate, ip_gcd, ip_primitive

X, Y = "x", "y"


class BiPoly:
    """f = sum a_{m,n} x^m y^n; exponents may be negative (Laurent role)."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (m, n), c in items:
                c = Fraction(c)
                if c:
                    key = (int(m), int(n))
                    v = t.get(key, 0) + c
                    if v:
                        t[key] = v
                    else:
                        t.pop(key, None)
        self._t = t

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, m, n, c=1):
        return cls({(m, n): c})

    # -- structure -------------------------------------------------------------------------
    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return self._t.items()

    @property
    def support(self):
        return frozenset(self._t)

    def coeff(self, m, n):
        return self._t.get((m, n), Fraction(0))

    def is_zero(self):
        return not self._t

    def is_polynomial(self):
        return all(m >= 0 and n >= 0 for m, n in self._t)

    def is_constant(self):
        return all(k == (0, 0) for k in self._t)

    def constant_term(self):
        return self._t.get((0, 0), Fraction(0))

    def degree(self, var):
        i = 0 if var == X else 1
        if not self._t:
            return -1
        return max(k[i] for k in self._t)

    def min_degree(self, var):
        i = 0 if var == X else 1
        return min(k[i] for k in self._t)

    def total_degree(self):
        return max((m + n for m, n in self._t), default=-1)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == BiPoly.const(other)._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    # -- arithmetic ------------------------------------------------------------------------
    def _coerce(self, o):
        if isinstance(o, BiPoly):
            return o
        if isinstance(o, (int, Fraction)):
            return BiPoly.const(o)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for k, c in o._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return BiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return BiPoly()
            return BiPoly._raw({k: v * c for k, v in self._t.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        t = {}
        for (m1, n1), c1 in self._t.items():
            for (m2, n2), c2 in other._t.items():
                k = (m1 + m2, n1 + n2)
                t[k] = t.get(k, 0) + c1 * c2
        return BiPoly._raw({k: v for k, v in t.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        r = BiPoly.const(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def shift_exponents(self, dm, dn):
        """Multiply by the monomial x^dm y^dn."""
        return BiPoly._raw({(m + dm, n + dn): c for (m, n), c in self._t.items()})

    def __call__(self, x, y):
        x = Fraction(x) if isinstance(x, int) else x
        y = Fraction(y) if isinstance(y, int) else y
        acc = 0
        for (m, n), c in self._t.items():
            acc += c * x**m * y**n
        return acc

    def eval_y(self, y0):
        """UniPoly in x of f(x, y0) (polynomial role in x)."""
        y0 = Fraction(y0)
        coeffs = {}
        for (m, n), c in self._t.items():
            coeffs[m] = coeffs.get(m, 0) + c * y0**n
        if not coeffs:
            return UniPoly()
        return UniPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])

    def eval_x(self, x0):
        """UniPoly in y of f(x0, y)."""
        return self.swap().eval_y(x0)

    def swap(self):
        """f(y, x)."""
        return BiPoly._raw({(n, m): c for (m, n), c in self._t.items()})

    # -- views -----------------------------------------------------------------------------
    def y_coeffs(self):
        """[c_0(x), c_1(x), ...] with f = sum c_j(x) y^j (polynomial role)."""
        if not self._t:
            return []
        dy = self.degree(Y)
        rows = [dict() for _ in range(dy + 1)]
        for (m, n), c in self._t.items():
            rows[n][m] = c
        out = []
        for r in rows:
            if r:
                out.append(UniPoly([r.get(i, 0) for i in range(max(r) + 1)]))
            else:
                out.append(UniPoly())
        return out

    @classmethod
    def from_y_coeffs(cls, cs):
        t = {}
        for n, p in enumerate(cs):
            for m, c in enumerate(p.coeffs):
                if c:
                    t[(m, n)] = c
        return cls._raw(t)

    def denominator_lcm(self):
        d = 1
        for c in self._t.values():
            d = lcm(d, c.denominator)
        return d

    # -- display -----------------------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self._t.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0], -kv[0][1]))

    def to_str(self, vars=("x", "y")):
        if not self._t:
            return "0"
        out = ""
        for idx, ((m, n), c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = []
            for v, e in ((vars[0], m), (vars[1], n)):
                if e == 1:
                    mono.append(v)
                elif e != 0:
                    mono.append(f"{v}^{e}" if e > 0 else f"{v}^({e})")
            if not mono:
                body = str(a)
            elif a == 1:
                body = "*".join(mono)
            else:
                body = str(a) + "*" + "*".join(mono)
            if idx == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BiPoly({self.to_str()!r})"


# ---------------------------------------------------------------------------
# operations


def partial(f, var):
    """Formal partial derivative with respect to ``var`` ('x' or 'y')."""
    t = {}
    for (m, n), c in f.items():
        if var == X:
            if m:
                t[(m - 1, n)] = c * m
        else:
            if n:
                t[(m, n - 1)] = c * n
    return BiPoly._raw(t)


class MonomialMap:
    """x = u^a v^b, y = u^c v^d for the matrix [[a, b], [c, d]].

    Columns are the two covectors (a, c) and (b, d) of a cone; an exponent
    (m, n) becomes the row vector (m, n) times the matrix.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, matrix):
        (a, b), (c, d) = matrix
        self.a, self.b, self.c, self.d = int(a), int(b), int(c), int(d)

    @classmethod
    def from_columns(cls, left, right):
        return cls(((left[0], right[0]), (left[1], right[1])))

    @property
    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    @property
    def columns(self):
        return (self.a, self.c), (self.b, self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        det = self.det()
        if det not in (1, -1):
            raise ValueError("only unimodular maps have integral inverses")
        return MonomialMap(((self.d * det, -self.b * det), (-self.c * det, self.a * det)))

    def apply_exponent(self, m, n):
        return (m * self.a + n * self.c, m * self.b + n * self.d)

    def pull_back_point(self, u, v):
        """(x, y) for the chart point (u, v)."""
        return (u**self.a * v**self.b, u**self.c * v**self.d)

    def __eq__(self, other):
        return isinstance(other, MonomialMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"MonomialMap({self.matrix})"


def monomial_substitute(f, M):
    t = {}
    for (m, n), c in f.items():
        k = M.apply_exponent(m, n)
        v = t.get(k, 0) + c
        if v:
            t[k] = v
        else:
            t.pop(k, None)
    return BiPoly._raw(t)


def translate_y(F, s):
    """F(x, y + s)."""
    s = Fraction(s)
    if s == 0:
        return F
    t = {}
    for (m, n), c in F.items():
        if n < 0:
            raise ValueError("translate_y needs a polynomial in y")
        sp = Fraction(1)
        for k in range(n, -1, -1):
            # binom(n, k) y^k s^(n-k)
            key = (m, k)
            t[key] = t.get(key, 0) + c * comb(n, k) * sp
            sp *= s
    return BiPoly({k: v for k, v in t.items() if v})


def shear(f, k):
    """f(x + k y, y)."""
    if k == 0:
        return f
    t = {}
    for (m, n), c in f.items():
        kp = Fraction(1)
        for j in range(m + 1):
            # binom(m, j) x^(m-j) (k y)^j
            key = (m - j, n + j)
            t[key] = t.get(key, 0) + c * comb(m, j) * kp
            kp *= k
    return BiPoly({kk: v for kk, v in t.items() if v})


def factor_axes(f):
    """(alpha, beta, F) with f = x^alpha y^beta F, x and y not dividing F."""
    if f.is_zero():
        raise ZeroPolynomial("factor_axes of zero")
    a = f.min_degree(X)
    b = f.min_degree(Y)
    return a, b, f.shift_exponents(-a, -b)


# ---------------------------------------------------------------------------
# resultants


def _int_y_rows(f, var):
    """f scaled to integer coefficients as rows over ``var`` of int lists in the other variable."""
    g = f if var == Y else f.swap()
    D = g.denominator_lcm()
    dv = g.degree(Y)
    rows = [[] for _ in range(dv + 1)]
    for (m, n), c in g.items():
        r = rows[n]
        if len(r) <= m:
            r.extend([0] * (m + 1 - len(r)))
        r[m] = int(c * D)
    return rows, D


def sylvester(a, b):
    """Sylvester matrix of coefficient lists a, b (lowest degree first)."""
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    rows = []
    for i in range(db):
        row = [0] * n
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [0] * n
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def _eval_points(count):
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def resultant_elim(f, g, var):
    """Res_var(f, g) as a UniPoly in the other variable.

    Sylvester determinants are evaluated at integer points of the other
    variable (fraction-free Bareiss) and interpolated.
    """
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("resultant_elim needs polynomials")
    df, dg = f.degree(var), g.degree(var)
    if df <= 0 and dg <= 0:
        raise DegenerateInput("at least one polynomial needs positive degree in " + var)
    if df == 0 or dg == 0:
        # Res(c, g) = c^deg(g), with c free of var
        c, other = (f, dg) if df == 0 else (g, df)
        cu = c.eval_y(0) if var == Y else c.eval_x(0)
        sign = -1 if (df * dg) % 2 else 1
        return cu**other * sign
    A, Da = _int_y_rows(f, var)
    B, Db = _int_y_rows(g, var)
    da, db = len(A) - 1, len(B) - 1
    wa = max(len(r) for r in A) - 1
    wb = max(len(r) for r in B) - 1
    bound = da * max(wb, 0) + db * max(wa, 0)
    pts = _eval_points(bound + 1)
    vals = []
    for w in pts:
        a = [kernels.eval_int(r, w) for r in A]
        b = [kernels.eval_int(r, w) for r in B]
        vals.append(kernels.bareiss_det(sylvester(a, b)))
    res = interpolate([Fraction(p) for p in pts], vals)
    scale = Fraction(Da) ** db * Fraction(Db) ** da
    return res * (1 / scale)


# ---------------------------------------------------------------------------
# gcd in Q[x, y] (primitive PRS over Z[x][y])


def _zx_rows(f):
    """Rows over y of primitive-free integer x-polys (denominators cleared)."""
    rows, _ = _int_y_rows(f, Y)
    return [ip_strip_local(r) for r in rows]


def ip_strip_local(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _rows_content(rows):
    g = []
    for r in rows:
        if r:
            g = ip_gcd(g, r) if g else ip_primitive(r)
            if len(g) == 1:
                return [1]
    return g


def _rows_divexact(rows, d):
    from .exactmath.upoly import ip_divexact

    return [ip_divexact(r, d) if r else [] for r in rows]


def _rows_prem(a, b):
    """Pseudo-remainder in Z[x][y]."""
    a = [list(r) for r in a]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [kernels.ipoly_mul(r, lb) if r else [] for r in a]
        for i in range(db + 1):
            if b[i] and la:
                prod = kernels.ipoly_mul(la, b[i])
                r = a[shift + i]
                if len(r) < len(prod):
                    r = r + [0] * (len(prod) - len(r))
                a[shift + i] = ip_strip_local([r[j] - (prod[j] if j < len(prod) else 0) for j in range(len(r))])
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _rows_primitive(rows):
    rows = [ip_strip_local(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    if not rows:
        return rows
    c = _rows_content(rows)
    return _rows_normalize(_rows_divexact(rows, c) if c != [1] else rows)


def _rows_normalize(out):
    """Divide out the integer content; positive leading coefficient."""
    from math import gcd as igcd

    out = [ip_strip_local(r) for r in out]
    while out and not out[-1]:
        out.pop()
    if not out:
        return out
    g = 0
    for r in out:
        for v in r:
            g = igcd(g, v)
    if out[-1][-1] < 0:
        g = -g
    if g not in (0, 1):
        out = [[v // g for v in r] for r in out]
    return out


def _rows_to_bipoly(rows):
    t = {}
    for n, r in enumerate(rows):
        for m, c in enumerate(r):
            if c:
                t[(m, n)] = Fraction(c)
    return BiPoly._raw(t)


def bipoly_gcd(f, g):
    """gcd in Q[x, y], normalised primitive over Z with positive leading coefficient."""
    if f.is_zero():
        return _rows_to_bipoly(_rows_primitive(_zx_rows(g))) if not g.is_zero() else BiPoly()
    if g.is_zero():
        return _rows_to_bipoly(_rows_primitive(_zx_rows(f)))
    a = _zx_rows(f)
    b = _zx_rows(g)
    ca, cb = _rows_content(a), _rows_content(b)
    cont = ip_gcd(ca, cb)
    a = _rows_divexact(a, ca)
    b = _rows_divexact(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _rows_prem(a, b)
        if not r:
            break
        a, b = b, _rows_primitive(r)
    if len(b) <= 1:
        # y-free part of the gcd is just the content gcd
        core = [[1]]
    else:
        core = _rows_primitive(b)
    out = [kernels.ipoly_mul(r, cont) if r else [] for r in core]
    return _rows_to_bipoly(_rows_normalize(out))


def bipoly_divexact(f, g):
    """f / g in Q[x, y]; raises ArithmeticError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    F = f.y_coeffs()
    G = g.y_coeffs()
    dg = len(G) - 1
    if len(F) - 1 < dg:
        if f.is_zero():
            return BiPoly()
        raise ArithmeticError("inexact division")
    Q = [UniPoly() for _ in range(len(F) - dg)]
    R = list(F)
    lg = G[-1]
    for k in range(len(F) - 1 - dg, -1, -1):
        c, rem = divmod(R[k + dg], lg)
        if not rem.is_zero():
            raise ArithmeticError("inexact division")
        Q[k] = c
        if not c.is_zero():
            for i in range(dg + 1):
                R[k + i] = R[k + i] - c * G[i]
    if any(not r.is_zero() for r in R):
        raise ArithmeticError("inexact division")
    return BiPoly.from_y_coeffs(Q)


def squarefree_bipoly(f):
    """Square-free part over Q (divides out gcd with both partials)."""
    g = bipoly_gcd(f, partial(f, X))
    g = bipoly_gcd(g, partial(f, Y))
    if g.is_constant():
        return f
    return bipoly_divexact(f, g)
