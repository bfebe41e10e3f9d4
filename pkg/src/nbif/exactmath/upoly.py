"""Dense univariate polynomials with rational coefficients.

``UniPoly`` is the public immutable type.  The ``ip_*`` helpers work on plain
lists of Python ints (lowest degree first) and are what the root-finding
code runs on; ``UniPoly.primitive()`` converts between the two.
"""
from fractions import Fraction
from math import gcd, lcm

from ..errors import ZeroPolynomial
from . import kernels

# ---------------------------------------------------------------------------
# integer coefficient lists


def ip_strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def ip_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def ip_primitive(a):
    """Primitive part with positive leading coefficient."""
    a = ip_strip(a)
    if not a:
        return []
    g = ip_content(a)
    if a[-1] < 0:
        g = -g
    if g != 1:
        a = [c // g for c in a]
    return a


def ip_deriv(a):
    return [i * a[i] for i in range(1, len(a))]


def ip_neg_x(a):
    """Coefficients of a(-x)."""
    return [-c if i & 1 else c for i, c in enumerate(a)]


def ip_prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    da = len(a) - 1
    if da < db:
        return a
    e = da - db + 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[shift + i] -= la * b[i]
        a.pop()
        a = ip_strip(a)
        e -= 1
    if e > 0:
        f = lb**e
        a = [c * f for c in a]
    return a


def ip_divexact(a, b):
    """Exact quotient a / b over Z (b must divide a)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return []
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        q[k] = c
        if c:
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def ip_gcd(a, b):
    """Primitive gcd over Z[x] (primitive PRS)."""
    a = ip_primitive(a)
    b = ip_primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = ip_prem(a, b)
        a, b = b, ip_primitive(r)
    return a


_PRIMES = (2**61 - 1, 2**31 - 1, 1000000007)


def _gcd_deg_mod(a, b, p):
    """Degree of gcd(a, b) over Z/p."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while b and b[-1] == 0:
        b.pop()
    while a and a[-1] == 0:
        a.pop()
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            q = a[-1] * inv % p
            sh = len(a) - len(b)
            for i, c in enumerate(b):
                a[sh + i] = (a[sh + i] - q * c) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _surely_squarefree(a):
    """Cheap modular certificate that a has no repeated factor."""
    for p in _PRIMES:
        if a[-1] % p and (len(a) - 1) % p:
            return _gcd_deg_mod(a, ip_deriv(a), p) == 0
    return False


def ip_sqf_part(a):
    a = ip_primitive(a)
    if len(a) <= 2:
        return a
    if _surely_squarefree(a):
        return a
    g = ip_gcd(a, ip_deriv(a))
    if len(g) == 1:
        return a
    return ip_primitive(ip_divexact(a, g))


def ip_eval_sign(a, q):
    """Sign of a(q) for a rational q."""
    q = Fraction(q)
    v = kernels.eval_homog(a, q.numerator, q.denominator)
    return (v > 0) - (v < 0)


def ip_taylor_at(a, num, den):
    """Integer coefficients T with den^n a(num/den + t/den) = sum T_k t^k."""
    n = len(a) - 1
    scaled = [c * den ** (n - i) for i, c in enumerate(a)]
    return kernels.taylor_shift(scaled, num)


def ip_translate(a, s):
    """Coefficients (over Q, returned primitive over Z) of a(x + s)."""
    s = Fraction(s)
    return UniPoly(a).translate(s).primitive()


# ---------------------------------------------------------------------------


def _to_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


class UniPoly:
    """Polynomial sum c_k t^k over Q, stored as an immutable coefficient tuple."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [_to_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        obj._c = tuple(c)
        return obj

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def t(cls):
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(cls, roots):
        p = cls._raw((Fraction(1),))
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    # -- basic structure -----------------------------------------------------
    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    @property
    def lc(self):
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k):
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def order_at_zero(self):
        """Multiplicity of t = 0 as a root (0 if p(0) != 0)."""
        if not self._c:
            raise ZeroPolynomial("order of the zero polynomial")
        k = 0
        while self._c[k] == 0:
            k += 1
        return k

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self._c))

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly._raw((Fraction(other),))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        return UniPoly._raw(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(-c for c in self._c)

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
            other = Fraction(other)
            return UniPoly._raw(c * other for c in self._c)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return UniPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly._raw((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        db = o.degree
        lb = o.lc
        if len(r) - 1 < db:
            return UniPoly._raw(()), self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            q[k] = c
            if c:
                for i in range(db + 1):
                    r[k + i] -= c * o._c[i]
        return UniPoly._raw(q), UniPoly._raw(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly._raw(())
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- transformations --------------------------------------------------------
    def deriv(self):
        return UniPoly._raw(i * self._c[i] for i in range(1, len(self._c)))

    def monic(self):
        if not self._c:
            raise ZeroPolynomial("monic of zero polynomial")
        lc = self._c[-1]
        return UniPoly._raw(c / lc for c in self._c)

    def primitive(self):
        """Primitive integer coefficient list with positive leading coefficient."""
        if not self._c:
            return []
        den = 1
        for c in self._c:
            den = lcm(den, c.denominator)
        return ip_primitive([int(c * den) for c in self._c])

    @classmethod
    def from_ints(cls, a):
        return cls._raw(Fraction(c) for c in a)

    def mul_t(self, k):
        """Multiply by t^k (k >= 0)."""
        if not self._c:
            return self
        return UniPoly._raw((Fraction(0),) * k + self._c)

    def reverse(self, n=None):
        """t^n p(1/t), n defaulting to the degree."""
        if n is None:
            n = self.degree
        c = list(self._c) + [Fraction(0)] * (n + 1 - len(self._c))
        return UniPoly._raw(reversed(c[: n + 1]))

    def translate(self, s):
        """p(t + s)."""
        s = Fraction(s)
        c = list(self._c)
        n = len(c)
        if s == 0:
            return self
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += s * c[j + 1]
        return UniPoly._raw(c)

    def scale_arg(self, lam):
        """p(lam * t)."""
        lam = Fraction(lam)
        out = []
        pw = Fraction(1)
        for c in self._c:
            out.append(c * pw)
            pw *= lam
        return UniPoly._raw(out)

    def compose(self, q):
        acc = UniPoly._raw(())
        for c in reversed(self._c):
            acc = acc * q + c
        return acc

    # -- display ----------------------------------------------------------------
    def __repr__(self):
        return f"UniPoly({[str(c) for c in self._c]})"

    def __str__(self):
        return self.to_str("t")

    def to_str(self, var="t"):
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# algebra over Q


def poly_gcd(a, b):
    """Monic gcd (zero if both inputs are zero)."""
    g = ip_gcd(a.primitive(), b.primitive())
    if not g:
        return UniPoly()
    return UniPoly.from_ints(g).monic()


def squarefree_part(p):
    if p.is_zero():
        raise ZeroPolynomial("square-free part of zero")
    return UniPoly.from_ints(ip_sqf_part(p.primitive())).monic()


def ext_gcd(a, b):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.const(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc
    return r0 * (1 / lc), s0 * (1 / lc), t0 * (1 / lc)


def invmod(a, m):
    """Inverse of a modulo m (requires gcd(a, m) = 1)."""
    g, s, _ = ext_gcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError("polynomial not invertible modulo m")
    return s % m


def resultant(a, b):
    """Res(a, b) over Q via the Euclidean remainder sequence."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return sign * acc * b.lc**da
        if da == 0:
            return sign * acc * a.lc**db
        r = a % b
        if r.is_zero():
            return Fraction(0)
        dr = r.degree
        if (da * db) & 1:
            sign = -sign
        acc *= b.lc ** (da - dr)
        a, b = b, r


def squarefree_decomposition(p):
    """Yun's algorithm: [(factor, multiplicity), ...] with monic factors.

    p = lc(p) * prod factor^mult, multiplicities strictly increasing.
    """
    if p.is_zero():
        raise ZeroPolynomial("square-free decomposition of zero")
    if p.degree == 0:
        return []
    out = []
    dp = p.deriv()
    a0 = poly_gcd(p, dp)
    b = p // a0
    c = dp // a0
    d = c - b.deriv()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b // a
        c = d // a
        d = c - b.deriv()
        i += 1
    return out


def interpolate(xs, ys):
    """Newton interpolation through (xs[i], ys[i]) over Q."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly.const(coef[-1])
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + coef[i]
    return p
