"""Arithmetic in Q[x]/(m) with integer-only inner loops.

With L = lc(m) and n = deg m, the substitution x = y / L turns m into the
monic integer polynomial M(y) = L^(n-1) m(y / L).  Elements are stored as
(A, d): an integer polynomial in y over a positive integer denominator.
Products reduce modulo a monic polynomial, so no rational arithmetic is
needed until the very end.
"""
from fractions import Fraction
from math import gcd, lcm

from . import kernels
from .upoly import UniPoly, ip_primitive


def _content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


class QuotientRing:
    def __init__(self, m):
        if isinstance(m, UniPoly):
            m = m.primitive()
        m = ip_primitive(m)
        self.m = m
        self.n = n = len(m) - 1
        self.L = L = m[-1]
        self.M = [m[i] * L ** (n - 1 - i) for i in range(n)] + [1]
        self._psums = None

    # -- conversion ---------------------------------------------------------------------
    def element(self, p):
        """Image of a rational polynomial p(x)."""
        if not isinstance(p, UniPoly):
            p = UniPoly(p)
        c = p.coeffs
        if not c:
            return ([], 1)
        L = self.L
        deg = len(c) - 1
        d = 1
        for v in c:
            d = lcm(d, v.denominator)
        d *= L**deg
        # v * d / L^i is an integer since d carries L^deg
        A = [int(v * d) // L**i for i, v in enumerate(c)]
        return self._norm(kernels.rem_monic(A, self.M), d)

    def to_poly(self, e):
        """Back to a rational polynomial in x of degree < n."""
        A, d = e
        L = self.L
        return UniPoly([Fraction(a * L**i, d) for i, a in enumerate(A)])

    def _norm(self, A, d):
        if not A:
            return ([], 1)
        g = gcd(_content(A), d)
        if g > 1:
            A = [a // g for a in A]
            d //= g
        return (A, d)

    # -- ring operations ------------------------------------------------------------------
    def mul(self, e1, e2):
        A = kernels.rem_monic(kernels.ipoly_mul(e1[0], e2[0]), self.M)
        return self._norm(A, e1[1] * e2[1])

    def add(self, e1, e2):
        (A, a), (B, b) = e1, e2
        d = a * b // gcd(a, b)
        fa, fb = d // a, d // b
        n = max(len(A), len(B))
        out = [(A[i] * fa if i < len(A) else 0) + (B[i] * fb if i < len(B) else 0) for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return self._norm(out, d)

    def neg(self, e):
        return ([-a for a in e[0]], e[1])

    def scale(self, e, q):
        q = Fraction(q)
        return self._norm([a * q.numerator for a in e[0]], e[1] * q.denominator)

    def is_zero(self, e):
        return not e[0]

    def inv(self, e):
        """Inverse by solving the multiplication-matrix system."""
        A, d = e
        n = self.n
        if not A:
            raise ZeroDivisionError("zero is not invertible")
        # columns: A * y^i mod M
        cols = []
        cur = A
        for i in range(n):
            cols.append(cur + [0] * (n - len(cur)))
            cur = kernels.rem_monic([0] + cur, self.M)
        mat = [[cols[j][i] for j in range(n)] + [1 if i == 0 else 0] for i in range(n)]
        sol = _solve_int(mat, n)
        if sol is None:
            raise ZeroDivisionError("element not invertible modulo m")
        X, den = sol
        if den < 0:
            X, den = [-v for v in X], -den
        while X and X[-1] == 0:
            X.pop()
        # (A/d)^-1 = d * (A^-1)
        return self._norm([v * d for v in X], den)

    def pow(self, e, k):
        r = ([1], 1)
        b = e
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    # -- traces and characteristic polynomials ----------------------------------------------
    def power_sums(self):
        """Power sums s_0..s_{n-1} of the roots of M (integers)."""
        if self._psums is None:
            M, n = self.M, self.n
            s = [n]
            for k in range(1, n):
                acc = k * M[n - k]
                for i in range(1, k):
                    acc += M[n - i] * s[k - i]
                s.append(-acc)
            self._psums = s
        return self._psums

    def value_poly(self, e):
        """Primitive integer polynomial R with R(e(alpha)) = 0 for every root alpha of m.

        R is the characteristic polynomial of multiplication by e.
        """
        A, d = e
        n = self.n
        if not A:
            return [0, 1]
        s = self.power_sums()
        p = []
        cur = [1]
        for _ in range(n):
            cur = kernels.rem_monic(kernels.ipoly_mul(cur, A), self.M)
            p.append(sum(c * s[j] for j, c in enumerate(cur)))
        # integer Newton identities for the monic char poly of A
        e_ = [1]
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                term = e_[k - i] * p[i - 1]
                acc += term if i % 2 else -term
            e_.append(acc // k)
        # chi_A(t) = sum (-1)^k e_k t^(n-k); values satisfy chi_A(d c) = 0
        coeffs = [0] * (n + 1)
        for k in range(n + 1):
            coeffs[n - k] = (-1) ** k * e_[k]
        R = [c * d**i for i, c in enumerate(coeffs)]
        return ip_primitive(R)


def _solve_int(mat, n):
    """Solve an n x (n+1) augmented integer system.

    Returns (y, det) with solution y / det (Cramer numerators), or None if singular.
    """
    a = [list(r) for r in mat]
    prev = 1
    for k in range(n):
        piv = None
        for r in range(k, n):
            if a[r][k] != 0:
                piv = r
                break
        if piv is None:
            return None
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n + 1):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    det = a[n - 1][n - 1]
    y = [0] * n
    for i in range(n - 1, -1, -1):
        acc = det * a[i][n]
        row = a[i]
        for j in range(i + 1, n):
            if row[j]:
                acc -= row[j] * y[j]
        y[i] = acc // row[i]
    return y, det
