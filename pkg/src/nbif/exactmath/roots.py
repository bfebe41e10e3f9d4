"""Real root counting (Sturm) and isolation (Descartes bisection)."""
from fractions import Fraction
from math import gcd, lcm

from ..errors import ZeroPolynomial
from . import kernels
from .upoly import (
    UniPoly,
    ip_deriv,
    ip_eval_sign,
    ip_neg_x,
    ip_prem,
    ip_primitive,
    ip_sqf_part,
    ip_strip,
    ip_taylor_at,
)


def _as_ints(p):
    if isinstance(p, UniPoly):
        if p.is_zero():
            raise ZeroPolynomial("zero polynomial has infinitely many roots")
        return p.primitive()
    a = ip_strip(p)
    if not a:
        raise ZeroPolynomial("zero polynomial has infinitely many roots")
    return a


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(p):
    """Sturm sequence of the square-free part of p, as integer coefficient lists.

    Each remainder is rescaled by a *positive* factor only, so sign patterns
    are those of the classical sequence p, p', -rem, ...
    """
    a = ip_sqf_part(_as_ints(p))
    seq = [a]
    if len(a) <= 1:
        return seq
    b = ip_primitive(ip_deriv(a))
    seq.append(b)
    while len(b) > 1:
        r = ip_prem(a, b)
        if not r:
            break
        e = len(a) - len(b) + 1
        s = 1 if (b[-1] > 0 or e % 2 == 0) else -1
        # prem = s * |lc|^e * rem; we want a positive multiple of -rem
        r = [-s * c for c in r]
        g = 0
        for c in r:
            g = gcd(g, c)
        r = [c // g for c in r]
        seq.append(r)
        a, b = b, r
    return seq


def _variations_at(seq, x):
    signs = []
    if x == "+inf":
        signs = [1 if s[-1] > 0 else -1 for s in seq]
    elif x == "-inf":
        signs = [(1 if s[-1] > 0 else -1) * (-1 if (len(s) - 1) % 2 else 1) for s in seq]
    else:
        signs = [ip_eval_sign(s, x) for s in seq]
    return kernels.sign_variations(signs)


def _count_half_open(seq, a, b):
    """Distinct roots in (a, b]."""
    return _variations_at(seq, a) - _variations_at(seq, b)


def count_real_roots(p, mode="all", interval=None):
    """Number of distinct real roots of p.

    ``mode`` is ``"all"``, ``"nonzero"`` or ``"in_interval"``; the latter
    counts roots in the closed interval ``interval = (a, b)``.  A tuple
    ``("in_interval", a, b)`` is accepted as ``mode`` as well.
    """
    if isinstance(mode, tuple):
        mode, a, b = mode
        interval = (a, b)
    seq = sturm_sequence(p)
    if len(seq[0]) <= 1:
        return 0
    if mode == "all":
        return _variations_at(seq, "-inf") - _variations_at(seq, "+inf")
    if mode == "nonzero":
        n = _variations_at(seq, "-inf") - _variations_at(seq, "+inf")
        return n - (1 if seq[0][0] == 0 else 0)
    if mode == "in_interval":
        if interval is None:
            raise ValueError("in_interval mode needs interval=(a, b)")
        a, b = Fraction(interval[0]), Fraction(interval[1])
        if a > b:
            return 0
        n = _count_half_open(seq, a, b)
        if ip_eval_sign(seq[0], a) == 0:
            n += 1
        return n
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Descartes / Vincent-Collins-Akritas bisection


def _cauchy_exponent(a):
    """k with 2^k strictly above every root modulus of a."""
    lead = abs(a[-1])
    m = max((abs(c) for c in a[:-1]), default=0)
    bound = 1 + -(-m // lead)
    return bound.bit_length()


def _descartes_01(c):
    """Sign variation bound for roots of c in the open interval (0, 1)."""
    rev = c[::-1]
    return kernels.sign_variations(kernels.taylor_shift1(rev))


def _deflate_at_one(c):
    """c / (x - 1), exact."""
    n = len(c) - 1
    q = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = acc + c[i]
        q[i - 1] = acc
    return q


def _isolate_positive(q):
    """Isolating intervals for the positive roots of a square-free q with q(0) != 0.

    Returns sorted list of (lo, hi) Fractions; lo == hi for exact dyadic roots.
    """
    if len(q) <= 1:
        return []
    if kernels.sign_variations(q) == 0:
        return []
    K = _cauchy_exponent(q)
    scale = 1 << K
    c0 = [coef << (K * i) for i, coef in enumerate(q)]
    out = []
    stack = [(c0, 0, 0)]
    while stack:
        c, k, a = stack.pop()
        v = _descartes_01(c)
        if v == 0:
            continue
        width = Fraction(scale, 1 << k)
        if v == 1:
            out.append((a * width, (a + 1) * width))
            continue
        left = kernels.scale_halve(c)
        right = kernels.taylor_shift1(left)
        if right[0] == 0:
            # exact root at the midpoint; divide it out of both halves
            m = (2 * a + 1) * width / 2
            out.append((m, m))
            left = _deflate_at_one(left)
            right = right[1:]
        stack.append((right, k + 1, 2 * a + 1))
        stack.append((left, k + 1, 2 * a))
    out.sort()
    return out


def isolate_intervals(p):
    """Isolating intervals (lo, hi) of the distinct real roots of p, ascending.

    Also returns the square-free primitive integer polynomial the intervals
    refer to.
    """
    a = ip_sqf_part(_as_ints(p))
    if len(a) <= 1:
        return a, []
    zero = a[0] == 0
    q = a[1:] if zero else a
    pos = _isolate_positive(q)
    neg = [(-hi, -lo) for lo, hi in _isolate_positive(ip_neg_x(q))]
    neg.sort()
    mid = [(Fraction(0), Fraction(0))] if zero else []
    ivs = [_clear_endpoints(a, lo, hi) for lo, hi in neg + mid + pos]
    return a, ivs


def _clear_endpoints(a, lo, hi):
    """Shrink (lo, hi) so that neither endpoint is a root of a.

    Endpoints can hit roots that were divided out at a bisection midpoint.
    """
    if lo == hi:
        return lo, hi
    if ip_eval_sign(a, lo) != 0 and ip_eval_sign(a, hi) != 0:
        return lo, hi
    seq = sturm_sequence(a)
    while ip_eval_sign(a, lo) == 0 or ip_eval_sign(a, hi) == 0:
        m = (lo + hi) / 2
        if ip_eval_sign(a, m) == 0:
            # the root inside is m itself
            return m, m
        right = _count_half_open(seq, m, hi) - (1 if ip_eval_sign(a, hi) == 0 else 0)
        if right == 1:
            lo = m
        else:
            hi = m
    return lo, hi


def isolate_real_roots(p):
    """One RealAlgebraicNumber per distinct real root of p, ascending."""
    from .algebraic import RealAlgebraicNumber, _maybe_rational

    sq, ivs = isolate_intervals(p)
    out = []
    for lo, hi in ivs:
        if lo == hi:
            out.append(RealAlgebraicNumber.from_rational(lo))
        else:
            out.append(_maybe_rational(RealAlgebraicNumber._trusted(sq, lo, hi)))
    return out


def count_roots_open_interval(p_int, lo, hi):
    """Descartes bound on the number of roots of p_int in (lo, hi).

    Exact when the result is 0 or 1 (the standard Descartes guarantee).
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    den = lcm(lo.denominator, hi.denominator)
    num = lo.numerator * (den // lo.denominator)
    # den^n p(lo + t/den), then t = W x with W = (hi - lo) den
    T = ip_taylor_at(p_int, num, den)
    W = int((hi - lo) * den)
    u = [c * W**k for k, c in enumerate(T)]
    u = ip_strip(u)
    if not u:
        return 0
    return _descartes_01(u)
