"""Deterministic random polynomial corpora shared by several test modules."""
import random
from functools import lru_cache

from nbif.atinfinity import check_hypotheses
from nbif.bivar import BiPoly
from nbif.criticality import has_isolated_singularities


def random_sparse(rng, max_deg=5, terms=(3, 6), coeffs=(-5, 5)):
    while True:
        t = {}
        for _ in range(rng.randint(*terms)):
            c = rng.randint(*coeffs)
            if c:
                t[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = c
        f = BiPoly(t)
        if not f.is_constant():
            return f


def random_dense(rng, dx, dy, lo=-9, hi=9):
    return BiPoly({(i, j): rng.randint(lo, hi) for i in range(dx + 1) for j in range(dy + 1)})


def random_bad_face(rng):
    """b(xy) plus a few terms below the diagonal: a bad face with covector (1, -1)."""
    t = {}
    for k in rng.sample(range(1, 5), rng.randint(2, 3)):
        t[(k, k)] = rng.choice([-3, -2, -1, 1, 2, 3])
    for _ in range(rng.randint(1, 2)):
        n = rng.randint(0, 3)
        t[(rng.randint(n + 1, 5), n)] = rng.choice([-2, -1, 1, 2])
    return BiPoly(t)


@lru_cache(maxsize=None)
def hypothesis_corpus(n=60, seed=20240601):
    """n polynomials of bidegree <= (5, 5) that satisfy the hypotheses and
    have isolated critical points; every third one is built around a bad face."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        f = random_bad_face(rng) if len(out) % 3 == 2 else random_sparse(rng)
        if f.is_constant():
            continue
        if check_hypotheses(f).ok and has_isolated_singularities(f):
            out.append(f)
    return tuple(out)


def first_family(m, n=1):
    """x (1 + x^m y^(2n))."""
    return BiPoly({(1, 0): 1, (m + 1, 2 * n): 1})


def second_family(m, a):
    """x + x^m y^m (1/m + 2a/(m+1) xy + 1/(m+2) x^2 y^2)."""
    from fractions import Fraction as Q

    return BiPoly({(1, 0): 1, (m, m): Q(1, m), (m + 1, m + 1): Q(2 * a, m + 1), (m + 2, m + 2): Q(1, m + 2)})


def to_sympy(f, x, y):
    import sympy

    return sum(sympy.Rational(c.numerator, c.denominator) * x**m * y**n for (m, n), c in f.items())


def from_sympy(expr, x, y):
    import sympy

    from fractions import Fraction as Q

    p = sympy.Poly(sympy.expand(expr), x, y)
    return BiPoly({k: Q(int(c.p), int(c.q)) for k, c in p.terms()})
