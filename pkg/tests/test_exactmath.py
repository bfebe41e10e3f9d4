import random
from fractions import Fraction as Q

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nbif.errors import ZeroPolynomial
from nbif.exactmath import (
    RealAlgebraicNumber,
    UniPoly,
    alg_cmp,
    alg_eq,
    alg_image,
    count_real_roots,
    dedupe,
    isolate_real_roots,
    poly_gcd,
    resultant,
    squarefree_decomposition,
)
from nbif.exactmath import _kernels_py, kernels
from nbif.exactmath.quotient import QuotientRing

T = UniPoly.t()


def oracle_real_roots(coeffs, dps=60):
    """Distinct real roots via high precision complex root finding."""
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if len(c) <= 1:
        return []
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(c[::-1], maxsteps=400, extraprec=4 * dps)
        real = sorted(float(r.real) for r in roots if abs(r.imag) < mpmath.mpf(10) ** (-dps // 3))
    out = []
    for r in real:
        if not out or abs(r - out[-1]) > 1e-9 * max(1, abs(r)):
            out.append(r)
    return out


# -- counting -------------------------------------------------------------------


def test_count_examples():
    assert count_real_roots(T * T - 2) == 2
    assert count_real_roots(T * (T * T + 4 * T + 1), mode="nonzero") == 2
    assert count_real_roots(T * T + 1) == 0


def test_count_zero_polynomial_raises():
    with pytest.raises(ZeroPolynomial):
        count_real_roots(UniPoly())


def test_count_in_interval():
    p = (T - 1) * (T - 2) * (T + 3)
    assert count_real_roots(p, mode="in_interval", interval=(0, 5)) == 2
    assert count_real_roots(p, mode="in_interval", interval=(Q(3, 2), 2)) == 1


def test_count_against_numeric_oracle_1000():
    rng = random.Random(99)
    bad = []
    for _ in range(1000):
        deg = rng.randint(1, 12)
        c = [rng.randint(-100, 100) for _ in range(deg + 1)]
        if c[-1] == 0:
            c[-1] = 1
        got = count_real_roots(UniPoly(c))
        want = len(oracle_real_roots(c))
        if got != want:
            bad.append((c, got, want))
    assert not bad, bad[:3]


# -- square-free decomposition ------------------------------------------------------


def test_sqf_examples():
    assert squarefree_decomposition((T - 1) ** 2 * (T + 2)) == [(T + 2, 1), (T - 1, 2)]
    assert squarefree_decomposition(T**3) == [(T, 3)]
    assert squarefree_decomposition(T**4 - 2 * T**2 + 1) == [(T**2 - 1, 2)]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=9).filter(lambda c: any(c)))
def test_sqf_reconstructs(c):
    p = UniPoly(c)
    parts = squarefree_decomposition(p)
    prod = UniPoly.const(p.lc)
    for fac, m in parts:
        prod = prod * fac**m
        assert poly_gcd(fac, fac.deriv()).degree == 0
    assert prod == p
    mults = [m for _, m in parts]
    assert mults == sorted(set(mults))
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            assert poly_gcd(parts[i][0], parts[j][0]).degree == 0


# -- isolation ----------------------------------------------------------------------


def test_isolate_examples():
    r = isolate_real_roots(T * T - 3)
    assert len(r) == 2 and r[0] < 0 < r[1]
    assert abs(float(r[1]) - 3**0.5) < 1e-12
    r = isolate_real_roots(T * (T * T + 4 * T + 1))
    assert [round(float(v), 9) for v in r] == [round(-2 - 3**0.5, 9), round(-2 + 3**0.5, 9), 0]
    assert isolate_real_roots(UniPoly([5])) == []


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=10).filter(lambda c: c[-1] != 0))
def test_isolation_properties(c):
    p = UniPoly(c)
    roots = isolate_real_roots(p)
    assert len(roots) == count_real_roots(p)
    sq = p.primitive()
    for a in roots:
        lo, hi = a.interval
        if lo == hi:
            assert p(lo) == 0
        else:
            assert UniPoly.from_ints(a.minpoly_ints)(lo) * UniPoly.from_ints(a.minpoly_ints)(hi) < 0
    for a, b in zip(roots, roots[1:]):
        assert a.interval[1] <= b.interval[0]
    assert sq  # primitive form exists


def test_rational_roots_become_points():
    r = isolate_real_roots((3 * T - 1) * (T * T - 2))
    rat = [v for v in r if v.is_rational()]
    assert [v.as_fraction() for v in rat] == [Q(1, 3)]


# -- algebraic numbers --------------------------------------------------------------


def sqrt(n):
    return isolate_real_roots(T * T - n)[1]


def test_alg_image_examples():
    s2 = sqrt(2)
    v = alg_image(T * T, s2)
    assert v.is_rational() and v.as_fraction() == 2
    assert alg_eq(alg_image(T, s2), s2)


def test_alg_image_fifty_digits():
    b = Q(1, 2) * T**2 + Q(4, 3) * T**3 + Q(1, 4) * T**4
    crit = [a for a in isolate_real_roots(T * T + 4 * T + 1)]
    mpmath.mp.dps = 60
    for a, exact in zip(crit, [-2 - mpmath.sqrt(3), -2 + mpmath.sqrt(3)]):
        v = alg_image(b, a)
        ref = exact**2 / 2 + 4 * exact**3 / 3 + exact**4 / 4
        w = v.refine(Q(1, 10**50))
        lo, hi = w.interval
        assert mpmath.mpf(lo.numerator) / lo.denominator <= ref <= mpmath.mpf(hi.numerator) / hi.denominator
    assert abs(float(alg_image(b, crit[1])) - 0.01153656360884) < 1e-12


def test_alg_eq_examples():
    s2 = sqrt(2)
    other = RealAlgebraicNumber([-4, 0, 2], Q(14, 10), Q(15, 10))
    assert alg_eq(s2, other)
    assert not alg_eq(s2, -s2)
    assert alg_eq(RealAlgebraicNumber([-1, 3], 0, 1), RealAlgebraicNumber.from_rational(Q(1, 3)))


def test_alg_ordering_and_dedupe():
    vals = [sqrt(2), sqrt(3), RealAlgebraicNumber.from_rational(1), -sqrt(2), sqrt(2).shift(0)]
    d = dedupe(vals)
    assert len(d) == 4
    assert alg_cmp(sqrt(2), sqrt(3)) < 0
    assert sorted(d)[0] == -sqrt(2)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-6, 6), min_size=3, max_size=5).filter(lambda c: c[-1] != 0),
    st.lists(st.integers(-5, 5), min_size=1, max_size=5),
)
def test_alg_image_matches_numeric(mc, bc):
    m = UniPoly(mc)
    b = UniPoly(bc)
    for a in isolate_real_roots(m):
        v = alg_image(b, a)
        x = float(a)
        assert abs(float(v) - float(b(Q(x)))) <= 1e-6 * max(1.0, abs(float(v)))


def test_alg_image_respects_equality():
    s2a = sqrt(2)
    s2b = RealAlgebraicNumber([-4, 0, 2], 1, 2)  # non-primitive minpoly
    b = T**3 - T
    assert alg_eq(alg_image(b, s2a), alg_image(b, s2b))


def test_resultant_against_sympy():
    rng = random.Random(3)
    t = sympy.Symbol("t")
    for _ in range(30):
        a = [rng.randint(-5, 5) for _ in range(rng.randint(2, 5))] + [1]
        b = [rng.randint(-5, 5) for _ in range(rng.randint(2, 5))] + [2]
        want = sympy.resultant(sympy.Poly(a[::-1], t), sympy.Poly(b[::-1], t))
        assert resultant(UniPoly(a), UniPoly(b)) == Q(int(want))


# -- quotient ring ---------------------------------------------------------------------


def test_quotient_ring_inverse_and_charpoly():
    Qr = QuotientRing(UniPoly([-2, 0, 3]))
    e = Qr.element(UniPoly([1, 1]))
    one = Qr.mul(e, Qr.inv(e))
    assert Qr.to_poly(one) == UniPoly([1])
    x2 = Qr.element(T * T)
    assert Qr.value_poly(x2) == [4, -12, 9]  # (3c - 2)^2: both roots map to 2/3
    chi = Qr.value_poly(e)
    # (1 + x) with 3 x^2 = 2: values 1 +- sqrt(2/3)
    for a in isolate_real_roots(UniPoly([-2, 0, 3])):
        assert abs(np.polyval(chi[::-1], 1 + float(a))) < 1e-9


# -- kernels: both backends agree -------------------------------------------------------

ints = st.lists(st.integers(-10**12, 10**12), min_size=1, max_size=12)


@settings(max_examples=100, deadline=None)
@given(ints, ints, st.integers(-50, 50), st.integers(1, 30))
def test_kernels_match_python_fallback(a, b, s, den):
    k, p = kernels, _kernels_py
    assert k.ipoly_mul(a, b) == p.ipoly_mul(a, b)
    assert k.taylor_shift1(a) == p.taylor_shift1(a)
    assert k.taylor_shift(a, s) == p.taylor_shift(a, s)
    assert k.sign_variations(a) == p.sign_variations(a)
    assert k.eval_homog(a, s, den) == p.eval_homog(a, s, den)
    assert k.eval_int(a, s) == p.eval_int(a, s)
    assert k.scale_halve(a) == p.scale_halve(a)
    m = b[:-1] + [1]
    assert k.rem_monic(a, m) == p.rem_monic(a, m)


def test_bareiss_against_numpy():
    rng = random.Random(5)
    for n in range(1, 7):
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert kernels.bareiss_det(M) == _kernels_py.bareiss_det(M) == round(np.linalg.det(np.array(M, float)))
