import random
from fractions import Fraction as Q

import mpmath
import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester as sylvester_matrix

from nbif.bivar import (
    BiPoly,
    MonomialMap,
    bipoly_gcd,
    factor_axes,
    monomial_substitute,
    partial,
    resultant_elim,
    shear,
    translate_y,
)
from nbif.errors import DegenerateInput, ZeroPolynomial
from nbif.exactmath import UniPoly

from corpus import from_sympy, random_dense, random_sparse, to_sympy

X, Y = BiPoly.x(), BiPoly.y()
sx, sy = sympy.symbols("x y")


def test_partial_examples():
    assert partial(X**2 * Y, "x") == 2 * X * Y
    assert partial(X + X**2 * Y**2, "y") == 2 * X**2 * Y
    assert partial(BiPoly.const(7), "x").is_zero()


def test_partial_against_sympy():
    rng = random.Random(1)
    for _ in range(40):
        f = random_sparse(rng)
        e = to_sympy(f, sx, sy)
        assert partial(f, "x") == from_sympy(sympy.diff(e, sx), sx, sy)
        assert partial(f, "y") == from_sympy(sympy.diff(e, sy), sx, sy)


def test_monomial_substitute_examples():
    u2v = monomial_substitute(X * Y, MonomialMap(((1, 0), (1, 1))))
    assert u2v == BiPoly({(2, 1): 1})
    f = X * (1 + X * Y**2)
    M = MonomialMap.from_columns((-1, 0), (2, -1))
    assert monomial_substitute(f, M) == BiPoly({(-2, 2): 1, (-1, 2): 1})
    assert monomial_substitute(f, MonomialMap(((1, 0), (0, 1)))) == f


def _random_unimodular(rng):
    M = [[1, 0], [0, 1]]
    for _ in range(rng.randint(1, 5)):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            M = [[M[0][0] + k * M[0][1], M[0][1]], [M[1][0] + k * M[1][1], M[1][1]]]
        else:
            M = [[M[0][0], M[0][1] + k * M[0][0]], [M[1][0], M[1][1] + k * M[1][0]]]
    return MonomialMap(M)


def test_substitution_inverse_round_trip():
    rng = random.Random(2)
    for _ in range(60):
        f = random_sparse(rng)
        M = _random_unimodular(rng)
        assert M.det() == 1
        assert monomial_substitute(monomial_substitute(f, M), M.inverse()) == f


def test_substitution_evaluation_identity_100_points():
    rng = random.Random(3)
    for _ in range(100):
        f = random_sparse(rng, max_deg=4)
        M = _random_unimodular(rng)
        u = Q(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 5))
        v = Q(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 5))
        x0, y0 = M.pull_back_point(u, v)
        assert f(x0, y0) == monomial_substitute(f, M)(u, v)


def test_translate_y_examples():
    assert translate_y(Y**2, 1) == Y**2 + 2 * Y + 1
    assert translate_y(X + Y, -2) == X + Y - 2
    assert translate_y(Y**3 - 3 * Y + 2, 1) == Y**3 + 3 * Y**2


def test_translate_y_against_sympy():
    rng = random.Random(4)
    for _ in range(30):
        f = random_sparse(rng)
        s = Q(rng.randint(-5, 5), rng.randint(1, 4))
        want = from_sympy(to_sympy(f, sx, sy).subs(sy, sy + sympy.Rational(s.numerator, s.denominator)), sx, sy)
        assert translate_y(f, s) == want


def test_shear_against_sympy():
    rng = random.Random(5)
    for _ in range(20):
        f = random_sparse(rng, max_deg=4)
        k = rng.randint(-3, 3)
        assert shear(f, k) == from_sympy(to_sympy(f, sx, sy).subs(sx, sx + k * sy), sx, sy)


def test_resultant_examples():
    assert resultant_elim(Y**2 - X, Y - 1, "y") == UniPoly([1, -1])
    f = X**2 + Y**2
    r = resultant_elim(partial(f, "x"), partial(f, "y"), "y")
    assert r.degree == 1 and r.coeffs[0] == 0
    r = resultant_elim(X - 3, X + Y, "x")
    assert r in (UniPoly([3, 1]), UniPoly([-3, -1]))


def test_resultant_degenerate():
    with pytest.raises(DegenerateInput):
        resultant_elim(BiPoly.const(2), X + 1, "y")
    # one side free of y: Res(c, g) = c^deg(g)
    assert resultant_elim(X + 1, Y**2 + X, "y") == UniPoly([1, 2, 1])


def test_resultant_against_sympy():
    rng = random.Random(6)
    for _ in range(30):
        f = random_dense(rng, rng.randint(1, 3), rng.randint(1, 3), -4, 4)
        g = random_dense(rng, rng.randint(1, 3), rng.randint(1, 3), -4, 4)
        if f.degree("y") < 1 or g.degree("y") < 1:
            continue
        F, G = to_sympy(f, sx, sy), to_sympy(g, sx, sy)
        # Sylvester determinant; sympy.resultant uses a different sign convention in some degrees
        want = sympy.Poly(sylvester_matrix(F, G, sy).det(), sx)
        got = resultant_elim(f, g, "y")
        assert [Q(int(c)) for c in reversed(want.all_coeffs())] == list(got.coeffs) or (want.is_zero and got.is_zero())
        assert sympy.expand(want.as_expr() - sympy.resultant(F, G, sy)) == 0 or sympy.expand(want.as_expr() + sympy.resultant(F, G, sy)) == 0


def _numeric_common_zeros(f, g):
    """Real x-coordinates of common zeros of f, g from a numeric bivariate solve."""
    ex, ey = to_sympy(f, sx, sy), to_sympy(g, sx, sy)
    sols = sympy.solve_poly_system([ex, ey], sx, sy) or []
    out = []
    for a, b in sols:
        a, b = complex(sympy.N(a, 30)), complex(sympy.N(b, 30))
        if abs(a.imag) < 1e-9 and abs(b.imag) < 1e-9:
            out.append(a.real)
    return out


def test_resultant_vanishes_at_projections():
    rng = random.Random(7)
    done = 0
    while done < 50:
        f = random_dense(rng, 1, 2, -3, 3)
        g = random_dense(rng, 2, 1, -3, 3)
        if f.degree("y") < 1 or g.degree("y") < 1 or not bipoly_gcd(f, g).is_constant():
            continue
        r = resultant_elim(f, g, "y")
        if r.is_zero():
            continue
        done += 1
        xs = _numeric_common_zeros(f, g)
        for x0 in xs:
            val = sum(float(c) * x0**k for k, c in enumerate(r.coeffs))
            scale = sum(abs(float(c)) * abs(x0) ** k for k, c in enumerate(r.coeffs))
            assert abs(val) <= 1e-8 * max(scale, 1)
        # conversely every real root of r is a projection (the system has no vertical asymptote here)
        lead_f, lead_g = f.y_coeffs()[-1], g.y_coeffs()[-1]
        roots = [float(z.real) for z in mpmath.polyroots([float(c) for c in reversed(r.coeffs)], maxsteps=200, extraprec=200) if abs(z.imag) < 1e-10]
        for z in roots:
            if abs(float(lead_f(Q(z)))) < 1e-6 or abs(float(lead_g(Q(z)))) < 1e-6:
                continue
            fz = sympy.Poly(to_sympy(f, sx, sy).subs(sx, z), sy)
            gz = sympy.Poly(to_sympy(g, sx, sy).subs(sx, z), sy)
            common = [w for w in fz.nroots() if abs(complex(gz.eval(w))) < 1e-5 * (1 + abs(complex(w))) ** gz.degree()]
            assert common, (f, g, z)


def test_factor_axes_examples():
    assert factor_axes(X**2 * Y * (1 + X)) == (2, 1, 1 + X)
    assert factor_axes(X + Y) == (0, 0, X + Y)
    assert factor_axes(X * (1 + X * Y**2)) == (1, 0, 1 + X * Y**2)
    with pytest.raises(ZeroPolynomial):
        factor_axes(BiPoly())


def test_gcd_against_sympy():
    rng = random.Random(8)
    for _ in range(25):
        a = random_sparse(rng, max_deg=2, terms=(2, 3))
        b = random_sparse(rng, max_deg=2, terms=(2, 3))
        c = random_sparse(rng, max_deg=2, terms=(2, 3))
        g = bipoly_gcd(a * c, b * c)
        want = sympy.gcd(to_sympy(a * c, sx, sy), to_sympy(b * c, sx, sy))
        ratio = sympy.simplify(to_sympy(g, sx, sy) / want)
        assert ratio.is_number and ratio != 0
