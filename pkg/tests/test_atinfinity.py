import random
from fractions import Fraction as Q

import pytest
import sympy

from nbif.atinfinity import (
    BOTH_SIDES,
    ONE_SIDE,
    UNDETERMINED,
    bifurcation_set,
    check_hypotheses,
    classify_tangency,
    condition_ii,
    condition_iii,
    counts,
    is_morse_bad_face,
    is_nondegenerate,
    r_plus,
    r_zero,
)
from nbif.bivar import BiPoly, MonomialMap
from nbif.errors import (
    BadFaceNotAllowed,
    HypothesisViolated,
    MorseViolation,
    NonIsolatedSingularities,
    NotBadFace,
    NotDoubleRoot,
)
from nbif.exactmath import UniPoly, alg_eq, count_real_roots
from nbif.fan import Chart, chart_expansion, complete_fan
from nbif.newton import MINUS, PLUS, ZERO, face_for, face_function, infinity_faces

from corpus import first_family, hypothesis_corpus, second_family, to_sympy

X, Y = BiPoly.x(), BiPoly.y()
sx, sy = sympy.symbols("x y")


def the_face(f, P):
    F = face_for(f, P)
    assert F is not None
    return F


# -- hypotheses --------------------------------------------------------------------------


def test_nondegenerate_examples():
    assert is_nondegenerate(the_face(X + X**2 * Y**2, (-2, 1)))
    F = the_face(X**2 * (1 + 2 * Y + Y**2) + 1, (-1, 0))
    assert F.cls == MINUS and not is_nondegenerate(F)
    assert is_nondegenerate(the_face(X**2 * (1 + Y**2) + 1, (-1, 0)))
    with pytest.raises(BadFaceNotAllowed):
        is_nondegenerate(the_face(second_family(2, 2), (1, -1)))


def _oracle_degenerate(fp, P):
    """Solve grad f_P = 0 in (R*)^2 directly, normalising one coordinate by quasi-homogeneity."""
    e = to_sympy(fp, sx, sy)
    ex, ey = sympy.diff(e, sx), sympy.diff(e, sy)
    # f_P(l^p x, l^q y) = l^d f_P(x, y): with p != 0 every orbit meets |x| = 1, else |y| = 1
    fixed, free = (sx, sy) if P.p != 0 else (sy, sx)
    for sign in (1, -1):
        a = sympy.Poly(ex.subs(fixed, sign), free)
        b = sympy.Poly(ey.subs(fixed, sign), free)
        if a.is_zero and b.is_zero:
            return True
        g = sympy.gcd(a, b) if not a.is_zero else b
        if g.is_zero:
            g = a
        if g.degree() <= 0:
            continue
        if any(r != 0 for r in sympy.real_roots(g)):
            return True
    return False


def _random_profile(rng):
    phi = UniPoly([rng.choice([-3, -2, -1, 1, 2, 3])])
    for _ in range(rng.randint(1, 3)):
        kind = rng.random()
        r = Q(rng.choice([-1, 1]) * rng.randint(1, 4), rng.randint(1, 3))
        if kind < 0.3:
            phi = phi * UniPoly([-r, 1]) ** 2
        elif kind < 0.6:
            phi = phi * UniPoly([-r, 1])
        else:
            phi = phi * UniPoly([abs(r), 0, 1])
    return phi


def test_nondegenerate_brute_force_100_faces():
    rng = random.Random(50)
    done = 0
    while done < 100:
        dx, dy = rng.randint(-3, 3), rng.randint(0, 3)
        if (dx, dy) == (0, 0) or sympy.gcd(dx, dy) != 1:
            continue
        phi = _random_profile(rng)
        m0, n0 = rng.randint(0, 4), rng.randint(0, 4)
        pts = [(m0 + k * dx, n0 + k * dy) for k in range(phi.degree + 1)]
        if any(m < 0 or n < 0 for m, n in pts):
            continue
        f = BiPoly({pt: c for pt, c in zip(pts, phi.coeffs) if c})
        for F in infinity_faces(f):
            if F.cls == ZERO:
                continue
            want = _oracle_degenerate(face_function(f, F.P), F.P)
            assert is_nondegenerate(F) == (not want), (f, F.P)
            done += 1


def test_morse_examples():
    for a in (-3, -1, 0, 1, 2):
        F = the_face(second_family(2, a), (1, -1))
        assert is_morse_bad_face(F) == (a not in (1, -1))
    assert is_morse_bad_face(the_face(1 + X**2 * Y**2 + X, (1, -1)))
    assert is_morse_bad_face(the_face(X**4 * Y**4 - 2 * X**2 * Y**2 + X, (1, -1)))
    with pytest.raises(NotBadFace):
        is_morse_bad_face(the_face(X + X**2 * Y**2, (2, -1)))


def test_verdict_lists():
    v = check_hypotheses(second_family(2, 1))
    assert not v.ok and not v.morse_bad_faces and v.non_morse_faces
    v = check_hypotheses(X**2 * (1 + Y) ** 2 + 1)
    assert not v.nondegenerate_plus_minus and v.degenerate_faces
    v = check_hypotheses(second_family(2, 2))
    assert v.ok and not v.degenerate_faces and not v.non_morse_faces


# -- conditions and B_f -------------------------------------------------------------------


def test_condition_ii_examples():
    ok, wit = condition_ii(X + X**2 * Y**2)
    assert ok and [(F.P.p, F.P.q) for F in wit] == [(2, -1)]
    assert condition_ii(X + X**3 * Y**2) == (False, [])
    ok, wit = condition_ii(X + X**2 * Y)
    assert ok and len(wit) == 1


def test_condition_iii_examples():
    c3 = condition_iii(second_family(2, 2))
    assert len(c3) == 2
    (t0, v0), (t1, v1) = [(float(t), float(v)) for _, t, v in c3]
    assert abs(t0 - (-2 - 3**0.5)) < 1e-12 and abs(t1 - (-2 + 3**0.5)) < 1e-12
    assert abs(v0 + 13.844869896985) < 1e-9 and abs(v1 - 0.011536563608841) < 1e-12
    assert condition_iii(second_family(2, 0)) == []
    assert condition_iii(X**2 + Y**2) == []
    with pytest.raises(MorseViolation):
        condition_iii(second_family(2, 1))


def test_bifurcation_set_examples():
    r = bifurcation_set(first_family(1))
    assert [float(v) for v in r.values] == [0.0] and r.b_set[0][1] == {"cond_ii"}
    assert bifurcation_set(first_family(2)).values == []
    r = bifurcation_set(second_family(2, 2))
    assert len(r) == 3
    vals = [float(v) for v in r.values]
    assert abs(vals[0] + 13.844869896985) < 1e-9 and vals[1] == 0.0 and abs(vals[2] - 0.0115365636088) < 1e-12
    with pytest.raises(HypothesisViolated) as e:
        bifurcation_set(second_family(2, -1))
    assert e.value.verdict.non_morse_faces


def test_bifurcation_set_merges_tags():
    # x^2 + y^2 + x: critical value -1/4; not from condition (ii)
    r = bifurcation_set(X**2 + Y**2 + X)
    assert len(r) == 1 and r.b_set[0][1] == {"critical"}


# -- tangencies and counts ---------------------------------------------------------------


def _synthetic_chart(g, h):
    return Chart(0, MonomialMap(((1, 0), (0, 1))), 0, 0, g, h)


def test_classify_tangency_synthetic():
    g = UniPoly([1, -2, 1])  # (v - 1)^2, level c = 0
    v = BiPoly.y()
    assert classify_tangency(_synthetic_chart(g, BiPoly.const(1)), 0, 1) == ONE_SIDE
    assert classify_tangency(_synthetic_chart(g, v - 1), 0, 1) == UNDETERMINED
    with pytest.raises(NotDoubleRoot):
        classify_tangency(_synthetic_chart(UniPoly([-1, 1]), BiPoly.const(1)), 0, 1)
    with pytest.raises(NotDoubleRoot):
        classify_tangency(_synthetic_chart(UniPoly([-1, 3, -3, 1]), BiPoly.const(1)), 0, 1)
    with pytest.raises(NotBadFace):
        classify_tangency(Chart(0, MonomialMap(((1, 0), (0, 1))), 1, 0, g, BiPoly.const(1)), 0, 1)


def test_classify_tangency_second_family_m8():
    f = second_family(8, 2)
    fan = complete_fan([F.P for F in infinity_faces(f)])
    ch = chart_expansion(f, fan, fan.index_of((1, -1)))
    c3 = condition_iii(f)
    assert len(c3) == 2
    # on u = 0 of this chart xy = v, so the tangency sits at v = t*
    for _, t, c in c3:
        assert classify_tangency(ch, c, t) == ONE_SIDE
    assert BOTH_SIDES != ONE_SIDE


def test_counts_examples():
    c = counts(first_family(1))
    assert (c.R_plus, c.R_zero, c.total, c.exact_split) == (1, 0, 2, (2, 0))
    c = counts(second_family(2, 2))
    assert (c.R_plus, c.R_zero, c.total) == (1, 2, 6)
    assert c.exact_split == (4, 2) and c.vanish_min == c.vanish_max == 2
    c = counts(X**2 + Y**2)
    assert c.R_zero == 0 and c.vanish == 0


def test_counts_errors():
    with pytest.raises(HypothesisViolated):
        counts(second_family(2, 1))
    with pytest.raises(NonIsolatedSingularities):
        counts((X**2 + Y**2 - 1) ** 2)


def test_counts_invariants_on_corpus():
    for f in hypothesis_corpus():
        c = counts(f)
        assert c.total == 2 * (c.R_plus + c.R_zero)
        assert 0 <= c.vanish_min <= c.vanish_max <= 2 * c.R_zero
        if c.exact_split is not None:
            assert sum(c.exact_split) == c.total and c.vanish_min == c.vanish == c.vanish_max
        if not any(F.cls == ZERO for F in infinity_faces(f)):
            assert c.vanish == 0


# -- metamorphic -------------------------------------------------------------------------


def same(a, b):
    return len(a) == len(b) and all(alg_eq(u, v) for u, v in zip(a, b))


def test_corpus_is_large_enough():
    assert len(hypothesis_corpus()) >= 50


def test_swap_invariance():
    for f in hypothesis_corpus():
        g = f.swap()
        assert check_hypotheses(g).ok
        assert sorted([r_plus(f), r_zero(f)]) == sorted([r_plus(g), r_zero(g)])
        assert (r_plus(f), r_zero(f)) == (r_plus(g), r_zero(g))
        assert same(bifurcation_set(f).values, bifurcation_set(g).values)


def test_scale_invariance():
    rng = random.Random(51)
    for f in hypothesis_corpus():
        lam = Q(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        want = sorted(v.scale(lam) for v in bifurcation_set(f).values)
        assert same(bifurcation_set(f * lam).values, want)


def test_shift_invariance():
    rng = random.Random(52)
    checked = 0
    for f in hypothesis_corpus():
        q = Q(rng.randint(-9, 9), rng.randint(1, 4))
        g = f + q
        if not check_hypotheses(g).ok:
            continue  # a new face through the origin can break the Morse hypothesis
        checked += 1
        want = [v.shift(q) for v in bifurcation_set(f).values]
        assert same(bifurcation_set(g).values, want), (f, q)
    assert checked >= 50


def test_r_plus_from_charts():
    for f in hypothesis_corpus():
        g = f - f.constant_term()
        faces = [F for F in infinity_faces(g) if F.cls == PLUS]
        fan = complete_fan([F.P for F in infinity_faces(g)])
        via_chart = sum(count_real_roots(chart_expansion(g, fan, fan.index_of(F.P)).g, mode="nonzero") for F in faces)
        assert via_chart == r_plus(f)
