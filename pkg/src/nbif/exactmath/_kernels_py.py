"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints, lowest degree first.  The compiled
module ``_kernels`` exposes the same functions with the same semantics;
``nbif.exactmath.kernels`` picks whichever is importable.
"""


def ipoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def taylor_shift1(a):
    """Coefficients of a(x + 1) (Horner-style synthetic shifts)."""
    c = list(a)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return c


def sign_variations(a):
    count = 0
    last = 0
    for v in a:
        if v:
            if last and (v > 0) != (last > 0):
                count += 1
            last = v
    return count


def eval_homog(a, num, den):
    """Return sum a_i num^i den^(n-i) with n = len(a) - 1.

    For den > 0 its sign is the sign of a(num/den).
    """
    n = len(a)
    if n == 0:
        return 0
    acc = a[-1]
    dpow = den
    for i in range(n - 2, -1, -1):
        acc = acc * num + a[i] * dpow
        dpow *= den
    return acc


def eval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def bareiss_det(m):
    """Determinant of a square integer matrix (fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def scale_halve(a):
    """Coefficients of 2^n a(x/2), n = len(a) - 1."""
    n = len(a) - 1
    return [c << (n - i) for i, c in enumerate(a)]


def taylor_shift(a, s):
    """Coefficients of a(x + s) for an integer s."""
    c = list(a)
    n = len(c)
    if s == 0:
        return c
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += s * c[j + 1]
    return c


def rem_monic(a, m):
    """Remainder of a modulo the monic integer polynomial m (in place on a copy)."""
    a = list(a)
    n = len(m) - 1
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            base = k - n
            for i in range(n):
                a[base + i] -= c * m[i]
    del a[n:]
    while a and a[-1] == 0:
        a.pop()
    return a
