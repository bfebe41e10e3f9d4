# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counterparts of ``_kernels_py``.

Coefficients stay Python ints (arbitrary precision); the gain comes from
typed loop indices and direct list access.
"""


def ipoly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] = out[i + j] + ai * b[j]
    return out


def taylor_shift1(a):
    cdef list c = list(a)
    cdef Py_ssize_t n = len(c), i, j
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] = c[j] + c[j + 1]
    return c


def sign_variations(a):
    cdef int count = 0
    cdef int last = 0
    cdef int s
    for v in a:
        if v:
            s = 1 if v > 0 else -1
            if last != 0 and s != last:
                count += 1
            last = s
    return count


def eval_homog(list a, num, den):
    cdef Py_ssize_t n = len(a), i
    if n == 0:
        return 0
    acc = a[n - 1]
    dpow = den
    for i in range(n - 2, -1, -1):
        acc = acc * num + a[i] * dpow
        dpow = dpow * den
    return acc


def eval_int(list a, x):
    cdef Py_ssize_t i
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


def bareiss_det(m):
    cdef Py_ssize_t n = len(m), k, i, j, r
    if n == 0:
        return 1
    cdef list a = [list(row) for row in m]
    cdef list rowk, rowi
    cdef int sign = 1
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
        rowk = a[k]
        akk = rowk[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def scale_halve(a):
    cdef Py_ssize_t n = len(a) - 1, i
    return [a[i] << (n - i) for i in range(n + 1)]


def taylor_shift(a, s):
    cdef list c = list(a)
    cdef Py_ssize_t n = len(c), i, j
    if s == 0:
        return c
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] = c[j] + s * c[j + 1]
    return c


def rem_monic(a, list m):
    cdef list r = list(a)
    cdef Py_ssize_t n = len(m) - 1, k, i, base
    for k in range(len(r) - 1, n - 1, -1):
        c = r[k]
        if c:
            base = k - n
            for i in range(n):
                r[base + i] = r[base + i] - c * m[i]
    del r[n:]
    while r and r[len(r) - 1] == 0:
        r.pop()
    return r
