# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact kernels; same contract as ``_kernels_py``.

Modular paths run on machine words with 128-bit products and require
``p < 2**63``.  Larger moduli and the integer model fall back to Python
object arithmetic compiled by Cython.
"""
from math import gcd

from . import _kernels_py as _py

BACKEND = "cython"

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline unsigned long long nk_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long p) {
        return (unsigned long long)(((unsigned __int128)a * b) % p);
    }
    static unsigned long long nk_invmod(unsigned long long a,
                                        unsigned long long p) {
        __int128 t = 0, newt = 1, r = p, newr = a, q, tmp;
        while (newr != 0) {
            q = r / newr;
            tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += p;
        return (unsigned long long)t;
    }
    """
    u64 nk_mulmod(u64 a, u64 b, u64 p) nogil
    u64 nk_invmod(u64 a, u64 p) nogil

cdef u64 WORD_LIMIT = (<u64>1) << 63


cdef inline u64 _sub(u64 a, u64 b, u64 p) nogil:
    return a - b if a >= b else a + (p - b)


cdef inline u64 _add(u64 a, u64 b, u64 p) nogil:
    cdef u64 s = a + b
    return s - p if s >= p else s


cdef inline bint _word(object p):
    return 0 < p < WORD_LIMIT


cdef inline u64 _red(object x, u64 p):
    return <u64>(x % p)


def cross(u, v, p):
    cdef u64 m, a0, a1, a2, b0, b1, b2
    if not p:
        a0_, a1_, a2_ = u
        b0_, b1_, b2_ = v
        x = a1_ * b2_ - a2_ * b1_
        y = a2_ * b0_ - a0_ * b2_
        z = a0_ * b1_ - a1_ * b0_
        g = gcd(gcd(x, y), z)
        if g > 1:
            return (x // g, y // g, z // g)
        return (x, y, z)
    if not _word(p):
        return _py.cross(u, v, p)
    m = p
    a0 = _red(u[0], m); a1 = _red(u[1], m); a2 = _red(u[2], m)
    b0 = _red(v[0], m); b1 = _red(v[1], m); b2 = _red(v[2], m)
    return (
        _sub(nk_mulmod(a1, b2, m), nk_mulmod(a2, b1, m), m),
        _sub(nk_mulmod(a2, b0, m), nk_mulmod(a0, b2, m), m),
        _sub(nk_mulmod(a0, b1, m), nk_mulmod(a1, b0, m), m),
    )


def dot(u, v, p):
    cdef u64 m
    if not p or not _word(p):
        return _py.dot(u, v, p)
    m = p
    return _add(
        _add(nk_mulmod(_red(u[0], m), _red(v[0], m), m),
             nk_mulmod(_red(u[1], m), _red(v[1], m), m), m),
        nk_mulmod(_red(u[2], m), _red(v[2], m), m), m)


def det3(u, v, w, p):
    cdef u64 m, a0, a1, a2, b0, b1, b2, c0, c1, c2, t
    if not p:
        return (
            u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0])
        )
    if not _word(p):
        return _py.det3(u, v, w, p)
    m = p
    a0 = _red(u[0], m); a1 = _red(u[1], m); a2 = _red(u[2], m)
    b0 = _red(v[0], m); b1 = _red(v[1], m); b2 = _red(v[2], m)
    c0 = _red(w[0], m); c1 = _red(w[1], m); c2 = _red(w[2], m)
    t = nk_mulmod(a0, _sub(nk_mulmod(b1, c2, m), nk_mulmod(b2, c1, m), m), m)
    t = _sub(t, nk_mulmod(a1, _sub(nk_mulmod(b0, c2, m), nk_mulmod(b2, c0, m), m), m), m)
    return _add(t, nk_mulmod(a2, _sub(nk_mulmod(b0, c1, m), nk_mulmod(b1, c0, m), m), m), m)


def minors_vanish(u, v, p):
    cdef u64 m, a0, a1, a2, b0, b1, b2
    if not p or not _word(p):
        return _py.minors_vanish(u, v, p)
    m = p
    a0 = _red(u[0], m); a1 = _red(u[1], m); a2 = _red(u[2], m)
    b0 = _red(v[0], m); b1 = _red(v[1], m); b2 = _red(v[2], m)
    return (
        nk_mulmod(a0, b1, m) == nk_mulmod(a1, b0, m)
        and nk_mulmod(a0, b2, m) == nk_mulmod(a2, b0, m)
        and nk_mulmod(a1, b2, m) == nk_mulmod(a2, b1, m)
    )


def veronese(v, p):
    return _py.veronese(v, p)


cdef u64 _det_words(u64 *a, int n, u64 p) nogil:
    # in-place Gaussian elimination on a row-major n x n array
    cdef int i, j, k, piv
    cdef u64 result = 1, pk, inv, f, tmp
    cdef bint neg = 0
    for k in range(n):
        piv = k
        while piv < n and a[piv * n + k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            for j in range(n):
                tmp = a[k * n + j]
                a[k * n + j] = a[piv * n + j]
                a[piv * n + j] = tmp
            neg = not neg
        pk = a[k * n + k]
        result = nk_mulmod(result, pk, p)
        inv = nk_invmod(pk, p)
        for i in range(k + 1, n):
            f = nk_mulmod(a[i * n + k], inv, p)
            if f:
                for j in range(k + 1, n):
                    a[i * n + j] = _sub(a[i * n + j], nk_mulmod(f, a[k * n + j], p), p)
    if neg and result:
        result = p - result
    return result


def det(rows, p):
    cdef u64 m
    cdef u64 a[64]
    cdef int n = len(rows), i, j
    if not p or not _word(p) or n > 8:
        return _py.det(rows, p)
    m = p
    for i in range(n):
        r = rows[i]
        for j in range(n):
            a[i * n + j] = _red(r[j], m)
    return _det_words(a, n, m)


def det6_veronese(vs, p):
    cdef u64 m, x, y, z
    cdef u64 a[36]
    cdef int i
    if not p or not _word(p):
        return _py.det6_veronese(vs, p)
    m = p
    for i in range(6):
        v = vs[i]
        x = _red(v[0], m); y = _red(v[1], m); z = _red(v[2], m)
        a[6 * i + 0] = nk_mulmod(x, x, m)
        a[6 * i + 1] = nk_mulmod(y, y, m)
        a[6 * i + 2] = nk_mulmod(z, z, m)
        a[6 * i + 3] = nk_mulmod(x, y, m)
        a[6 * i + 4] = nk_mulmod(x, z, m)
        a[6 * i + 5] = nk_mulmod(y, z, m)
    return _det_words(a, 6, m)


def kernel5(rows, p):
    cdef u64 m, d
    cdef u64 a[25]
    cdef int i, j, jj, c
    if not p or not _word(p):
        return _py.kernel5(rows, p)
    m = p
    out = []
    for j in range(6):
        for i in range(5):
            r = rows[i]
            c = 0
            for jj in range(6):
                if jj != j:
                    a[i * 5 + c] = _red(r[jj], m)
                    c += 1
        d = _det_words(a, 5, m)
        if j % 2 and d:
            d = m - d
        out.append(d)
    return tuple(out)


def quad(mat, v, p):
    return _py.quad(mat, v, p)


def matvec(mat, v, p):
    return _py.matvec(mat, v, p)
