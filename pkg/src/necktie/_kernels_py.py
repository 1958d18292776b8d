"""Pure-Python exact kernels.

Every function takes integer vectors and a modulus ``p``.  ``p == 0`` means
exact integer arithmetic (the rational model with denominators cleared);
otherwise all results are reduced into ``[0, p)``.
"""
from math import gcd

BACKEND = "python"


def _primitive(a, b, c):
    g = gcd(gcd(a, b), c)
    if g > 1:
        return (a // g, b // g, c // g)
    return (a, b, c)


def cross(u, v, p):
    """Cross product of two triples; integer results are divided by their content."""
    a0, a1, a2 = u
    b0, b1, b2 = v
    x = a1 * b2 - a2 * b1
    y = a2 * b0 - a0 * b2
    z = a0 * b1 - a1 * b0
    if p:
        return (x % p, y % p, z % p)
    return _primitive(x, y, z)


def dot(u, v, p):
    s = u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
    return s % p if p else s


def det3(u, v, w, p):
    d = (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )
    return d % p if p else d


def minors_vanish(u, v, p):
    """True iff the triples are proportional (all 2x2 minors zero)."""
    if p:
        return (
            (u[0] * v[1] - u[1] * v[0]) % p == 0
            and (u[0] * v[2] - u[2] * v[0]) % p == 0
            and (u[1] * v[2] - u[2] * v[1]) % p == 0
        )
    return (
        u[0] * v[1] == u[1] * v[0]
        and u[0] * v[2] == u[2] * v[0]
        and u[1] * v[2] == u[2] * v[1]
    )


def veronese(v, p):
    x, y, z = v
    row = (x * x, y * y, z * z, x * y, x * z, y * z)
    if p:
        return tuple(e % p for e in row)
    return row


def det(rows, p):
    """Determinant of a square matrix given as a sequence of rows.

    Fraction-free Bareiss elimination over the integers, Gaussian elimination
    with modular inverses over GF(p).
    """
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    if p:
        result = 1
        for k in range(n):
            piv = k
            while piv < n and m[piv][k] % p == 0:
                piv += 1
            if piv == n:
                return 0
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            rk = m[k]
            pk = rk[k] % p
            result = result * pk % p
            inv = pow(pk, -1, p)
            for i in range(k + 1, n):
                ri = m[i]
                f = ri[k] * inv % p
                if f:
                    for j in range(k + 1, n):
                        ri[j] = (ri[j] - f * rk[j]) % p
        return result * sign % p
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = k + 1
            while piv < n and m[piv][k] == 0:
                piv += 1
            if piv == n:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        rk = m[k]
        pk = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - rik * rk[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det6_veronese(vs, p):
    """6x6 determinant of the Veronese rows of six triples."""
    return det([veronese(v, p) for v in vs], p)


def kernel5(rows, p):
    """Signed 5x5 minors of a 5x6 matrix: a vector spanning its kernel when rank is 5."""
    out = []
    for j in range(6):
        sub = [r[:j] + r[j + 1:] for r in rows]
        d = det(sub, p)
        out.append((-d if j % 2 else d) % p if p else (-d if j % 2 else d))
    return tuple(out)


def quad(m, v, p):
    """v^T m v for a symmetric 3x3 matrix given as a flat 9-tuple."""
    x, y, z = v
    s = (
        m[0] * x * x + m[4] * y * y + m[8] * z * z
        + 2 * (m[1] * x * y + m[2] * x * z + m[5] * y * z)
    )
    return s % p if p else s


def matvec(m, v, p):
    x, y, z = v
    r = (
        m[0] * x + m[1] * y + m[2] * z,
        m[3] * x + m[4] * y + m[5] * z,
        m[6] * x + m[7] * y + m[8] * z,
    )
    if p:
        return (r[0] % p, r[1] % p, r[2] % p)
    return _primitive(*r)
