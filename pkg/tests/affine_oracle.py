"""Affine-plane oracle: line equations through two points and 2x2 solves.

Deliberately shares no code with the homogeneous kernel.
"""
from fractions import Fraction as F


def line(p, q):
    """Coefficients (a, b, c) of a*x + b*y = c through affine points p, q."""
    (x1, y1), (x2, y2) = p, q
    a = y2 - y1
    b = x1 - x2
    return a, b, a * x1 + b * y1


def solve(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    d = a1 * b2 - a2 * b1
    if d == 0:
        raise ZeroDivisionError("parallel or coincident lines")
    return (F(c1 * b2 - c2 * b1, 1) / d, F(a1 * c2 - a2 * c1, 1) / d)


def cross(p, q, r, s):
    return solve(line(p, q), line(r, s))


def on_line(p, q, r):
    a, b, c = line(p, q)
    return a * r[0] + b * r[1] == c


def k1(aprime=(F(4), F(4)), q=(F(2), F(3)), pairing="literal"):
    A, B, C, P = (F(0), F(0)), (F(4), F(0)), (F(0), F(4)), (F(1), F(1))
    A1, B1, C1 = (F(3), F(3)), (F(5, 2), F(1, 2)), (F(1, 2), F(5, 2))
    o = {"A": A, "B": B, "C": C, "P": P, "A1": A1, "B1": B1, "C1": C1}
    o["A_P"] = cross(A, P, B, C)
    o["B_P"] = cross(B, P, A, C)
    o["C_P"] = cross(C, P, A, B)
    o["W_C"] = cross(A1, o["B_P"], B1, o["A_P"])
    o["W_A"] = cross(B1, o["C_P"], C1, o["B_P"])
    o["W_B"] = cross(C1, o["A_P"], A1, o["C_P"])
    o["W"] = cross(A, o["W_A"], B, o["W_B"])
    o["J_C"] = cross(A, B1, B, A1)
    o["J_A"] = cross(B, C1, C, B1)
    o["J_B"] = cross(C, A1, A, C1)
    o["T_A"] = cross(o["W"], A1, B, C)
    o["T_B"] = cross(o["W"], B1, A, C)
    o["T_C"] = cross(o["W"], C1, A, B)
    o["T"] = cross(A, o["T_A"], B, o["T_B"])
    o["G_A"] = cross(o["W_A"], P, B, C)
    o["G_B"] = cross(o["W_B"], P, A, C)
    o["G_C"] = cross(o["W_C"], P, A, B)
    o["G"] = cross(A, o["G_A"], B, o["G_B"])
    o["R"] = cross(o["W_A"], o["A_P"], o["W_B"], o["B_P"])
    if pairing == "literal":
        o["WP_B"] = cross(A1, o["B_P"], B1, aprime)
        o["WP_C"] = cross(A1, o["C_P"], C1, aprime)
    else:
        o["WP_B"] = cross(A1, o["C_P"], C1, aprime)
        o["WP_C"] = cross(A1, o["B_P"], B1, aprime)
    o["N"] = cross(B, o["WP_B"], C, o["WP_C"])
    o["A_Q"] = cross(q, A1, B, C)
    o["B_Q"] = cross(q, B1, A, C)
    o["C_Q"] = cross(q, C1, A, B)
    o["V_C"] = cross(o["A_Q"], B1, o["B_Q"], A1)
    o["V_A"] = cross(o["B_Q"], C1, o["C_Q"], B1)
    o["V_B"] = cross(o["C_Q"], A1, o["A_Q"], C1)
    o["V"] = cross(A, o["V_A"], B, o["V_B"])
    return o


def lemma2(A, B, C, P, Q):
    o = {
        "A_B": cross(A, P, B, Q),
        "B_A": cross(A, Q, B, P),
        "B_C": cross(B, P, C, Q),
        "C_B": cross(B, Q, C, P),
        "A_C": cross(A, P, C, Q),
        "C_A": cross(A, Q, C, P),
    }
    o["X"] = cross(o["A_B"], o["B_A"], o["A_C"], o["C_A"])
    return o
