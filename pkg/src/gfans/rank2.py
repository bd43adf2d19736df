"""Closed forms for rank-2 cluster patterns of infinite type.

Explicit C- and G-matrices indexed by the integer-labeled tree (vertex 0
initial, edge labels alternating 1, 2 rightward starting with 1), the
forward/backward g-vector sequences, and their limit directions in
Q(sqrt(ab(ab-4))).
"""

from __future__ import annotations

from fractions import Fraction

from .chebyshev import chebyshev_u
from .quadratic import QuadraticNumber

Mat2 = tuple[tuple[int, int], tuple[int, int]]


def _check_ab(a: int, b: int):
    if a < 1 or b < 1 or a * b < 4:
        raise ValueError("requires a, b >= 1 with ab >= 4")


def rank2_matrices(t: int, a: int, b: int) -> tuple[Mat2, Mat2]:
    """(C_t, G_t) for the initial matrix [[0,-b],[a,0]], ab >= 4.

    det C_t = (-1)^t; the matrices agree with direct mutation along the
    alternating word toward t.
    """
    _check_ab(a, b)
    ab = a * b

    def u(n):
        return chebyshev_u(n, ab).as_int()

    def nu_u(n):
        return chebyshev_u(n, ab).times_nu(a, b)

    def inv_nu_u(n):
        return chebyshev_u(n, ab).times_inv_nu(a, b)

    if t == 1:
        return ((-1, 0), (0, 1)), ((-1, 0), (0, 1))
    if t >= 2 and t % 2 == 0:
        n = t // 2
        c = ((-u(2 * n - 2), nu_u(2 * n - 3)),
             (-inv_nu_u(2 * n - 3), u(2 * n - 4)))
        g = ((u(2 * n - 4), nu_u(2 * n - 3)),
             (-inv_nu_u(2 * n - 3), -u(2 * n - 2)))
    elif t >= 3:
        n = (t - 1) // 2
        c = ((u(2 * n - 2), -nu_u(2 * n - 1)),
             (inv_nu_u(2 * n - 3), -u(2 * n - 2)))
        g = ((u(2 * n - 2), nu_u(2 * n - 3)),
             (-inv_nu_u(2 * n - 1), -u(2 * n - 2)))
    elif t <= 0 and t % 2 == 0:
        n = -t // 2
        c = ((-u(2 * n - 2), nu_u(2 * n - 1)),
             (-inv_nu_u(2 * n - 1), u(2 * n)))
        g = ((u(2 * n), nu_u(2 * n - 1)),
             (-inv_nu_u(2 * n - 1), -u(2 * n - 2)))
    else:
        n = (-t - 1) // 2
        c = ((u(2 * n), -nu_u(2 * n - 1)),
             (inv_nu_u(2 * n + 1), -u(2 * n)))
        g = ((u(2 * n), nu_u(2 * n + 1)),
             (-inv_nu_u(2 * n - 1), -u(2 * n)))
    return c, g


def g_sequence(direction: str, m: int, a: int, b: int) -> tuple[int, int]:
    """m-th g-vector along the forward or backward alternating mutations.

    Forward: g_1 = (-1,0), g_2 = (0,-1), g_{m+2} = -g_m + a g_{m+1} (m odd)
    or -g_m + b g_{m+1} (m even).  Backward: g'_1 = (b,-1),
    g'_2 = (ab-1,-a) with the roles of a and b exchanged in the recursion.
    """
    _check_ab(a, b)
    if m < 1:
        raise ValueError("m must be >= 1")
    if direction == "forward":
        prev, cur = (-1, 0), (0, -1)
        coeff = {1: a, 0: b}
    elif direction == "backward":
        prev, cur = (b, -1), (a * b - 1, -a)
        coeff = {1: b, 0: a}
    else:
        raise ValueError("direction must be 'forward' or 'backward'")
    if m == 1:
        return prev
    for i in range(1, m - 1):
        f = coeff[i % 2]
        prev, cur = cur, (-prev[0] + f * cur[0], -prev[1] + f * cur[1])
    return cur


def limit_vectors(a: int, b: int):
    """(v, v'): the limit directions of the normalized g-vector sequences.

    v = (1, -(ab + sqrt(ab(ab-4)))/2b) and v' with the minus branch;
    they coincide exactly when ab = 4.
    """
    _check_ab(a, b)
    ab = a * b
    delta = ab * (ab - 4)
    one = QuadraticNumber.rational(1)
    v = (one, QuadraticNumber(Fraction(-ab, 2 * b), Fraction(-1, 2 * b), delta))
    vp = (one, QuadraticNumber(Fraction(-ab, 2 * b), Fraction(1, 2 * b), delta))
    return v, vp
