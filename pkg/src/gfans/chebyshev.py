"""Chebyshev recursion of the second kind, specialized at kappa/2.

With kappa^2 = ab, the values U_n live alternately in Z and Z*kappa, so a
value is a pair (even_part, odd_part) with even_part + odd_part*kappa and at
most one part nonzero.  Everything downstream (band ratios, rank-2 closed
forms) stays in exact integers because every expression pairs an odd-index U
with a factor of nu or 1/nu (nu*kappa = b, kappa/nu = a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ChebyshevValue:
    even_part: int
    odd_part: int
    index: int
    ab: int

    def __post_init__(self):
        if self.even_part and self.odd_part:
            raise ValueError("U_n has a pure integer or pure kappa part")

    def as_int(self) -> int:
        """The value as a plain integer; requires an even-type value."""
        if self.odd_part:
            raise ValueError(f"U_{self.index} is not an integer")
        return self.even_part

    def times_nu(self, a: int, b: int) -> int:
        """nu * U_n as an integer; requires an odd-type value."""
        if self.even_part:
            raise ValueError(f"nu*U_{self.index} is not an integer")
        return self.odd_part * b

    def times_inv_nu(self, a: int, b: int) -> int:
        """U_n / nu as an integer; requires an odd-type value."""
        if self.even_part:
            raise ValueError(f"U_{self.index}/nu is not an integer")
        return self.odd_part * a


def chebyshev_u(n: int, ab: int) -> ChebyshevValue:
    """U_n at t = kappa/2 for kappa = sqrt(ab); defined for n >= -2."""
    if n < -2:
        raise ValueError("index must be >= -2")
    if ab < 4:
        raise ValueError("requires ab >= 4")
    prev2 = (-1, 0)  # U_{-2}
    prev1 = (0, 0)   # U_{-1}
    if n == -2:
        cur = prev2
    elif n == -1:
        cur = prev1
    else:
        cur = prev1
        for _ in range(n + 1):
            cur = (ab * prev1[1] - prev2[0], prev1[0] - prev2[1])
            prev2, prev1 = prev1, cur
    return ChebyshevValue(cur[0], cur[1], n, ab)


def nu_ratio(p: int, q: int, a: int, b: int) -> Fraction:
    """nu * U_p / U_q as an exact rational (p, q of opposite parity).

    Requires U_q != 0, i.e. q >= 0 or q = -2.
    """
    up = chebyshev_u(p, a * b)
    uq = chebyshev_u(q, a * b)
    if uq.odd_part:  # U_q = w*kappa, so nu*U_p/U_q = U_p / (a*w)
        return Fraction(up.as_int(), a * uq.odd_part)
    # U_q integer, so U_p = w*kappa and nu*U_p/U_q = w*b / U_q
    return Fraction(up.odd_part * b, uq.as_int())
