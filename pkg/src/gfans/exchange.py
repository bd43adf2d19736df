"""Exact integer exchange-matrix arithmetic.

Matrix mutation, skew-symmetrizability, the cyclic presentation of rank-3
matrices, Markov constants, and cluster-cyclicity.  All entries are Python
ints, so they may grow without bound under mutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd


class NotSkewSymmetrizable(ValueError):
    """No positive integer diagonal D with D B skew-symmetric exists."""


class NotCyclic(ValueError):
    """Operation requires a cyclic rank-3 matrix."""


class NotTotallyInfinite(ValueError):
    """Operation requires |b_ij * b_ji| >= 4 for every pair i != j."""


Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("entries must form a nonempty square matrix")
    return m


def skew_symmetrizer(entries) -> tuple[int, ...]:
    """Positive integer diagonal (d_1..d_n) with d_i b_ij = -d_j b_ji.

    The result has gcd 1 and is componentwise minimal on every
    sign-connected component.  Raises NotSkewSymmetrizable when no positive
    solution exists (wrong sign pattern, mismatched zeros, or conflicting
    cycle products).
    """
    b = _as_matrix(entries)
    n = len(b)
    for i in range(n):
        if b[i][i] != 0:
            raise NotSkewSymmetrizable(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            if (b[i][j] == 0) != (b[j][i] == 0):
                raise NotSkewSymmetrizable(f"mismatched zero at ({i},{j})")
            if b[i][j] * b[j][i] > 0:
                raise NotSkewSymmetrizable(f"b_ij*b_ji > 0 at ({i},{j})")

    # Propagate the ratios d_j/d_i = -b_ij/b_ji over each component.
    ratio: list[Fraction | None] = [None] * n
    d = [0] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        component = [root]
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if b[i][j] == 0 or j == i:
                    continue
                r = ratio[i] * Fraction(-b[i][j], b[j][i])
                if ratio[j] is None:
                    ratio[j] = r
                    component.append(j)
                    stack.append(j)
                elif ratio[j] != r:
                    raise NotSkewSymmetrizable("conflicting cycle products")
        denom_lcm = 1
        for i in component:
            q = ratio[i].denominator
            denom_lcm = denom_lcm * q // gcd(denom_lcm, q)
        vals = [int(ratio[i] * denom_lcm) for i in component]
        g = 0
        for v in vals:
            g = gcd(g, v)
        for i, v in zip(component, vals):
            d[i] = v // g
    return tuple(d)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Skew-symmetrizable integer matrix with a cached minimal symmetrizer."""

    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_matrix(self.entries))
        self.symmetrizer  # validates on construction

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        return skew_symmetrizer(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """1-based entry access: B[i, j]."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def mutate(self, k: int) -> "ExchangeMatrix":
        return mutate_matrix(self, k)

    def to_json(self) -> dict:
        return {"n": self.n, "b": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, doc: dict) -> "ExchangeMatrix":
        b = doc["b"]
        if "n" in doc and doc["n"] != len(b):
            raise ValueError("declared rank does not match matrix size")
        return cls(b)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction k (1-based)."""
    n = B.n
    if not 1 <= k <= n:
        raise IndexError(f"mutation direction {k} out of range 1..{n}")
    kk = k - 1
    b = B.entries
    new = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == kk or j == kk:
                row.append(-b[i][j])
            else:
                row.append(
                    b[i][j]
                    + b[i][kk] * max(b[kk][j], 0)
                    + max(-b[i][kk], 0) * b[kk][j]
                )
        new.append(row)
    return ExchangeMatrix(tuple(tuple(r) for r in new))


def apply_matrix_word(B: ExchangeMatrix, word) -> ExchangeMatrix:
    for k in word:
        B = mutate_matrix(B, k)
    return B


def is_totally_infinite(B: ExchangeMatrix) -> bool:
    b = B.entries
    n = B.n
    return all(
        abs(b[i][j] * b[j][i]) >= 4
        for i in range(n)
        for j in range(i + 1, n)
    )


@dataclass(frozen=True)
class CyclicPresentation:
    """The six off-diagonal parameters (p_i, p'_i) of a rank-3 matrix."""

    p: tuple[int, int, int]
    p_prime: tuple[int, int, int]

    @property
    def cyclic(self) -> bool:
        return all(x > 0 for x in self.p) or all(x < 0 for x in self.p)

    def to_matrix(self) -> ExchangeMatrix:
        p1, p2, p3 = self.p
        q1, q2, q3 = self.p_prime
        return ExchangeMatrix(
            ((0, -q3, p2), (p3, 0, -q1), (-q2, p1, 0))
        )


def cyclic_presentation(B: ExchangeMatrix) -> CyclicPresentation:
    """Read (p_1,p_2,p_3), (p'_1,p'_2,p'_3) off a rank-3 matrix."""
    if B.n != 3:
        raise ValueError("cyclic presentation requires rank 3")
    b = B.entries
    p = (b[2][1], b[0][2], b[1][0])
    p_prime = (-b[1][2], -b[2][0], -b[0][1])
    return CyclicPresentation(p, p_prime)


def swap_indices_12(B: ExchangeMatrix) -> ExchangeMatrix:
    """Exchange the roles of indices 1 and 2 (conjugation by the swap)."""
    perm = [1, 0] + list(range(2, B.n))
    b = B.entries
    return ExchangeMatrix(
        tuple(tuple(b[perm[i]][perm[j]] for j in range(B.n)) for i in range(B.n))
    )


def markov_constant(B: ExchangeMatrix) -> int:
    """C(B) = p1 p'1 + p2 p'2 + p3 p'3 - |p1 p2 p3| for cyclic rank-3 B."""
    pres = cyclic_presentation(B)
    if not pres.cyclic:
        raise NotCyclic("Markov constant is defined for cyclic matrices only")
    p, q = pres.p, pres.p_prime
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] - abs(p[0] * p[1] * p[2])


def is_cluster_cyclic(B: ExchangeMatrix) -> bool:
    """True iff every mutation-equivalent matrix is cyclic.

    Characterization: B cyclic, totally-infinite, and C(B) <= 4.
    """
    c = markov_constant(B)  # raises NotCyclic for acyclic input
    return is_totally_infinite(B) and c <= 4
