"""Seed mutation: (B, C, G) triples tracked along mutation words.

C- and G-matrices are stored as row tuples; the i-th c- or g-vector is the
i-th column.  Mutation uses the tropical sign read off the mutating C
column, so sign coherence is load-bearing: a mixed-sign column aborts with
SignCoherenceViolation, which signals a bug rather than a reachable state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exchange import ExchangeMatrix, Matrix, mutate_matrix


class SignCoherenceViolation(RuntimeError):
    """A c-vector with strictly mixed signs was encountered."""


# -- small integer matrix helpers -------------------------------------------

def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def column(m: Matrix, i: int) -> tuple[int, ...]:
    """i-based (1..n) column extraction."""
    return tuple(row[i - 1] for row in m)


def matmul(x, y):
    yt = list(zip(*y))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in yt) for row in x
    )


def det(m: Matrix) -> int:
    """Integer determinant by fraction-free Gaussian elimination."""
    n = len(m)
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(m: Matrix) -> Matrix:
    n = len(m)
    if n == 1:
        return ((1,),)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j)
                for r in range(n) if r != i
            )
            row.append((-1) ** (i + j) * det(minor))
        cof.append(tuple(row))
    return transpose(tuple(cof))


def unimodular_inverse(m: Matrix) -> Matrix:
    """Exact inverse of an integer matrix with det = +-1."""
    d = det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det {d})")
    adj = adjugate(m)
    if d == 1:
        return adj
    return tuple(tuple(-x for x in row) for row in adj)


# -- seeds -------------------------------------------------------------------

@dataclass(frozen=True)
class Seed:
    b: ExchangeMatrix
    c: Matrix
    g: Matrix
    word: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.b.n

    def c_vector(self, i: int) -> tuple[int, ...]:
        return column(self.c, i)

    def g_vector(self, i: int) -> tuple[int, ...]:
        return column(self.g, i)

    def mutate(self, k: int) -> "Seed":
        return mutate_seed(self, k)

    def to_json(self) -> dict:
        return {
            "b": [list(r) for r in self.b.entries],
            "c": [list(r) for r in self.c],
            "g": [list(r) for r in self.g],
            "word": list(self.word),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Seed":
        return cls(
            ExchangeMatrix(doc["b"]),
            tuple(tuple(int(x) for x in r) for r in doc["c"]),
            tuple(tuple(int(x) for x in r) for r in doc["g"]),
            tuple(int(k) for k in doc["word"]),
        )


def initial_seed(B: ExchangeMatrix) -> Seed:
    return Seed(B, identity(B.n), identity(B.n), ())


def tropical_sign(s: Seed, k: int) -> int:
    """+1 or -1: the uniform sign of the k-th c-vector column."""
    col = s.c_vector(k)
    has_pos = any(x > 0 for x in col)
    has_neg = any(x < 0 for x in col)
    if has_pos and has_neg:
        raise SignCoherenceViolation(
            f"mixed signs in c-vector {k} at word {s.word}: {col}"
        )
    if not has_pos and not has_neg:
        raise SignCoherenceViolation(f"zero c-vector {k} at word {s.word}")
    return 1 if has_pos else -1


def mutate_seed(s: Seed, k: int) -> Seed:
    """Mutation in direction k (1-based) of the full (B, C, G) triple."""
    n = s.n
    if not 1 <= k <= n:
        raise IndexError(f"mutation direction {k} out of range 1..{n}")
    eps = tropical_sign(s, k)
    b = s.b.entries
    kk = k - 1
    ck = column(s.c, k)
    new_c_cols = []
    for i in range(n):
        if i == kk:
            new_c_cols.append(tuple(-x for x in ck))
        else:
            f = max(eps * b[kk][i], 0)
            ci = tuple(row[i] for row in s.c)
            new_c_cols.append(tuple(x + f * y for x, y in zip(ci, ck)))
    new_c = transpose(tuple(new_c_cols))

    gk = column(s.g, k)
    acc = [-x for x in gk]
    for j in range(n):
        f = max(-eps * b[j][kk], 0)
        if f:
            gj = tuple(row[j] for row in s.g)
            acc = [x + f * y for x, y in zip(acc, gj)]
    new_g_cols = [
        tuple(acc) if i == kk else tuple(row[i] for row in s.g)
        for i in range(n)
    ]
    new_g = transpose(tuple(new_g_cols))

    return Seed(mutate_matrix(s.b, k), new_c, new_g, s.word + (k,))


def apply_word(s: Seed, word) -> Seed:
    for k in word:
        s = mutate_seed(s, k)
    return s


# -- G-cones -----------------------------------------------------------------

@dataclass(frozen=True)
class GCone:
    """Simplicial cone spanned by the columns of a unimodular G-matrix."""

    rays: tuple[tuple[int, ...], ...]
    normals: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return cone_key(self.rays)


def cone_key(rays) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(r) for r in rays))


def g_cone(s: Seed) -> GCone:
    rays = tuple(s.g_vector(i) for i in range(1, s.n + 1))
    normals = tuple(s.c_vector(i) for i in range(1, s.n + 1))
    return GCone(rays, normals)


# -- verification ------------------------------------------------------------

def verify_seed(s: Seed) -> dict[str, bool]:
    """Per-check report: determinants, sign coherence, duality, D-pairing."""
    n = s.n
    d = s.b.symmetrizer
    report = {}
    report["det_c"] = det(s.c) in (1, -1)
    report["det_g"] = det(s.g) in (1, -1)

    coherent = True
    for i in range(1, n + 1):
        col = s.c_vector(i)
        if (any(x > 0 for x in col) and any(x < 0 for x in col)) or not any(col):
            coherent = False
    report["sign_coherence"] = coherent

    # G = D^{-1} (C^T)^{-1} D, evaluated with exact rationals.
    dual_ok = report["det_c"]
    if dual_ok:
        ct_inv = unimodular_inverse(transpose(s.c))
        expected = tuple(
            tuple(Fraction(ct_inv[i][j] * d[j], d[i]) for j in range(n))
            for i in range(n)
        )
        dual_ok = all(
            expected[i][j] == s.g[i][j] for i in range(n) for j in range(n)
        )
    report["duality"] = dual_ok

    pairing_ok = True
    for i in range(1, n + 1):
        ci = s.c_vector(i)
        for j in range(1, n + 1):
            gj = s.g_vector(j)
            val = sum(ci[r] * d[r] * gj[r] for r in range(n))
            want = d[i - 1] if i == j else 0
            if val != want:
                pairing_ok = False
    report["d_pairing"] = pairing_ok
    return report
