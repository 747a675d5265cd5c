"""Exact integer matrix algebra.

Matrices are plain lists of rows holding Python ints, so nothing overflows.
Rational results use :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

IntMatrix = list[list[int]]


class SingularMatrix(ValueError):
    pass


class NotCoprime(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    M = [[int(x) for x in r] for r in rows]
    if not M or not M[0]:
        raise ValueError("matrix must have at least one row and column")
    n = len(M[0])
    if any(len(r) != n for r in M):
        raise ValueError("ragged matrix")
    return M


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(X: Sequence[Sequence[int]], Y: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*Y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in X]


def transpose(X: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(c) for c in zip(*X)]


def det(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def submatrix(M: Sequence[Sequence[int]], drop_row: int, drop_col: int) -> IntMatrix:
    return [[x for j, x in enumerate(r) if j != drop_col] for i, r in enumerate(M) if i != drop_row]


def minor_det(M: Sequence[Sequence[int]], drop_row: int, drop_col: int) -> int:
    """Determinant with one row and column removed; the empty minor is 1."""
    n = len(M)
    if not (0 <= drop_row < n and 0 <= drop_col < len(M[0])):
        raise IndexError("minor index out of range")
    return det(submatrix(M, drop_row, drop_col))


def adjugate(M: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(M)
    if n == 1:
        return [[1]]
    return [[(-1) ** (i + j) * minor_det(M, j, i) for j in range(n)] for i in range(n)]


def inverse_unimodular(M: Sequence[Sequence[int]]) -> IntMatrix:
    d = det(M)
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    return [[d * x for x in r] for r in adjugate(M)]


@dataclass(frozen=True)
class RationalMatrix:
    """Integer numerator with a positive common denominator."""

    num: tuple[tuple[int, ...], ...]
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")

    def reduced(self) -> "RationalMatrix":
        g = self.den
        for r in self.num:
            for x in r:
                g = gcd(g, x)
        return RationalMatrix(tuple(tuple(x // g for x in r) for r in self.num), self.den // g)

    def is_integral(self) -> bool:
        return all(x % self.den == 0 for r in self.num for x in r)

    def to_fractions(self) -> list[list[Fraction]]:
        return [[Fraction(x, self.den) for x in r] for r in self.num]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        a, b = self.reduced(), other.reduced()
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, r.den))


def inverse_rational(M: Sequence[Sequence[int]]) -> RationalMatrix:
    d = det(M)
    if d == 0:
        raise SingularMatrix("matrix is singular")
    adj = adjugate(M)
    if d < 0:
        adj = [[-x for x in r] for r in adj]
    return RationalMatrix(tuple(tuple(r) for r in adj), abs(d))


def solve_rational(M: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve M x = b over Q by Gaussian elimination on fractions."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(M, b)]
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        A[k], A[p] = A[p], A[k]
        for i in range(n):
            if i != k and A[i][k] != 0:
                f = A[i][k] / A[k][k]
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return [A[i][n] / A[i][i] for i in range(n)]


def _echelon(M: Sequence[Sequence[int]], track: bool):
    """Row-reduce an m x n matrix of rank n to upper HNF.

    Returns (H, T) with H = T*M, H of shape m x n whose first n rows are the
    HNF and whose remaining rows are zero.
    """
    H = [list(r) for r in M]
    m, n = len(H), len(H[0])
    T = identity(m) if track else None

    def sub(i, k, q):
        # row_i -= q * row_k
        H[i] = [a - q * b for a, b in zip(H[i], H[k])]
        if track:
            T[i] = [a - q * b for a, b in zip(T[i], T[k])]

    def swap(i, k):
        H[i], H[k] = H[k], H[i]
        if track:
            T[i], T[k] = T[k], T[i]

    for j in range(n):
        if j >= m:
            raise SingularMatrix("rank deficient")
        while True:
            nz = [i for i in range(j, m) if H[i][j] != 0]
            if not nz:
                raise SingularMatrix("rank deficient")
            piv = min(nz, key=lambda i: abs(H[i][j]))
            if piv != j:
                swap(j, piv)
            done = True
            for i in range(j + 1, m):
                if H[i][j]:
                    sub(i, j, H[i][j] // H[j][j])
                    if H[i][j]:
                        done = False
            if done:
                break
        if H[j][j] < 0:
            H[j] = [-x for x in H[j]]
            if track:
                T[j] = [-x for x in T[j]]
        for i in range(j):
            q = H[i][j] // H[j][j]
            if q:
                sub(i, j, q)
    return H, T


def hnf_upper(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Upper HNF of a nonsingular square matrix: H = T*M with T unimodular."""
    M = as_matrix(M)
    if len(M) != len(M[0]):
        raise ValueError("hnf_upper expects a square matrix")
    if det(M) == 0:
        raise SingularMatrix("matrix is singular")
    return _echelon(M, True)


def lattice_hnf(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """HNF basis of the full-rank lattice spanned by the given rows."""
    M = as_matrix(rows)
    n = len(M[0])
    H, _ = _echelon(M, False)
    return [r for r in H[:n]]


def is_hnf(B: Sequence[Sequence[int]]) -> bool:
    n = len(B)
    for j in range(n):
        if B[j][j] <= 0:
            return False
        for i in range(n):
            if i > j and B[i][j] != 0:
                return False
            if i < j and not (0 <= B[i][j] < B[j][j]):
                return False
    return True


def snf_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... of a nonsingular square matrix."""
    A = as_matrix(M)
    n = len(A)
    if n != len(A[0]) or det(A) == 0:
        raise SingularMatrix("snf_diagonal expects a nonsingular square matrix")
    for t in range(n):
        while True:
            # move the smallest nonzero entry of the trailing block to (t, t)
            _, pi, pj = min((abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, n) if A[i][j])
            A[t], A[pi] = A[pi], A[t]
            for r in A:
                r[t], r[pj] = r[pj], r[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        A[t][t] = abs(A[t][t])
    return [A[i][i] for i in range(n)]


def _bezout(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def gcd_completion(weights: Sequence[int]) -> list[int]:
    """Integers u with sum(w*u) = 1.

    Left fold: the running combination g = gcd(w_1..w_k) is merged with the
    next weight using the Bezout pair whose first coefficient is the least
    non-negative choice.
    """
    w = [int(x) for x in weights]
    total = 0
    for x in w:
        total = gcd(total, x)
    if total != 1:
        raise NotCoprime(f"weights {w} have gcd {total}")
    g = abs(w[0])
    u = [(w[0] > 0) - (w[0] < 0)]
    for wk in w[1:]:
        if wk == 0:
            x, y = 1, 0
        elif g == 0:
            x, y = 0, (1 if wk > 0 else -1)
        else:
            g2 = gcd(g, wk)
            mod = abs(wk) // g2
            x = pow(g // g2, -1, mod) if mod > 1 else 0
            y = (g2 - g * x) // wk
        u = [x * ui for ui in u] + [y]
        g = gcd(g, wk)
    return u


def complete_to_unimodular(v: Sequence[int]) -> IntMatrix:
    """Determinant-one integer matrix whose first column is the primitive vector v."""
    v = [int(x) for x in v]
    n = len(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g != 1:
        raise NotCoprime(f"vector {v} is not primitive")
    if n == 1:
        return [[v[0]]] if v[0] == 1 else _raise_sign()
    # T v = e1, so v is the first column of T^{-1}
    _, T = _echelon([[x] for x in v], True)
    P = inverse_unimodular(T)
    if det(P) < 0:
        for r in P:
            r[-1] = -r[-1]
    return P


def _raise_sign():
    raise NotCoprime("a 1x1 unimodular completion needs v = (1)")
