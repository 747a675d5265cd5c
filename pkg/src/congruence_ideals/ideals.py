"""Ideals of Z[alpha] stored as upper-triangular HNF bases.

Row i of B is the basis element beta_i written in (alpha^{d-1}, ..., 1).
Since HNF is unique, ideal equality is matrix equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator, Sequence

import numpy as np
import sympy

from .exact_linalg import (
    IntMatrix,
    SingularMatrix,
    adjugate,
    identity,
    is_hnf,
    lattice_hnf,
    matmul,
    snf_diagonal,
)
from .order_core import MonicPoly, companion_matrix, mul_elements


class NotAnIdeal(ValueError):
    pass


def is_ideal(F: MonicPoly, B: Sequence[Sequence[int]]) -> bool:
    """True iff B A B^{-1} is integral, i.e. the lattice is closed under alpha."""
    n = 1
    for i in range(len(B)):
        n *= B[i][i]
    if n == 0:
        raise SingularMatrix("basis matrix is singular")
    n = abs(n)
    BA = matmul(B, companion_matrix(F))
    return all(x % n == 0 for r in matmul(BA, adjugate(B)) for x in r)


def divisibility_holds(B: Sequence[Sequence[int]]) -> bool:
    """b_ii divides every entry to its right and every later pivot."""
    d = len(B)
    return all(B[i][j] % B[i][i] == 0 for i in range(d) for j in range(i, d))


@dataclass(frozen=True)
class IdealHNF:
    F: MonicPoly
    B: tuple[tuple[int, ...], ...]

    def __init__(self, F: MonicPoly, B: Sequence[Sequence[int]], check: bool = True):
        Bt = tuple(tuple(int(x) for x in r) for r in B)
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "B", Bt)
        if check:
            if len(Bt) != F.d or any(len(r) != F.d for r in Bt):
                raise NotAnIdeal("basis has the wrong shape")
            if not is_hnf(Bt):
                raise NotAnIdeal(f"{Bt} is not in normal form")
            if not is_ideal(F, Bt):
                raise NotAnIdeal(f"{Bt} is not closed under multiplication by alpha")
            if not divisibility_holds(Bt):
                raise NotAnIdeal(f"{Bt} violates the invariant-factor divisibility")

    @property
    def d(self) -> int:
        return self.F.d

    def matrix(self) -> IntMatrix:
        return [list(r) for r in self.B]

    def to_json(self) -> dict:
        return {"F": list(self.F.coeffs), "B": self.matrix()}

    @classmethod
    def from_json(cls, obj: dict) -> "IdealHNF":
        return cls(MonicPoly(obj["F"]), obj["B"])

    @classmethod
    def from_generators(cls, F: MonicPoly, rows: Sequence[Sequence[int]]) -> "IdealHNF":
        """Ideal generated as a lattice by the rows (which must already be alpha-stable)."""
        return cls(F, lattice_hnf(rows))

    def __repr__(self):
        return f"IdealHNF({self.F}, {[list(r) for r in self.B]})"


def unit_ideal(F: MonicPoly) -> IdealHNF:
    return IdealHNF(F, identity(F.d), check=False)


def invariant_factors(I: IdealHNF) -> tuple[int, ...]:
    """(N_1, N_2, ...) with N_d | ... | N_1, read off the diagonal."""
    return tuple(sorted((I.B[i][i] for i in range(I.d)), reverse=True))


def invariant_factors_snf(I: IdealHNF) -> tuple[int, ...]:
    return tuple(sorted(snf_diagonal(I.B), reverse=True))


def norm(I: IdealHNF) -> int:
    return prod(I.B[i][i] for i in range(I.d))


def multiply(I: IdealHNF, J: IdealHNF) -> IdealHNF:
    if I.F != J.F:
        raise ValueError("ideals live in different orders")
    F = I.F
    gens = [mul_elements(b, c, F) for b in I.B for c in J.B]
    return IdealHNF(F, lattice_hnf(gens), check=False)


def contains(I: IdealHNF, J: IdealHNF) -> bool:
    """True iff J is a subset of I, i.e. B_J B_I^{-1} is integral."""
    n = norm(I)
    return all(x % n == 0 for r in matmul(J.matrix(), adjugate(I.matrix())) for x in r)


def integer_content(I: IdealHNF) -> int:
    return I.B[0][0]


def divide_content(I: IdealHNF) -> IdealHNF:
    l = integer_content(I)
    return IdealHNF(I.F, [[x // l for x in r] for r in I.B], check=False)


def scale(I: IdealHNF, l: int) -> IdealHNF:
    return IdealHNF(I.F, [[x * l for x in r] for r in I.B], check=False)


def principal_ideal(F: MonicPoly, x: Sequence[int]) -> IdealHNF:
    """The ideal x Z[alpha]."""
    d = F.d
    rows = []
    for k in range(d):
        e = [0] * d
        e[k] = 1
        rows.append(mul_elements(x, e, F))
    return IdealHNF(F, lattice_hnf(rows), check=False)


def _diagonals(n: int, d: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        yield (n,)
        return
    for a in sympy.divisors(n):
        for rest in _diagonals(n // a, d - 1):
            yield (a,) + rest


def _in_lattice(v: list[int], rows: list[list[int]], start: int) -> bool:
    """Membership of v in the span of HNF rows whose pivots sit at start, start+1, ..."""
    v = list(v)
    if any(v[j] for j in range(start)):
        return False
    for k, r in enumerate(rows):
        j = start + k
        q, rem = divmod(v[j], r[j])
        if rem:
            return False
        if q:
            v = [a - q * b for a, b in zip(v, r)]
    return not any(v)


def _alpha_times(F: MonicPoly, row: Sequence[int]) -> list[int]:
    # row * A with A the companion matrix
    d = F.d
    return [-row[0] * F.coeffs[j] + (row[j + 1] if j + 1 < d else 0) for j in range(d)]


def _in_lattice_batch(V: np.ndarray, rows: list[list[int]], start: int) -> np.ndarray:
    """Vectorized _in_lattice over the rows of V (int64)."""
    V = V.copy()
    ok = ~np.any(V[:, :start] != 0, axis=1)
    for k, r in enumerate(rows):
        j = start + k
        q, rem = np.divmod(V[:, j], r[j])
        ok &= rem == 0
        V -= q[:, None] * np.asarray(r, dtype=np.int64)[None, :]
    return ok & ~np.any(V != 0, axis=1)


def _alpha_times_batch(F: MonicPoly, R: np.ndarray) -> np.ndarray:
    d = F.d
    out = -R[:, :1] * np.asarray(F.coeffs, dtype=np.int64)[None, :]
    out[:, : d - 1] += R[:, 1:]
    return out


def enumerate_ideals(F: MonicPoly, n: int) -> list[IdealHNF]:
    """All ideals of norm n, sorted by basis entries.

    Rows are chosen bottom-up; alpha * beta_i only involves rows i-1 and
    below, so the ideal test prunes as soon as row i-1 is placed.  The last
    entry of each new row is handled as a numpy batch.
    """
    d = F.d
    if n > 10**6 or max(map(abs, F.coeffs)) > 10**6:
        return _enumerate_ideals_slow(F, n)
    out = []
    for diag in _diagonals(n, d):
        if not all(diag[j] % diag[i] == 0 for i in range(d) for j in range(i, d)):
            # necessary by the divisibility property; tests confirm it against the brute filter
            continue
        rows: list[list[int]] = [None] * d  # type: ignore[list-item]

        def place(i: int):
            b = diag[i]
            if i == d - 1:
                rows[i] = [0] * i + [b]
                place(i - 1)
                return
            ranges = [range(0, diag[j], b) for j in range(i + 1, d - 1)]
            last = np.arange(0, diag[d - 1], b, dtype=np.int64)
            for tail in itertools.product(*ranges):
                R = np.zeros((len(last), d), dtype=np.int64)
                R[:, i] = b
                R[:, i + 1 : d - 1] = tail
                R[:, d - 1] = last
                below_fixed = rows[i + 1 :]
                # alpha * beta_{i+1} must lie in span(row_i, rows below)
                a_next = np.array(_alpha_times(F, rows[i + 1]), dtype=np.int64)
                ok = _batch_membership(a_next[None, :].repeat(len(last), 0), R, below_fixed, i)
                if i == 0:
                    ok &= _batch_membership(_alpha_times_batch(F, R), R, below_fixed, 0)
                for t in np.nonzero(ok)[0]:
                    row = [int(x) for x in R[t]]
                    rows[i] = row
                    if i == 0:
                        out.append(IdealHNF(F, rows[:], check=False))
                    else:
                        place(i - 1)

        place(d - 1)
    return sorted(out, key=lambda I: I.B)


def _batch_membership(V: np.ndarray, R: np.ndarray, below: list[list[int]], start: int) -> np.ndarray:
    """Row-wise membership of V[t] in span(R[t], below) where R[t] has pivot at start."""
    V = V.copy()
    ok = ~np.any(V[:, :start] != 0, axis=1)
    q, rem = np.divmod(V[:, start], R[:, start])
    ok &= rem == 0
    V -= q[:, None] * R
    return ok & _in_lattice_batch(V, below, start + 1)


def _enumerate_ideals_slow(F: MonicPoly, n: int) -> list[IdealHNF]:
    d = F.d
    out = []
    for diag in _diagonals(n, d):
        if not all(diag[j] % diag[i] == 0 for i in range(d) for j in range(i, d)):
            continue
        rows: list[list[int]] = [None] * d  # type: ignore[list-item]

        def place(i: int):
            b = diag[i]
            ranges = [range(0, diag[j], b) for j in range(i + 1, d)]
            for tail in itertools.product(*ranges):
                row = [0] * i + [b] + list(tail)
                rows[i] = row
                below = rows[i:]
                if i + 1 < d and not _in_lattice(_alpha_times(F, rows[i + 1]), below, i):
                    continue
                if i == 0:
                    if _in_lattice(_alpha_times(F, row), below, 0):
                        out.append(IdealHNF(F, below, check=False))
                else:
                    place(i - 1)

        place(d - 1)
    return sorted(out, key=lambda I: I.B)


def brute_force_ideals(F: MonicPoly, n: int, require_divisibility: bool = False) -> list[IdealHNF]:
    """Oracle: every HNF matrix of determinant n filtered by is_ideal."""
    d = F.d
    out = []
    for diag in _diagonals(n, d):
        slots = [(i, j) for i in range(d) for j in range(i + 1, d)]
        for vals in itertools.product(*(range(diag[j]) for _, j in slots)):
            B = [[0] * d for _ in range(d)]
            for i in range(d):
                B[i][i] = diag[i]
            for (i, j), v in zip(slots, vals):
                B[i][j] = v
            if is_ideal(F, B) and (not require_divisibility or divisibility_holds(B)):
                out.append(IdealHNF(F, B, check=False))
    return sorted(out, key=lambda I: I.B)


def ideals_up_to(F: MonicPoly, bound: int) -> dict[int, list[IdealHNF]]:
    return {n: enumerate_ideals(F, n) for n in range(1, bound + 1)}


def gcd_with_disc(I: IdealHNF, D: int) -> int:
    return gcd(norm(I), D)
