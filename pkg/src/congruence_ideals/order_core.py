"""The defining polynomial, arithmetic in Z[alpha] and roots of F mod m.

Elements are coefficient vectors in the basis (alpha^{d-1}, ..., alpha, 1),
highest power first, to match the row convention of the ideal bases.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Sequence

import numpy as np
import sympy

from .exact_linalg import IntMatrix, det, matmul

SCAN_THRESHOLD = 10**6


class InvalidPolynomial(ValueError):
    pass


class NotSimpleRoot(ValueError):
    pass


class NotARoot(ValueError):
    pass


@dataclass(frozen=True)
class MonicPoly:
    """F(X) = X^d + a_1 X^{d-1} + ... + a_d."""

    coeffs: tuple[int, ...]
    irreducibility_checked: bool = field(default=False, compare=False)

    def __init__(self, coeffs: Sequence[int]):
        c = tuple(int(a) for a in coeffs)
        if len(c) < 2:
            raise InvalidPolynomial("degree must be at least 2")
        object.__setattr__(self, "coeffs", c)
        if discriminant(self) == 0:
            raise InvalidPolynomial(f"{self} has a repeated root")
        checked = False
        if len(c) <= 3:
            # a reducible monic of degree <= 3 has an integer root dividing a_d
            if _has_integer_root(c):
                raise InvalidPolynomial(f"{self} is reducible over Q")
            checked = True
        object.__setattr__(self, "irreducibility_checked", checked)

    @property
    def d(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: int) -> int:
        v = 1
        for a in self.coeffs:
            v = v * x + a
        return v

    def derivative_at(self, x: int) -> int:
        d = self.d
        full = (1,) + self.coeffs
        v = 0
        for i, a in enumerate(full[:-1]):
            v = v * x + a * (d - i)
        return v

    def __str__(self):
        terms = [f"X^{self.d}"]
        for i, a in enumerate(self.coeffs, 1):
            if a:
                p = self.d - i
                mono = "" if p == 0 else ("X" if p == 1 else f"X^{p}")
                s = "-" if a < 0 else "+"
                mag = abs(a)
                body = f"{mag}{mono}" if (mag != 1 or p == 0) else mono
                terms.append(f" {s} {body}")
        return "".join(terms)

    @classmethod
    def parse(cls, text: str) -> "MonicPoly":
        return cls([int(t) for t in text.replace(" ", "").split(",") if t])


def _has_integer_root(c: tuple[int, ...]) -> bool:
    ad = c[-1]
    if ad == 0:
        return True
    F = lambda x: _horner(c, x)
    for q in sympy.divisors(abs(ad)):
        if F(q) == 0 or F(-q) == 0:
            return True
    return False


def _horner(c, x):
    v = 1
    for a in c:
        v = v * x + a
    return v


def companion_matrix(F: MonicPoly) -> IntMatrix:
    """Multiplication by alpha in the basis (alpha^{d-1}, ..., 1), row convention."""
    d = F.d
    A = [[0] * d for _ in range(d)]
    A[0] = [-a for a in F.coeffs]
    for i in range(1, d):
        A[i][i - 1] = 1
    return A


def poly_of_matrix(F: MonicPoly, A: IntMatrix) -> IntMatrix:
    d = len(A)
    R = [[int(i == j) for j in range(d)] for i in range(d)]
    for a in F.coeffs:
        R = matmul(R, A)
        for i in range(d):
            R[i][i] += a
    return R


def discriminant(F: MonicPoly) -> int:
    """(-1)^{d(d-1)/2} Res(F, F') computed as det F'(A)."""
    d = len(F.coeffs)
    A = [[0] * d for _ in range(d)]
    A[0] = [-a for a in F.coeffs]
    for i in range(1, d):
        A[i][i - 1] = 1
    # F'(A) by Horner on the derivative coefficients
    dc = [(d - i) * a for i, a in enumerate((1,) + F.coeffs[:-1])]
    R = [[dc[0] * int(i == j) for j in range(d)] for i in range(d)]
    for a in dc[1:]:
        R = matmul(R, A)
        for i in range(d):
            R[i][i] += a
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * det(R)


def element(F: MonicPoly, low_first: Sequence[int]) -> list[int]:
    """Convert e_0 + e_1 alpha + ... to the high-first vector."""
    v = list(low_first) + [0] * (F.d - len(low_first))
    if len(v) > F.d:
        raise ValueError("element has too many coefficients")
    return v[::-1]


def mul_elements(x: Sequence[int], y: Sequence[int], F: MonicPoly) -> list[int]:
    """Product in Z[alpha]; inputs and output are high-first vectors of length d."""
    d = F.d
    xl, yl = list(x)[::-1], list(y)[::-1]
    prod = [0] * (2 * d - 1)
    for i, a in enumerate(xl):
        if a:
            for j, b in enumerate(yl):
                prod[i + j] += a * b
    # alpha^d = -a_1 alpha^{d-1} - ... - a_d
    for k in range(2 * d - 2, d - 1, -1):
        t = prod[k]
        if t:
            prod[k] = 0
            for i, a in enumerate(F.coeffs, 1):
                prod[k - i] -= a * t
    return prod[:d][::-1]


def norm_element(x: Sequence[int], F: MonicPoly) -> int:
    """N(x) = det of multiplication by x."""
    return det(mult_matrix(x, F))


def mult_matrix(x: Sequence[int], F: MonicPoly) -> IntMatrix:
    """Rows are x * alpha^{d-1}, ..., x * 1 in the power basis."""
    d = F.d
    rows = []
    for k in range(d - 1, -1, -1):
        e = [0] * d
        e[d - 1 - k] = 1
        rows.append(mul_elements(x, e, F))
    return rows


@dataclass(frozen=True, order=True)
class RootClass:
    m: int
    mu: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.mu < self.m:
            object.__setattr__(self, "mu", self.mu % self.m)

    def to_json(self) -> dict:
        return {"mu": self.mu, "m": self.m}


def make_root(F: MonicPoly, mu: int, m: int) -> RootClass:
    r = RootClass(m, mu % m)
    if F(r.mu) % m:
        raise NotARoot(f"F({mu}) is not 0 mod {m}")
    return r


def _scan(F: MonicPoly, m: int) -> list[int]:
    if m == 1:
        return [0]
    out = []
    step = 1 << 18
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        if m < 3 * 10**9:
            # products stay below 2^63 when m < 3e9
            x = np.arange(lo, hi, dtype=np.int64)
            v = np.ones_like(x)
            for a in F.coeffs:
                v = (v * x + (a % m)) % m
            out.extend(int(t) for t in x[v == 0])
        else:
            out.extend(t for t in range(lo, hi) if F(t) % m == 0)
    return out


def _roots_prime_power(F: MonicPoly, p: int, k: int) -> list[int]:
    roots = _scan(F, p) if p <= SCAN_THRESHOLD else _roots_large_prime(F, p)
    q = p
    for _ in range(k - 1):
        nxt = []
        for r in roots:
            if F.derivative_at(r) % p:
                nxt.append(hensel_lift(F, RootClass(q, r)).mu)
            else:
                nxt.extend(r + t * q for t in range(p) if F(r + t * q) % (q * p) == 0)
        roots = nxt
        q *= p
    return sorted(roots)


def _roots_large_prime(F: MonicPoly, p: int) -> list[int]:
    x = sympy.symbols("x")
    poly = sympy.Poly([1, *F.coeffs], x, modulus=p)
    return sorted(int(-f.all_coeffs()[-1]) % p for f, _ in poly.factor_list()[1] if f.degree() == 1)


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """The residue mod m1*m2 congruent to r1 mod m1 and r2 mod m2 (coprime moduli)."""
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2) if m2 > 1 else r1 % m1


def roots_mod(F: MonicPoly, m: int, threshold: int = SCAN_THRESHOLD) -> list[RootClass]:
    """All roots of F mod m, sorted."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m <= threshold:
        return [RootClass(m, r) for r in _scan(F, m)]
    res, mod = [0], 1
    for p, k in sorted(sympy.factorint(m).items()):
        q = p**k
        local = _roots_prime_power(F, p, k)
        res = [crt_pair(a, mod, b, q) for a in res for b in local]
        mod *= q
    return [RootClass(m, r) for r in sorted(res)]


def hensel_lift(F: MonicPoly, root: RootClass) -> RootClass:
    """Lift a simple root mod p^k to the unique root mod p^{k+1} above it."""
    q, mu = root.m, root.mu
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p,) = fac
    dF = F.derivative_at(mu)
    if dF % p == 0:
        raise NotSimpleRoot(f"p={p} divides F'({mu})")
    if F(mu) % q:
        raise NotARoot(f"F({mu}) is not 0 mod {q}")
    Q = q * p
    t = (-(F(mu) // q) * pow(dF, -1, p)) % p
    return RootClass(Q, (mu + t * q) % Q)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def gcd_many(*xs: int) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
