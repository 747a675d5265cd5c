"""Co-type zeta function of Z[2^{1/3}] and the quadratic Dedekind identity.

Exponent bookkeeping: at a prime p the monomial x^a y^b z^c, with
x = p^{-s1}, y = p^{-s1-s2}, z = p^{-s1-s2-s3}, is the cotype
(N1, N2, N3) = (p^{a+b+c}, p^{b+c}, p^c).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt

import sympy

from .correspondence import all_pairs, pair_to_ideal
from .exact_linalg import lattice_hnf
from .ideals import IdealHNF, brute_force_ideals, enumerate_ideals, invariant_factors, is_ideal
from .order_core import MonicPoly, roots_mod

X3M2 = MonicPoly([0, 0, -2])


class NotPrime(ValueError):
    pass


class PrimeClass(str, Enum):
    RAMIFIED = "ramified"
    INERT = "inert"
    P1 = "P1"
    P2 = "P2"


def represented_by_x2_27y2(p: int) -> bool:
    y = 0
    while 27 * y * y <= p:
        r = p - 27 * y * y
        if isqrt(r) ** 2 == r:
            return True
        y += 1
    return False


def classify_prime(p: int) -> PrimeClass:
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p in (2, 3):
        return PrimeClass.RAMIFIED
    if p % 3 == 2:
        return PrimeClass.P2
    return PrimeClass.P1 if represented_by_x2_27y2(p) else PrimeClass.INERT


# numerators of the local factors as {(a, b): coeff} in x, y
_NUMERATORS = {
    PrimeClass.RAMIFIED: ({(0, 0): 1, (1, 0): 1, (0, 1): 1}, False),
    PrimeClass.P1: ({(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1}, True),
    PrimeClass.P2: ({(0, 0): 1, (1, 1): -1}, True),
    PrimeClass.INERT: ({(0, 0): 1}, False),
}


@lru_cache(maxsize=None)
def local_coefficient(cls: PrimeClass, a: int, b: int) -> int:
    """Coefficient of x^a y^b in the local factor (the zeta(s1+s2+s3) part gives 1 for every c)."""
    num, geometric = _NUMERATORS[cls]
    if not geometric:
        return num.get((a, b), 0)
    # dividing by (1-x)(1-y) sums the numerator over the lower-left quadrant
    return sum(v for (i, j), v in num.items() if i <= a and j <= b)


def cotype_triples(bound: int) -> list[tuple[int, int, int]]:
    """All (N1, N2, N3) with N3 | N2 | N1 and N1 N2 N3 <= bound."""
    out = []
    for n3 in range(1, bound + 1):
        if n3**3 > bound:
            break
        for k2 in range(1, bound + 1):
            n2 = n3 * k2
            if n3 * n2 * n2 > bound:
                break
            for k1 in range(1, bound + 1):
                n1 = n2 * k1
                if n1 * n2 * n3 > bound:
                    break
                out.append((n1, n2, n3))
    return sorted(out)


def euler_coefficient(n1: int, n2: int, n3: int) -> int:
    """Coefficient of N1^{-s1} N2^{-s2} N3^{-s3} in the Euler product."""
    if n1 % n2 or n2 % n3:
        return 0
    out = 1
    for p in sympy.factorint(n1):
        v1 = sympy.multiplicity(p, n1)
        v2 = sympy.multiplicity(p, n2)
        v3 = sympy.multiplicity(p, n3)
        out *= local_coefficient(classify_prime(p), v1 - v2, v2 - v3)
        if out == 0:
            break
    return out


def euler_cotype_coefficients(bound: int) -> dict[tuple[int, int, int], int]:
    return {t: euler_coefficient(*t) for t in cotype_triples(bound)}


def _content_free_by_pairs(F: MonicPoly, bound: int) -> list[IdealHNF]:
    """Content-free ideals of norm <= bound assembled from root pairs.

    Pairs meeting the gcd condition give lambda directly; for the remaining
    (ramified) pairs every lambda mod m1 m2 is tried.
    """
    out = {I.B: I for I in (pair_to_ideal(F, p) for p in all_pairs(F, bound))}
    a1 = F.coeffs[0]
    m1 = 1
    while m1 * m1 <= bound:
        for m2 in range(1, bound // (m1 * m1) + 1):
            g = gcd(m1, m2)
            if g == 1:
                continue
            for r1 in roots_mod(F, m1):
                for r2 in roots_mod(F, m2):
                    if gcd(g, r1.mu - r2.mu) == 1:
                        continue
                    for lam in range(m1 * m2):
                        rows = [[1, r1.mu + a1, lam], [0, m1, -r2.mu * m1], [0, 0, m1 * m2]]
                        if is_ideal(F, rows):
                            H = lattice_hnf(rows)
                            out.setdefault(tuple(map(tuple, H)), IdealHNF(F, H, check=False))
        m1 += 1
    return list(out.values())


def cotype_counts_from_pairs(bound: int) -> Counter:
    """Counts per cotype: every ideal is N3 times a content-free ideal from a root pair."""
    counts: Counter = Counter()
    for J in _content_free_by_pairs(X3M2, bound):
        n1, n2, _ = invariant_factors(J)
        n = n1 * n2
        l = 1
        while l**3 * n <= bound:
            counts[(l * n1, l * n2, l)] += 1
            l += 1
    return counts


def cotype_counts_from_hnf(bound: int) -> Counter:
    """Counts per cotype from the HNF enumeration of every ideal of norm <= bound."""
    counts: Counter = Counter()
    for n in range(1, bound + 1):
        for I in enumerate_ideals(X3M2, n):
            counts[invariant_factors(I)] += 1
    return counts


@dataclass(frozen=True)
class CotypeRow:
    n1: int
    n2: int
    n3: int
    euler: int
    enumeration: int
    pairs: int

    @property
    def match(self) -> bool:
        return self.euler == self.enumeration == self.pairs


def enumerate_ideals_by_cotype(bound: int) -> list[CotypeRow]:
    """Euler product, root-pair assembly and HNF enumeration, side by side."""
    hnf = cotype_counts_from_hnf(bound)
    pairs = cotype_counts_from_pairs(bound)
    euler = euler_cotype_coefficients(bound)
    keys = sorted(set(euler) | set(hnf) | set(pairs))
    return [CotypeRow(*k, euler.get(k, 0), hnf.get(k, 0), pairs.get(k, 0)) for k in keys]


def root_pair_counts(bound: int) -> dict[int, tuple[int, int]]:
    """Per norm n <= bound: (root pairs with the gcd condition, content-free ideals)."""
    pairs = Counter(p.norm for p in all_pairs(X3M2, bound))
    ideals = Counter()
    for n in range(1, bound + 1):
        ideals[n] = sum(1 for I in enumerate_ideals(X3M2, n) if I.B[0][0] == 1)
    return {n: (pairs.get(n, 0), ideals[n]) for n in range(1, bound + 1)}


def sigma_roots(F: MonicPoly, n: int) -> int:
    """sum over l^2 | n of r(n / l^2)."""
    total = 0
    l = 1
    while l * l <= n:
        if n % (l * l) == 0:
            total += len(roots_mod(F, n // (l * l)))
        l += 1
    return total


@dataclass(frozen=True)
class DedekindCheck:
    ok: bool
    rows: tuple[tuple[int, int, int], ...]  # (n, ideal count, root-side count)


def quadratic_dedekind_check(F: MonicPoly, bound: int) -> DedekindCheck:
    if F.d != 2:
        raise ValueError("the identity is for quadratic orders")
    rows = tuple((n, len(brute_force_ideals(F, n)), sigma_roots(F, n)) for n in range(1, bound + 1))
    return DedekindCheck(all(a == b for _, a, b in rows), rows)


def prime_classes_agree(limit: int) -> list[int]:
    """Primes up to limit (not 2, 3) whose class disagrees with the root count mod p."""
    expect = {PrimeClass.P1: 3, PrimeClass.P2: 1, PrimeClass.INERT: 0}
    bad = []
    for p in sympy.primerange(5, limit + 1):
        if len(roots_mod(X3M2, p)) != expect[classify_prime(p)]:
            bad.append(p)
    return bad
