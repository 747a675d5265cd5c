"""Composing ideals directly on their roots.

The composed root is pinned down by congruences plus a root condition; we
resolve it by filtering the roots of F modulo the target modulus.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .correspondence import RootPair, make_pair, pair_to_ideal, root_to_ideal
from .ideals import IdealHNF, multiply
from .order_core import MonicPoly, RootClass, discriminant, gcd_many, roots_mod

COMPOSED = "composed"
NON_CYCLIC = "non_cyclic"
INTEGER_DIVISIBLE = "integer_divisible"


class Ramified(ValueError):
    pass


class UniquenessViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class Composition:
    status: str
    result: RootClass | RootPair | None
    product: IdealHNF | None = None

    def to_json(self) -> dict:
        out = {"status": self.status, "result": None if self.result is None else self.result.to_json()}
        if self.product is not None:
            out["product"] = self.product.matrix()
        return out


def lift_filter(
    F: MonicPoly,
    M: int,
    congruences: Sequence[tuple[int, int]] = (),
    gcd_constraints: Sequence[tuple[int, Sequence[int]]] = (),
) -> RootClass:
    """The unique root mu mod M with mu = r mod q for each (r, q) and
    gcd(l, prod(mu - v)) = 1 for each (l, vs)."""
    hits = []
    for root in roots_mod(F, M):
        mu = root.mu
        if any((mu - r) % q for r, q in congruences):
            continue
        ok = True
        for l, vs in gcd_constraints:
            t = 1
            for v in vs:
                t *= mu - v
            if gcd(l, t) != 1:
                ok = False
                break
        if ok:
            hits.append(root)
    if len(hits) != 1:
        raise UniquenessViolation(f"{len(hits)} roots mod {M} satisfy the constraints")
    return hits[0]


def compose_roots(F: MonicPoly, r1: RootClass, r2: RootClass, with_product: bool = False) -> Composition:
    m, mu, n, nu = r1.m, r1.mu, r2.m, r2.mu
    if gcd(m * n, discriminant(F)) > 1:
        raise Ramified(f"gcd({m * n}, D) > 1")
    product = None
    if with_product or (mu - nu) % gcd(m, n):
        product = multiply(root_to_ideal(F, r1), root_to_ideal(F, r2))
    if (mu - nu) % gcd(m, n):
        return Composition(NON_CYCLIC, None, product)
    root = lift_filter(F, m * n, [(mu, m), (nu, n)])
    return Composition(COMPOSED, root, product)


def pair_conditions(p: RootPair, q: RootPair) -> bool:
    """True iff the product of the two pair ideals is free of rational integers."""
    return (
        (p.mu1 - q.mu1) % gcd(p.m1, q.m1) == 0
        and gcd_many(p.m1, q.m2, p.mu1 - q.mu2) == 1
        and gcd_many(p.m2, q.m1, p.mu2 - q.mu1) == 1
    )


def compose_pairs(F: MonicPoly, p: RootPair, q: RootPair, with_product: bool = False) -> Composition:
    if F.d != 3:
        raise ValueError("pair composition needs a cubic F")
    if gcd(p.norm * q.norm, discriminant(F)) > 1:
        raise Ramified(f"gcd({p.norm * q.norm}, D) > 1")
    product = None
    ok = pair_conditions(p, q)
    if with_product or not ok:
        product = multiply(pair_to_ideal(F, p), pair_to_ideal(F, q))
    if not ok:
        return Composition(INTEGER_DIVISIBLE, None, product)
    m1, mu1, m2, mu2 = p.m1, p.mu1, p.m2, p.mu2
    n1, nu1, n2, nu2 = q.m1, q.mu1, q.m2, q.mu2
    l = gcd(m2, n2) // gcd_many(m2, n2, mu2 - nu2)
    M1 = m1 * n1 * l
    M2 = m2 * n2 // (l * l)
    t1 = lift_filter(F, M1, [(mu1, m1), (nu1, n1)], [(l, (mu2, nu2))])
    t2 = lift_filter(F, M2, [(mu2, m2 // l), (nu2, n2 // l)])
    return Composition(COMPOSED, make_pair(F, t1.mu, M1, t2.mu, M2), product)


def lifted_root(F: MonicPoly, r: int, p: int, k: int) -> int:
    """The root mod p^k reducing to the simple root r mod p."""
    if k == 0:
        return 0
    return lift_filter(F, p**k, [(r, p)]).mu


def prime_power_pair(F: MonicPoly, p: int, a: int, b: int, k: int, l: int) -> RootPair:
    """Pair of P_a^k P_b^l for two distinct degree-one primes over a split p.

    With c the third root: (c lifted mod p^min(k,l), dominant root lifted mod p^|k-l|).
    """
    roots = [r.mu for r in roots_mod(F, p)]
    (c,) = [r for r in roots if r not in (a, b)]
    lo = min(k, l)
    top, e = (a, k - l) if k >= l else (b, l - k)
    return make_pair(F, lifted_root(F, c, p, lo), p**lo, lifted_root(F, top, p, e), p**e)
