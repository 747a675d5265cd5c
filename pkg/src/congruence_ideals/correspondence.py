"""Ideals with cyclic quotient <-> roots mod m, and cubic ideals <-> root pairs."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exact_linalg import _bezout, lattice_hnf
from .ideals import IdealHNF, integer_content, invariant_factors
from .order_core import MonicPoly, NotARoot, RootClass, discriminant, make_root


class NotCyclicQuotient(ValueError):
    pass


class GcdObstruction(ValueError):
    pass


class HasIntegerContent(ValueError):
    pass


class MalformedIdeal(ValueError):
    pass


def root_to_ideal(F: MonicPoly, root: RootClass) -> IdealHNF:
    """Basis (alpha^{d-1-i} - mu^{d-1-i} for i < d-1, m), reduced into HNF range."""
    m, mu = root.m, root.mu
    if F(mu) % m:
        raise NotARoot(f"F({mu}) is not 0 mod {m}")
    d = F.d
    B = [[int(i == j) for j in range(d)] for i in range(d)]
    for i in range(d - 1):
        B[i][d - 1] = -pow(mu, d - 1 - i, m) % m
    B[d - 1][d - 1] = m
    return IdealHNF(F, B)


def ideal_to_root(I: IdealHNF) -> RootClass:
    d = I.d
    inv = invariant_factors(I)
    if any(x != 1 for x in inv[1:]):
        raise NotCyclicQuotient(f"invariant factors {inv}")
    m = inv[0]
    return RootClass(m, -I.B[d - 2][d - 1] % m)


@dataclass(frozen=True, order=True)
class RootPair:
    m1: int
    mu1: int
    m2: int
    mu2: int
    lam: int
    # set when gcd(m1*m2, D) > 1, where the pair need not be canonical
    ramified: bool = field(default=False, compare=False)

    def to_json(self) -> dict:
        out = {"mu1": self.mu1, "m1": self.m1, "mu2": self.mu2, "m2": self.m2, "lambda": self.lam}
        if self.ramified:
            out["ramified"] = True
        return out

    @property
    def norm(self) -> int:
        return self.m1 * self.m1 * self.m2

    def key(self) -> tuple[int, int, int, int]:
        return (self.m1, self.mu1, self.m2, self.mu2)


@dataclass(frozen=True)
class LambdaSolution:
    lam: int
    kappa: int
    mbar1: int
    mbar2: int
    g: int


def _require_cubic(F: MonicPoly):
    if F.d != 3:
        raise ValueError("root pairs are only defined for cubic F")


def lambda_from(F: MonicPoly, mu1: int, m1: int, mu2: int, m2: int, mbar1: int, mbar2: int, kappa: int) -> int:
    a1, a2, _ = F.coeffs
    g = gcd(m1, m2)
    lam = (mu1 * mu1 + a1 * mu1 + a2) * mbar2 * (m2 // g)
    lam -= (mu2 * mu2 + mu1 * mu2 + a1 * mu2) * mbar1 * (m1 // g)
    lam += kappa * (m1 * m2 // g)
    return lam % (m1 * m2)


def kappa_for(F: MonicPoly, mu1: int, m1: int, mu2: int, m2: int, mbar1: int, mbar2: int) -> int:
    g = gcd(m1, m2)
    if g == 1:
        return 0
    rhs = -((F(mu1) // m1) * mbar2 + (F(mu2) // m2) * mbar1)
    return rhs * pow(mu1 - mu2, -1, g) % g


def solve_lambda(F: MonicPoly, mu1: int, m1: int, mu2: int, m2: int) -> LambdaSolution:
    """The glue entry lambda mod m1*m2 for fixed representatives mu1, mu2."""
    _require_cubic(F)
    if F(mu1) % m1:
        raise NotARoot(f"F({mu1}) is not 0 mod {m1}")
    if F(mu2) % m2:
        raise NotARoot(f"F({mu2}) is not 0 mod {m2}")
    g = gcd(m1, m2)
    if gcd(g, mu1 - mu2) != 1:
        raise GcdObstruction(f"gcd({m1}, {m2}, {mu1}-{mu2}) > 1")
    _, mbar1, mbar2 = _bezout(m1 // g, m2 // g)
    kappa = kappa_for(F, mu1, m1, mu2, m2, mbar1, mbar2)
    lam = lambda_from(F, mu1, m1, mu2, m2, mbar1, mbar2, kappa)
    return LambdaSolution(lam, kappa, mbar1, mbar2, g)


def make_pair(F: MonicPoly, mu1: int, m1: int, mu2: int, m2: int) -> RootPair:
    mu1, mu2 = mu1 % m1, mu2 % m2
    sol = solve_lambda(F, mu1, m1, mu2, m2)
    return RootPair(m1, mu1, m2, mu2, sol.lam, ramified=gcd(m1 * m2, discriminant(F)) > 1)


def pair_to_ideal(F: MonicPoly, pair: RootPair) -> IdealHNF:
    _require_cubic(F)
    m1, m2, mu1, mu2 = pair.m1, pair.m2, pair.mu1, pair.mu2
    lam = solve_lambda(F, mu1, m1, mu2, m2).lam
    if lam != pair.lam % (m1 * m2):
        raise ValueError(f"lambda {pair.lam} does not match the solved value {lam}")
    a1 = F.coeffs[0]
    rows = [[1, mu1 + a1, lam], [0, m1, -mu2 * m1], [0, 0, m1 * m2]]
    return IdealHNF(F, lattice_hnf(rows))


def ideal_to_pair(I: IdealHNF) -> RootPair:
    """Read (m1, mu1, m2, mu2, lambda) off a content-free cubic ideal."""
    F = I.F
    _require_cubic(F)
    B = I.B
    if integer_content(I) != 1:
        raise HasIntegerContent(f"ideal is divisible by {integer_content(I)}")
    m1 = B[1][1]
    if B[2][2] % m1 or B[1][2] % m1:
        raise MalformedIdeal(f"{m1} does not divide the second row")
    m2 = B[2][2] // m1
    a1 = F.coeffs[0]
    mu1 = (B[0][1] - a1) % m1
    mu2 = (-B[1][2] // m1) % m2
    # shift row 0 by s * row 1 so that its middle entry becomes mu1 + a1 exactly
    s = (mu1 + a1 - B[0][1]) // m1
    lam = (B[0][2] + s * B[1][2]) % (m1 * m2)
    ramified = gcd(m1 * m2, discriminant(F)) > 1
    pair = RootPair(m1, mu1, m2, mu2, lam, ramified=ramified)
    if F(mu1) % m1 or F(mu2) % m2:
        raise MalformedIdeal("read-off values are not roots")
    if not ramified and gcd(m1, m2, mu1 - mu2) != 1:
        raise MalformedIdeal("unramified pair violates the gcd condition")
    return pair


def all_pairs(F: MonicPoly, norm_bound: int, exact_norm: int | None = None) -> list[RootPair]:
    """Every valid pair with m1^2 m2 <= norm_bound (or == exact_norm)."""
    from .order_core import roots_mod

    _require_cubic(F)
    out = []
    cache: dict[int, list[int]] = {}

    def roots(m):
        if m not in cache:
            cache[m] = [r.mu for r in roots_mod(F, m)]
        return cache[m]

    m1 = 1
    while m1 * m1 <= norm_bound:
        for m2 in range(1, norm_bound // (m1 * m1) + 1):
            if exact_norm is not None and m1 * m1 * m2 != exact_norm:
                continue
            g = gcd(m1, m2)
            for mu1 in roots(m1):
                for mu2 in roots(m2):
                    if gcd(g, mu1 - mu2) == 1:
                        out.append(make_pair(F, mu1, m1, mu2, m2))
        m1 += 1
    return out


__all__ = [
    "GcdObstruction",
    "HasIntegerContent",
    "LambdaSolution",
    "MalformedIdeal",
    "NotARoot",
    "NotCyclicQuotient",
    "RootPair",
    "all_pairs",
    "ideal_to_pair",
    "ideal_to_root",
    "make_pair",
    "make_root",
    "pair_to_ideal",
    "root_to_ideal",
    "solve_lambda",
]
