"""Content-free cubic ideals are parameterized by pairs of roots.

A pair (mu1 mod m1, mu2 mod m2) with gcd(m1, m2, mu1 - mu2) = 1 determines a
unique third entry lambda, and the ideal has invariant factors (m1 m2, m1, 1).
"""
from math import gcd

from congruence_ideals.correspondence import all_pairs, ideal_to_pair, make_pair, pair_to_ideal, solve_lambda
from congruence_ideals.ideals import enumerate_ideals, invariant_factors
from congruence_ideals.order_core import MonicPoly

F = MonicPoly([0, 0, -2])

sol = solve_lambda(F, 4, 31, 7, 31)
print("pair (4 mod 31, 7 mod 31): lambda =", sol.lam, "kappa =", sol.kappa)
I = pair_to_ideal(F, make_pair(F, 4, 31, 7, 31))
print("ideal", I.B, "invariant factors", invariant_factors(I))
print("read back:", ideal_to_pair(I))

# count both sides for a few norms coprime to 6
print("\n  n  pairs  content-free ideals")
for n in range(1, 130):
    if gcd(n, 6) != 1:
        continue
    pairs = all_pairs(F, n, exact_norm=n)
    ideals = [J for J in enumerate_ideals(F, n) if J.B[0][0] == 1]
    if pairs or ideals:
        print(f"{n:3d}  {len(pairs):5d}  {len(ideals):5d}")
