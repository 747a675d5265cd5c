"""Roots of X^3 - 2 modulo m and the ideals they correspond to.

Run: python3 demos/01_roots_and_ideals.py
"""
from congruence_ideals.correspondence import ideal_to_root, root_to_ideal
from congruence_ideals.ideals import enumerate_ideals, invariant_factors
from congruence_ideals.order_core import MonicPoly, RootClass, discriminant, hensel_lift, roots_mod

F = MonicPoly([0, 0, -2])
print("F =", F, " discriminant", discriminant(F))

# 31 splits completely, 5 has one root, 7 has none
for m in (5, 7, 31, 10):
    print(f"roots mod {m}:", [r.mu for r in roots_mod(F, m)])

# a simple root mod 5 lifts uniquely up the powers of 5
r = RootClass(5, 3)
for _ in range(3):
    print("  ", r)
    r = hensel_lift(F, r)

# each root mu mod m is an ideal with quotient Z/mZ
I = root_to_ideal(F, RootClass(10, 8))
print("\nideal of 8 mod 10:")
for row in I.B:
    print("  ", row)
print("invariant factors", invariant_factors(I), " back to", ideal_to_root(I))

# not every ideal is of this kind: norm 25 has one with quotient (Z/5)^2
for J in enumerate_ideals(F, 25):
    print("norm 25:", J.B, invariant_factors(J))
