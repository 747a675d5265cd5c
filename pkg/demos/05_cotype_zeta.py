"""Counting ideals of Z[2^(1/3)] by invariant factors, three ways."""
from congruence_ideals.order_core import MonicPoly
from congruence_ideals.zeta import classify_prime, enumerate_ideals_by_cotype, quadratic_dedekind_check

for p in (2, 3, 5, 7, 11, 31, 43, 61):
    print(p, classify_prime(p).value)

rows = enumerate_ideals_by_cotype(120)
print("\n(N1,N2,N3)   euler  enumeration  pairs")
for r in rows:
    if r.euler:
        print(f"{(r.n1, r.n2, r.n3)!s:12} {r.euler:5d} {r.enumeration:11d} {r.pairs:6d}")
print("all agree:", all(r.match for r in rows))

# in degree two every ideal count is a sum of root counts
for coeffs in ([0, 1], [0, -2]):
    F = MonicPoly(coeffs)
    chk = quadratic_dedekind_check(F, 50)
    print(F, "identity holds up to 50:", chk.ok)
