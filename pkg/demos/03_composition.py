"""Multiplying ideals by working on their roots only.

Each result is compared with the product computed from the lattice bases.
"""
from congruence_ideals.composition import compose_pairs, compose_roots, prime_power_pair
from congruence_ideals.correspondence import make_pair, pair_to_ideal, root_to_ideal
from congruence_ideals.ideals import multiply
from congruence_ideals.order_core import MonicPoly, RootClass, roots_mod

F = MonicPoly([0, 0, -2])

for a, b in [((5, 3), (25, 3)), ((31, 4), (43, 20)), ((31, 4), (31, 7))]:
    c = compose_roots(F, RootClass(*a), RootClass(*b), with_product=True)
    print(f"{a} * {b}: {c.status}", c.result if c.result else c.product.B)

# pairs: a product can pick up a rational integer factor
p = make_pair(F, 0, 1, 3, 5)
q = make_pair(F, 3, 5, 0, 1)
print("\n", compose_pairs(F, p, q).status, "   square:", compose_pairs(F, p, p).result)

# powers of two distinct primes above 31
a, b, _ = [r.mu for r in roots_mod(F, 31)]
Pa, Pb = root_to_ideal(F, RootClass(31, a)), root_to_ideal(F, RootClass(31, b))
for k, l in [(1, 1), (2, 1), (1, 2), (2, 2)]:
    prod = Pa
    for _ in range(k - 1):
        prod = multiply(prod, Pa)
    for _ in range(l):
        prod = multiply(prod, Pb)
    pair = prime_power_pair(F, 31, a, b, k, l)
    print(f"P^{k} Q^{l}: {pair}  agrees: {pair_to_ideal(F, pair) == prod}")
