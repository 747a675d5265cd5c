"""Roots as principal ideals: a generator xi gives a unimodular gamma with
gamma * C(xi) equal to the basis matrix of the root ideal.
"""
from congruence_ideals.exact_linalg import matmul
from congruence_ideals.order_core import RootClass
from congruence_ideals.parameterization import approximation, c_from_root, hooley_params, params_from_c, preset

data = preset("x3-2")
w = params_from_c(data, (0, 1, 2))
print("xi = alpha + 2: m =", w.m, " mu =", w.mu, " u =", w.u)
for g, r in zip(w.gamma, matmul([list(x) for x in w.gamma], [list(x) for x in w.C])):
    print("  gamma", g, "  gamma C", r)

ap = approximation(w)
print("torus point", [str(x) for x in ap.point], " m*error", ap.m_error)

# the other direction: find a generator for a given root
root = RootClass(31, 20)
c = c_from_root(data, root)
print("\n20 mod 31 comes from c =", c, "->", params_from_c(data, c).root())

# the Pluecker construction also covers ideals that are not cyclic
for c in [(1, 0, 0), (0, 1, 2), (3, -2, 5)]:
    h = hooley_params(*c)
    print(f"c={c}: m1={h.m1} mu1={h.mu1} m2={h.m2} mu2={h.mu2}")

# Gaussian integers work the same way
g = preset("x2+1")
print("\n1 + 2i:", params_from_c(g, (1, 2)).root())
