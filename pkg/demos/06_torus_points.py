"""Roots as points mu^j / m on the torus: how well they are approximated and how they spread."""
import numpy as np

from congruence_ideals.order_core import MonicPoly
from congruence_ideals.parameterization import approximation, preset, spacing_census, torsion_lattice, witness_census

data = preset("x3-2")
ws = witness_census(data, 2000, coprime_to=6)
errs = np.array([float(approximation(w).m_error) for w in ws])
print(len(ws), "roots with m <= 2000 and gcd(m, 6) = 1")
print("m * max|error|: max %.4f, median %.4f" % (errs.max(), np.median(errs)))

w = max(ws, key=lambda w: w.m)
lat = torsion_lattice(w)
print(f"largest m = {w.m}: denominator {lat.q}, shortest vector {lat.shortest_vector}")

F = MonicPoly([0, 0, -2])
for M in (100, 1000, 5000):
    res = spacing_census(F, M)
    print(f"M={M}: {res.n_points} points in (M, 2M], max occupancy of a 1/M ball {res.max_occupancy}")

