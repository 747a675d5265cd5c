import itertools
from fractions import Fraction
from math import gcd

import pytest

from congruence_ideals.correspondence import pair_to_ideal, root_to_ideal
from congruence_ideals.exact_linalg import det, inverse_unimodular, lattice_hnf, matmul
from congruence_ideals.ideals import principal_ideal
from congruence_ideals.order_core import mul_elements, norm_element, roots_mod
from congruence_ideals.parameterization import (
    Degenerate,
    approximation,
    c_from_root,
    c_matrix,
    hooley_params,
    hooley_vector,
    in_domain,
    params_from_c,
    preset,
    reduce_to_domain,
    root_matrix,
    shortest_vector,
    spacing_census,
    torsion_lattice,
    witness_census,
)


@pytest.fixture(scope="module")
def x3():
    return preset("x3-2")


@pytest.fixture(scope="module")
def x2():
    return preset("x2+1")


def test_witness_example(x3):
    w = params_from_c(x3, (0, 1, 2))
    assert (w.m, w.mu, w.u, w.k) == (10, 8, (-1, -1, 0), 3)
    assert [list(r) for r in w.gamma] == [[1, -1, 2], [0, 0, 1], [1, -2, 4]]
    assert w.mu_powers == (6, 2)
    assert matmul([list(r) for r in w.gamma], [list(r) for r in w.C]) == root_matrix(3, 10, 8)
    assert params_from_c(x3, (1, 1, 1)).m == 1


def test_gauss_witness(x2):
    w = params_from_c(x2, (1, 2))
    assert (w.m, w.mu) == (5, 3)


def test_domain_reduction(x3):
    F = x3.F
    eps = x3.fundamental_units[0]
    assert reduce_to_domain(x3, mul_elements(eps, [0, 1, 2], F)) == [0, 1, 2]
    assert reduce_to_domain(x3, mul_elements(eps, eps, F)) == [0, 0, 1]
    assert in_domain(x3, [0, 1, 2])


def test_unit_invariance(x3, x2):
    for data in (x3, x2):
        F = data.F
        units = list(data.fundamental_units) + list(data.torsion_units) + list(data.sign_units)
        for c in itertools.product(range(-3, 4), repeat=F.d):
            try:
                w = params_from_c(data, c)
            except Degenerate:
                continue
            for u in units:
                assert params_from_c(data, mul_elements(list(c), list(u), F)).root() == w.root()


def test_u_ambiguity(x3):
    # shifting u by a column of C leaves sum(w_j u_j) = 1 and the root unchanged
    w = params_from_c(x3, (1, 2, 3))
    C = [list(r) for r in w.C]
    for a in range(-2, 3):
        for col in range(2):
            u = [x + a * C[i][col] for i, x in enumerate(w.u)]
            ginv = [C[i][:2] + [u[i]] for i in range(3)]
            assert det(ginv) == 1
            gamma = inverse_unimodular(ginv)
            assert lattice_hnf(matmul(gamma, C)) == root_matrix(3, w.m, w.mu)


def test_gamma_is_unimodular_and_ideal_matches(x3, x2):
    for data in (x3, x2):
        for c in itertools.product(range(-4, 5), repeat=data.d):
            try:
                w = params_from_c(data, c)
            except Degenerate:
                continue
            assert det([list(r) for r in w.gamma]) == 1
            assert principal_ideal(data.F, w.c) == root_to_ideal(data.F, w.root())


def test_hooley_examples():
    h = hooley_params(1, 0, 0)
    assert h.m1 == 2 and [list(r) for r in h.R] == [[1, 0, 0], [0, 2, 0], [0, 0, 2]]
    h = hooley_params(0, 1, 2)
    assert h.plucker == (2, 1, 0, 1, -2, 4)
    assert (h.m1, h.m2, h.mu2) == (1, 10, 8)
    h = hooley_params(3, -2, 5)
    assert (h.m2, h.mu2) == (397, 214)


def test_hooley_pair_is_principal_ideal(cubic):
    for c in itertools.product(range(-4, 5), repeat=3):
        if gcd(*c) != 1:
            continue
        h = hooley_params(*c)
        assert h.m1 == gcd(*hooley_vector(*c))
        assert pair_to_ideal(cubic, h.pair(cubic)) == principal_ideal(cubic, list(c))


def test_approximation_identity(x3):
    w = params_from_c(x3, (0, 1, 2))
    a = approximation(w)
    assert a.point == (Fraction(1, 2), Fraction(3, 4))
    assert a.m_error == 1
    for j in range(2):
        assert (a.point[j] + a.error[j] + Fraction(w.mu_powers[j], w.m)) % 1 == 0


def test_shortest_vector_against_box():
    cases = [[[1, 0], [0, 1]], [[5, 3], [2, 7]], [[13, 1], [-4, 9]], [[31, 17], [11, 29]]]
    for cols in cases:
        s2, v = shortest_vector(cols)
        best = None
        for z in itertools.product(range(-20, 21), repeat=2):
            if z == (0, 0):
                continue
            x = [cols[0][i] * z[0] + cols[1][i] * z[1] for i in range(2)]
            n = x[0] ** 2 + x[1] ** 2
            best = n if best is None else min(best, n)
        assert s2 == best == v[0] ** 2 + v[1] ** 2


def test_shortest_vector_3d():
    cols = [[3, 1, 0], [1, 4, 1], [0, 1, 5]]
    s2, _ = shortest_vector(cols)
    best = min(
        sum(sum(cols[j][i] * z[j] for j in range(3)) ** 2 for i in range(3))
        for z in itertools.product(range(-6, 7), repeat=3)
        if any(z)
    )
    assert s2 == best


def test_torsion_lattice(x3):
    w = params_from_c(x3, (3, -2, 5))
    lat = torsion_lattice(w)
    assert lat.q > 0 and lat.shortest > 0


def test_c_from_root_roundtrip(x3, x2):
    for data in (x3, x2):
        for m in (5, 13, 25, 31):
            for r in roots_mod(data.F, m):
                c = c_from_root(data, r)
                assert params_from_c(data, c).root() == r


def test_census_small(x3):
    ws = witness_census(x3, 200, coprime_to=6)
    roots = {(r.m, r.mu) for m in range(1, 201) if gcd(m, 6) == 1 for r in roots_mod(x3.F, m)}
    assert {(w.m, w.mu) for w in ws} == roots


def test_c_matrix_is_multiplication(x3):
    C = c_matrix(x3, [1, 2, 3])
    assert det(C) == norm_element([1, 2, 3], x3.F)
    assert C[-1] == [1, 2, 3]


def test_spacing_small(cubic):
    res = spacing_census(cubic, 100)
    assert res.n_points == 28
    assert res.max_occupancy >= 1
    assert res.radius == Fraction(1, 100)
