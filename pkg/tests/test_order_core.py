from math import gcd

import pytest

from congruence_ideals.exact_linalg import matmul
from congruence_ideals.order_core import (
    InvalidPolynomial,
    MonicPoly,
    NotSimpleRoot,
    RootClass,
    companion_matrix,
    discriminant,
    hensel_lift,
    mul_elements,
    mult_matrix,
    norm_element,
    poly_of_matrix,
    roots_mod,
)


def mus(F, m, **kw):
    return [r.mu for r in roots_mod(F, m, **kw)]


def test_roots_examples(cubic):
    assert mus(cubic, 31) == [4, 7, 20]
    assert mus(cubic, 5) == [3]
    assert mus(cubic, 7) == []
    assert mus(cubic, 1) == [0]


def test_hensel_chain(cubic):
    r = hensel_lift(cubic, RootClass(5, 3))
    assert r == RootClass(25, 3)
    assert hensel_lift(cubic, r) == RootClass(125, 53)


def test_hensel_rejects_ramified(cubic):
    with pytest.raises(NotSimpleRoot):
        hensel_lift(cubic, RootClass(2, 0))


def test_discriminants(cubic, gauss):
    assert discriminant(cubic) == -108
    assert discriminant(gauss) == -4
    assert discriminant(MonicPoly([0, -2])) == 8


def test_invalid_polynomials():
    with pytest.raises(InvalidPolynomial):
        MonicPoly([0, 0, 0])  # repeated root
    with pytest.raises(InvalidPolynomial):
        MonicPoly([0, -1])  # X^2 - 1 is reducible


def test_companion_satisfies_F(cubic, gauss):
    for F in (cubic, gauss, MonicPoly([1, 2, 3, 5])):
        A = companion_matrix(F)
        assert poly_of_matrix(F, A) == [[0] * F.d for _ in range(F.d)]


def test_root_count_multiplicative(cubic, gauss):
    for F in (cubic, gauss):
        r = {m: len(roots_mod(F, m)) for m in range(1, 41 * 41)}
        for m in range(1, 41):
            for n in range(1, 41):
                if gcd(m, n) == 1:
                    assert r[m * n] == r[m] * r[n]


def test_scan_and_factor_paths_agree(cubic):
    for m in (31, 125, 1000, 4 * 27 * 31, 97 * 101):
        assert mus(cubic, m) == mus(cubic, m, threshold=1)
        assert mus(cubic, m) == [x for x in range(m) if cubic(x) % m == 0]


def test_large_prime_roots(cubic):
    p = 1_000_000_007
    for mu in mus(cubic, p):
        assert (mu**3 - 2) % p == 0


def test_ring_axioms(cubic):
    x, y, z = [1, -2, 3], [0, 4, -1], [2, 2, 7]
    assert mul_elements(x, y, cubic) == mul_elements(y, x, cubic)
    lhs = mul_elements(mul_elements(x, y, cubic), z, cubic)
    rhs = mul_elements(x, mul_elements(y, z, cubic), cubic)
    assert lhs == rhs
    s = [a + b for a, b in zip(y, z)]
    assert mul_elements(x, s, cubic) == [
        a + b for a, b in zip(mul_elements(x, y, cubic), mul_elements(x, z, cubic))
    ]
    # alpha^3 = 2
    a = [0, 1, 0]
    assert mul_elements(a, mul_elements(a, a, cubic), cubic) == [0, 0, 2]


def test_norm_multiplicative(cubic):
    x, y = [1, 1, 1], [0, 1, 2]
    assert norm_element([1, 1, 1], cubic) == 1
    assert norm_element(mul_elements(x, y, cubic), cubic) == norm_element(x, cubic) * norm_element(y, cubic)
    M = mult_matrix(x, cubic)
    assert matmul(mult_matrix(y, cubic), M) == mult_matrix(mul_elements(x, y, cubic), cubic)


def test_rootclass_json():
    assert RootClass(31, 4).to_json() == {"m": 31, "mu": 4}
