import pytest
import sympy

from congruence_ideals.order_core import MonicPoly, roots_mod
from congruence_ideals.zeta import (
    NotPrime,
    PrimeClass,
    classify_prime,
    cotype_counts_from_hnf,
    cotype_counts_from_pairs,
    euler_coefficient,
    local_coefficient,
    prime_classes_agree,
    quadratic_dedekind_check,
    root_pair_counts,
    sigma_roots,
)


def test_classification_examples():
    assert classify_prime(2) == PrimeClass.RAMIFIED
    assert classify_prime(3) == PrimeClass.RAMIFIED
    assert classify_prime(5) == PrimeClass.P2
    assert classify_prime(31) == PrimeClass.P1
    assert classify_prime(7) == PrimeClass.INERT
    with pytest.raises(NotPrime):
        classify_prime(9)


def test_classes_match_root_counts():
    assert prime_classes_agree(1000) == []


def test_local_coefficients():
    assert local_coefficient(PrimeClass.P1, 1, 0) == 3
    assert local_coefficient(PrimeClass.P1, 1, 1) == 6
    assert local_coefficient(PrimeClass.P2, 1, 0) == 1
    assert local_coefficient(PrimeClass.P2, 1, 1) == 0
    assert local_coefficient(PrimeClass.RAMIFIED, 2, 0) == 0
    assert local_coefficient(PrimeClass.INERT, 0, 0) == 1
    assert local_coefficient(PrimeClass.INERT, 1, 0) == 0


def test_euler_spot_values():
    assert euler_coefficient(31, 1, 1) == 3
    assert euler_coefficient(5, 5, 1) == 1
    assert euler_coefficient(2, 1, 1) == 1
    assert euler_coefficient(7, 1, 1) == 0
    assert euler_coefficient(6, 2, 1) == 1
    assert euler_coefficient(4, 4, 1) == 0


def test_euler_multiplicative():
    for a in [(5, 1, 1), (25, 5, 1), (31, 31, 1), (4, 2, 2)]:
        for b in [(7, 7, 7), (31, 1, 1), (11, 11, 1)]:
            if sympy.gcd(a[0], b[0]) == 1:
                t = tuple(x * y for x, y in zip(a, b))
                assert euler_coefficient(*t) == euler_coefficient(*a) * euler_coefficient(*b)


def test_enumeration_vs_pairs_small():
    assert cotype_counts_from_hnf(60) == cotype_counts_from_pairs(60)


def test_root_pair_counts_unramified():
    for n, (pairs, ideals) in root_pair_counts(60).items():
        if sympy.gcd(n, 6) == 1:
            assert pairs == ideals


def test_sigma_roots_gauss():
    F = MonicPoly([0, 1])
    assert sigma_roots(F, 4) == len(roots_mod(F, 4)) + len(roots_mod(F, 1))
    assert quadratic_dedekind_check(F, 30).ok


def test_dedekind_needs_quadratic(cubic):
    with pytest.raises(ValueError):
        quadratic_dedekind_check(cubic, 10)
