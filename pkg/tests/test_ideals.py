import json

import pytest

from congruence_ideals.ideals import (
    IdealHNF,
    NotAnIdeal,
    _enumerate_ideals_slow,
    brute_force_ideals,
    contains,
    divisibility_holds,
    enumerate_ideals,
    integer_content,
    invariant_factors,
    invariant_factors_snf,
    is_ideal,
    multiply,
    norm,
    principal_ideal,
    unit_ideal,
)
from congruence_ideals.order_core import MonicPoly


def test_example_ideal(cubic):
    I = IdealHNF(cubic, [[1, 0, 1], [0, 1, 2], [0, 0, 5]])
    assert norm(I) == 5
    assert invariant_factors(I) == (5, 1, 1)
    assert invariant_factors_snf(IdealHNF(cubic, [[1, 3, 4], [0, 5, 0], [0, 0, 5]])) == (5, 5, 1)


def test_rejects_non_ideal(cubic):
    assert not is_ideal(cubic, [[1, 0, 0], [0, 1, 0], [0, 0, 5]])
    with pytest.raises(NotAnIdeal):
        IdealHNF(cubic, [[1, 0, 0], [0, 1, 0], [0, 0, 5]])
    with pytest.raises(NotAnIdeal):
        IdealHNF(cubic, [[1, 0, 9], [0, 1, 2], [0, 0, 5]])  # not reduced


@pytest.mark.parametrize("coeffs,top", [([0, 0, -2], 40), ([0, 1], 120), ([0, -2], 120), ([1, 2, 3], 30)])
def test_enumeration_matches_brute_force(coeffs, top):
    F = MonicPoly(coeffs)
    for n in range(1, top + 1):
        assert enumerate_ideals(F, n) == brute_force_ideals(F, n)


def test_slow_path_matches(cubic):
    for n in (8, 25, 31, 50):
        assert _enumerate_ideals_slow(cubic, n) == enumerate_ideals(cubic, n)


def test_divisibility_is_necessary(cubic, gauss):
    for F in (cubic, gauss):
        for n in range(1, 41):
            for I in brute_force_ideals(F, n):
                assert divisibility_holds(I.B)
                assert invariant_factors(I) == invariant_factors_snf(I)


def test_multiplication_laws(cubic):
    ideals = [I for n in (2, 3, 5, 10, 25) for I in enumerate_ideals(cubic, n)]
    for I in ideals:
        assert multiply(I, unit_ideal(cubic)) == I
        for J in ideals:
            IJ = multiply(I, J)
            assert IJ == multiply(J, I)
            assert norm(IJ) == norm(I) * norm(J)
            assert contains(I, IJ) and contains(J, IJ)
    A, B, C = ideals[0], ideals[3], ideals[-1]
    assert multiply(multiply(A, B), C) == multiply(A, multiply(B, C))


def test_contains_matches_brute(cubic):
    ideals = [I for n in range(1, 13) for I in enumerate_ideals(cubic, n)]
    for I in ideals:
        for J in ideals:
            # J inside I iff I + J = I
            summed = IdealHNF.from_generators(cubic, list(I.B) + list(J.B))
            assert contains(I, J) == (summed == I)


def test_principal_ideal(cubic):
    I = principal_ideal(cubic, [0, 1, 2])
    assert norm(I) == 10
    assert integer_content(principal_ideal(cubic, [3, 0, 0])) == 3
    assert principal_ideal(cubic, [1, 1, 1]) == unit_ideal(cubic)


def test_json_roundtrip(cubic):
    for I in enumerate_ideals(cubic, 20):
        blob = json.dumps(I.to_json())
        assert IdealHNF.from_json(json.loads(blob)) == I
