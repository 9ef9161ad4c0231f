from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from collatzkit import (extended_gcd, solve_linear_diophantine,
                        verify_collatz_solvability)

coeffs = st.integers(min_value=-1000, max_value=1000)


def brute_force_solvable(a: int, b: int, c: int) -> bool:
    """Independent decision procedure: solutions of a*x + b*y = c are
    periodic in x with period |b/gcd|, so searching one period of x (or y)
    settles solvability without any gcd reasoning on c."""
    if b != 0:
        for x in range(abs(b)):
            if (c - a * x) % b == 0:
                return True
        return False
    for y in range(abs(a)):
        if (c - b * y) % a == 0:
            return True
    return False


def test_extended_gcd_small():
    assert extended_gcd(0, 5) == (5, 0, 1)
    assert extended_gcd(5, 0) == (5, 1, 0)
    g, s, t = extended_gcd(240, 46)
    assert g == 2 and 240 * s + 46 * t == 2


@given(coeffs, coeffs)
def test_extended_gcd_contract(a, b):
    g, s, t = extended_gcd(a, b)
    assert g == gcd(a, b)
    assert a * s + b * t == g


def test_known_families():
    sol = solve_linear_diophantine(1, -3, 1)
    assert sol is not None and sol.gcd == 1
    # (4, 1) lies in the family
    s, t = sol.particular
    dx, dy = sol.step
    eta = (4 - s) // dx
    assert sol.point(eta) == (4, 1)

    assert solve_linear_diophantine(2, -1, 0) is not None
    assert solve_linear_diophantine(2, 4, 3) is None


def test_rejects_double_zero():
    with pytest.raises(ValueError):
        solve_linear_diophantine(0, 0, 5)


@given(coeffs, coeffs, coeffs)
@settings(max_examples=500)
def test_solvability_matches_brute_force(a, b, c):
    if a == 0 and b == 0:
        return
    sol = solve_linear_diophantine(a, b, c)
    assert (sol is not None) == brute_force_solvable(a, b, c)
    if sol is not None:
        s, t = sol.particular
        assert a * s + b * t == c
        for eta in range(-10, 11):
            x, y = sol.point(eta)
            assert a * x + b * y == c


def test_collatz_solvability_examples():
    assert verify_collatz_solvability(25).ok    # (76, 25) on x - 3y = 1
    assert verify_collatz_solvability(106).ok   # (53, 106) on 2x - y = 0
    assert verify_collatz_solvability(1).ok     # (4, 1) on x - 3y = 1


@given(st.integers(min_value=1, max_value=10**5))
@settings(max_examples=200)
def test_collatz_solvability_property(y0):
    assert verify_collatz_solvability(y0).ok
