"""
Units tests for abelzeta.utils.numbers
"""
import pytest

from abelzeta.utils.numbers import (
    compare_with_sqrt,
    divisors,
    is_prime,
    mobius,
    prime_factors,
    prime_power_decomposition,
)


def test_divisors():

    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(7) == (1, 7)

    with pytest.raises(ValueError):
        divisors(0)


def test_prime_factors():

    assert prime_factors(1) == ()
    assert prime_factors(360) == (2, 3, 5)

    assert is_prime(7)
    assert not is_prime(9)


@pytest.mark.parametrize(
    "value, expected",
    [(1, 1), (2, -1), (4, 0), (6, 1), (12, 0), (30, -1), (35, 1)],
)
def test_mobius(value, expected):
    assert mobius(value) == expected


def test_mobius_invalid():

    with pytest.raises(ValueError):
        mobius(0)


@pytest.mark.parametrize(
    "value, expected", [(2, (2, 1)), (4, (2, 2)), (8, (2, 3)), (9, (3, 2)), (7, (7, 1))]
)
def test_prime_power_decomposition(value, expected):
    assert prime_power_decomposition(value) == expected


@pytest.mark.parametrize("value", [0, 1, 6, 12])
def test_not_prime_power(value):

    with pytest.raises(ValueError):
        prime_power_decomposition(value)


@pytest.mark.parametrize(
    "lhs, rational_part, sqrt_part, radicand, expected",
    [
        (5, 1, 2, 4, True),
        (6, 1, 2, 4, False),
        (2, 1, 1, 3, True),
        (3, 1, 1, 3, False),
        (0, 1, 0, 0, True),
        (10 ** 30 + 1, 10 ** 30, 1, 1, True),
        (10 ** 30 + 2, 10 ** 30, 1, 3, False),
    ],
)
def test_compare_with_sqrt(lhs, rational_part, sqrt_part, radicand, expected):
    assert compare_with_sqrt(lhs, rational_part, sqrt_part, radicand) == expected


def test_compare_with_sqrt_invalid():

    with pytest.raises(ValueError):
        compare_with_sqrt(1, 0, -1, 2)

    with pytest.raises(ValueError):
        compare_with_sqrt(1, 0, 1, -2)
