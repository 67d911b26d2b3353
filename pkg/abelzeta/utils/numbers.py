"""
Elementary number theory on exact integers.
"""
import functools

import sympy


def is_prime(value):
    """bool: Whether `value` is a prime number."""
    return bool(sympy.isprime(value))


@functools.lru_cache(maxsize=4096)
def divisors(value):
    """Returns the positive divisors of a positive integer in ascending order.

    Parameters
    ----------
    value: int
        A positive integer.

    Returns
    -------
    tuple of int
    """
    if value < 1:
        raise ValueError(f"Only positive integers have divisors, not {value}.")

    return tuple(int(x) for x in sympy.divisors(value))


@functools.lru_cache(maxsize=4096)
def prime_factors(value):
    """Returns the distinct prime factors of a positive integer in ascending
    order.

    Parameters
    ----------
    value: int
        A positive integer.

    Returns
    -------
    tuple of int
    """
    if value < 1:
        raise ValueError(f"Only positive integers can be factored, not {value}.")

    return tuple(sorted(int(x) for x in sympy.factorint(value)))


def mobius(value):
    """The Möbius function.

    Parameters
    ----------
    value: int
        A positive integer.

    Returns
    -------
    int
        -1, 0 or 1.
    """
    if value < 1:
        raise ValueError(f"The Möbius function is defined for k >= 1, not {value}.")

    factorization = sympy.factorint(value)

    if any(exponent > 1 for exponent in factorization.values()):
        return 0

    return -1 if len(factorization) % 2 == 1 else 1


def prime_power_decomposition(value):
    """Splits a prime power ``q = p^n`` into ``(p, n)``.

    Parameters
    ----------
    value: int
        The prime power.

    Returns
    -------
    tuple of int
        The prime `p` and the exponent `n`.

    Raises
    ------
    ValueError
        If `value` is not a prime power.
    """
    if value < 2:
        raise ValueError(f"{value} is not a prime power.")

    factorization = sympy.factorint(value)

    if len(factorization) != 1:
        raise ValueError(f"{value} is not a prime power.")

    (prime, exponent), = factorization.items()
    return int(prime), int(exponent)


def compare_with_sqrt(lhs, rational_part, sqrt_part, radicand):
    """Exactly decides ``lhs <= rational_part + sqrt_part * sqrt(radicand)``
    for integers with ``sqrt_part >= 0`` and ``radicand >= 0``.

    Returns
    -------
    bool
    """
    if sqrt_part < 0 or radicand < 0:
        raise ValueError("Only non-negative multiples of square roots are supported.")

    difference = lhs - rational_part

    if difference <= 0:
        return True

    return difference * difference <= sqrt_part * sqrt_part * radicand
