"""
Units tests for abelzeta.algebra.orbits
"""
import pytest

from abelzeta.algebra import (
    FieldElement,
    count_monic_irreducibles,
    field_ctx,
    frobenius_orbits,
    minimal_polynomial,
    parse_poly,
)
from abelzeta.algebra.orbits import orbit_representatives
from abelzeta.utils.exceptions import BudgetExceededError


def test_orbits_of_f4():

    orbits = list(frobenius_orbits(field_ctx(2), 2))

    assert [orbit.value for orbit in orbits] == [2]
    assert minimal_polynomial(orbits[0], field_ctx(2)) == parse_poly(
        "x^2+x+1", field_ctx(2)
    )


@pytest.mark.parametrize("p, n", [(2, 1), (3, 1), (2, 2), (5, 1)])
@pytest.mark.parametrize("degree", [1, 2, 3])
def test_orbit_counts(p, n, degree):
    """There is one orbit of exact length d per monic irreducible
    polynomial of degree d."""
    base = field_ctx(p, n)
    orbits = list(frobenius_orbits(base, degree))

    assert len(orbits) == count_monic_irreducibles(base.order, degree)
    assert [orbit.value for orbit in orbits] == sorted(orbit.value for orbit in orbits)

    for orbit in orbits:

        conjugates = {orbit.value}
        image = orbit

        for _ in range(degree - 1):
            image = image ** base.order
            conjugates.add(image.value)

        assert len(conjugates) == degree
        # The representative is the least element of its orbit.
        assert orbit.value == min(conjugates)


@pytest.mark.parametrize("p, n, degree", [(2, 1, 4), (3, 1, 3), (2, 2, 3)])
def test_minimal_polynomials(p, n, degree):

    base = field_ctx(p, n)

    for orbit in frobenius_orbits(base, degree):

        polynomial = minimal_polynomial(orbit, base)

        assert polynomial.degree == degree
        assert polynomial.is_monic
        assert polynomial.evaluate(orbit).is_zero


def test_minimal_polynomial_of_subfield_element():

    f16 = field_ctx(2, 4)
    one = FieldElement(f16, 1)

    assert minimal_polynomial(one, field_ctx(2)) == parse_poly("x+1", field_ctx(2))


def test_orbit_budget():

    with pytest.raises(BudgetExceededError):
        orbit_representatives(field_ctx(3), 12, budget=3 ** 6)


def test_invalid_degree():

    with pytest.raises(ValueError):
        orbit_representatives(field_ctx(2), 0)
