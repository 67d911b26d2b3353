"""
Units tests for abelzeta.funcfield.places
"""
import pytest

from abelzeta.algebra import FieldElement, field_ctx, parse_poly
from abelzeta.funcfield import (
    RationalPlace,
    SplittingType,
    count_places,
    count_places_with_work,
    enumerate_places,
    point_count_bruteforce,
    point_count_sums,
    rational_place_counts,
    split_place,
    sums_from_place_counts,
)
from abelzeta.tests.utils import affine_point_count, create_cover
from abelzeta.utils.exceptions import BudgetExceededError

#: Covers of small genus over small fields, with various behaviours at
#: infinity.
SMALL_COVERS = [
    "as:q=2,f=x^3",
    "as:q=2,f=x^5+x^2+1",
    "as:q=3,f=x^2+1",
    "as:q=4,f=x^3+(t)*x",
    "kummer:q=3,m=2,f=x^3+2*x",
    "kummer:q=3,m=2,f=x",
    "kummer:q=5,m=4,f=x^2+2",
    "kummer:q=4,m=3,f=x^3+(t)",
    "kummer:q=7,m=3,f=x^2+x+3",
]


def _place_at(spec, value):
    return RationalPlace.from_root(FieldElement(spec.base, value), spec.base, 1)


def test_artin_schreier_splitting():

    spec = create_cover("as:q=2,f=x^3")

    infinity = RationalPlace.infinity(spec.base)

    assert split_place(spec, infinity) == SplittingType(2, 1, 1)
    # f(0) = 0 has trace zero and f(1) = 1 does not.
    assert split_place(spec, _place_at(spec, 0)) == SplittingType(1, 1, 2)
    assert split_place(spec, _place_at(spec, 1)) == SplittingType(1, 2, 1)


def test_kummer_splitting():

    spec = create_cover("kummer:q=5,m=4,f=x^2+2")

    # The residues f(0) = 2, f(1) = 3, f(2) = 1 and f(3) = 1.
    assert tuple(split_place(spec, _place_at(spec, 0))) == (1, 4, 1)
    assert tuple(split_place(spec, _place_at(spec, 1))) == (1, 4, 1)
    assert tuple(split_place(spec, _place_at(spec, 2))) == (1, 1, 4)
    assert tuple(split_place(spec, RationalPlace.infinity(spec.base))) == (2, 1, 2)

    # x^2 + 2 is irreducible, so its place is totally ramified.
    place = RationalPlace.from_polynomial(parse_poly("x^2+2", spec.base))
    assert tuple(split_place(spec, place)) == (4, 1, 1)


def test_split_place_wrong_field():

    spec = create_cover("as:q=2,f=x^3")

    with pytest.raises(ValueError):
        split_place(spec, RationalPlace.infinity(field_ctx(3)))


def test_enumerate_places():

    places = list(enumerate_places(field_ctx(2), 2))

    assert [str(place) for place in places] == [
        "infinity",
        "(x)",
        "(x+1)",
        "(x^2+x+1)",
    ]
    assert [place.degree for place in places] == [1, 1, 1, 2]


@pytest.mark.parametrize(
    "text, bound, expected",
    [
        ("as:q=2,f=x^3", 2, [3, 3]),
        ("kummer:q=3,m=2,f=x^3+2*x", 2, [4, 6]),
        ("kummer:q=3,m=2,f=x", 2, [4, 3]),
    ],
)
def test_count_places(text, bound, expected):
    assert count_places(create_cover(text), bound) == expected


def test_count_places_work():

    counts, work = count_places_with_work(create_cover("as:q=2,f=x^3"), 3)

    assert counts == count_places(create_cover("as:q=2,f=x^3"), 3)
    # infinity and the 2 + 1 + 2 finite places of degrees one to three.
    assert work.places_enumerated == 6
    assert work.elements_visited == 2 + 4 + 8


def test_count_places_budget():

    with pytest.raises(BudgetExceededError):
        count_places(create_cover("as:q=2,f=x^3"), 12, budget=2 ** 10)


def test_rational_place_counts():
    assert rational_place_counts(2, 4) == [3, 1, 2, 3]
    assert rational_place_counts(3, 3) == [4, 3, 8]


def test_sums_from_place_counts():
    assert sums_from_place_counts([3, 3, 2]) == [3, 9, 9]


@pytest.mark.parametrize("text", SMALL_COVERS[:5])
@pytest.mark.parametrize("degree", [1, 2])
def test_point_count_bruteforce(text, degree):
    """Every cover here has a single place of degree one above infinity."""
    spec = create_cover(text)

    if spec.q ** degree > 16:
        pytest.skip("The pair enumeration is quadratic in the field size.")

    assert point_count_bruteforce(spec, degree) == affine_point_count(spec, degree) + 1


@pytest.mark.parametrize("text", SMALL_COVERS)
def test_sums_agree_with_bruteforce(text):
    """S_k from the splitting of places equals the number of points over
    F_{q^k}."""
    spec = create_cover(text)
    bound = 3 if spec.q > 4 else 4

    expected = [point_count_bruteforce(spec, k) for k in range(1, bound + 1)]
    assert point_count_sums(spec, bound) == expected
