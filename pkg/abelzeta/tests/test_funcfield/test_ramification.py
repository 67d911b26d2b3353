"""
Units tests for abelzeta.funcfield.ramification
"""
import numpy as np
import pytest

from abelzeta.funcfield import (
    CoverFamily,
    different_degree_formula,
    genus_formula,
    genus_via_riemann_hurwitz,
    ramification_report,
    random_cover_spec,
)
from abelzeta.tests.utils import create_cover
from abelzeta.utils.exceptions import InvariantBreachError


def test_artin_schreier_ramification():

    report = ramification_report(create_cover("as:q=2,f=x^3"))

    assert len(report.entries) == 1

    entry = report.entries[0]

    assert entry.place.is_infinite
    assert (entry.e, entry.different_exponent, entry.jump_count) == (2, 4, 1)

    assert report.different_degree == 4
    assert report.genus == 1


def test_kummer_ramification():

    report = ramification_report(create_cover("kummer:q=3,m=2,f=x^3+2*x"))

    # x^3 - x = x (x + 1) (x + 2), and infinity ramifies as deg f is odd.
    assert [str(entry.place) for entry in report.entries] == [
        "(x)",
        "(x+1)",
        "(x+2)",
        "infinity",
    ]
    assert all(
        entry.e == 2 and entry.different_exponent == 1 for entry in report.entries
    )

    assert report.different_degree == 4
    assert report.genus == 1


def test_unramified_infinity():

    report = ramification_report(create_cover("kummer:q=5,m=2,f=x^4+2"))

    assert not any(entry.place.is_infinite for entry in report.entries)
    assert report.different_degree == 4
    assert report.genus == 1


def test_genus_zero():

    report = ramification_report(create_cover("kummer:q=3,m=2,f=x"))

    assert report.different_degree == 2
    assert report.genus == 0

    value = report.to_dict()

    assert value["m"] == 2
    assert value["different_degree"] == "2"
    assert [entry["place"] for entry in value["ramified"]] == ["(x)", "infinity"]


def test_genus_via_riemann_hurwitz():

    assert genus_via_riemann_hurwitz(2, 4) == 1
    assert genus_via_riemann_hurwitz(3, 4) == 0

    with pytest.raises(InvariantBreachError):
        genus_via_riemann_hurwitz(2, 3)
    with pytest.raises(InvariantBreachError):
        genus_via_riemann_hurwitz(5, 2)


@pytest.mark.parametrize(
    "family, q, m, degrees",
    [
        (CoverFamily.ArtinSchreier, 2, None, [1, 3, 5, 9]),
        (CoverFamily.ArtinSchreier, 3, None, [1, 2, 4, 5]),
        (CoverFamily.ArtinSchreier, 4, None, [3, 5]),
        (CoverFamily.Kummer, 3, 2, [1, 2, 3, 4, 6]),
        (CoverFamily.Kummer, 5, 4, [2, 3, 5]),
        (CoverFamily.Kummer, 7, 6, [2, 4]),
        (CoverFamily.Kummer, 9, 8, [3]),
    ],
)
def test_ramification_matches_formulas(family, q, m, degrees):
    """The different found place by place has the closed form degree."""
    rng = np.random.default_rng(5)

    for degree in degrees:

        spec = random_cover_spec(family, q, degree, rng, m)
        report = ramification_report(spec)

        assert report.different_degree == different_degree_formula(spec)
        assert report.genus == genus_formula(spec)
