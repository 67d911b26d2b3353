"""
Units tests for abelzeta.funcfield.covers
"""
import numpy as np
import pytest

from abelzeta.funcfield import (
    CoverFamily,
    different_degree_formula,
    extend_constants,
    genus_formula,
    parse_cover_spec,
    random_cover_spec,
)
from abelzeta.tests.utils import create_cover
from abelzeta.utils.exceptions import CoverValidationError, SpecificationParseError


@pytest.mark.parametrize(
    "text, identifier",
    [
        ("as:q=2,f=x^3", "as:q=2,f=x^3"),
        ("kummer:q=3,m=2,f=x^3+2*x", "kummer:q=3,m=2,f=x^3+2*x"),
        (" kummer : q=3, m=2, f=x^3-x ", "kummer:q=3,m=2,f=x^3+2*x"),
        ("as:q=4,f=x^3+(t)*x", "as:q=4,f=x^3+(t)*x"),
    ],
)
def test_parse_cover_spec(text, identifier):

    spec = parse_cover_spec(text)

    assert spec.identifier == identifier
    assert parse_cover_spec(spec.identifier) == spec


@pytest.mark.parametrize(
    "text",
    [
        "hyper:q=2,f=x^3",
        "as:q=6,f=x^3",
        "as:q=2",
        "as:q=2,f=x^3,f=x",
        "as:q=2,m=1,f=x^3",
        "kummer:q=3,f=x",
        "kummer:q=3,m=two,f=x",
        "as:q=2,f=x^^3",
        "as:q=2,f",
    ],
)
def test_parse_cover_spec_errors(text):

    with pytest.raises(SpecificationParseError):
        parse_cover_spec(text)


@pytest.mark.parametrize(
    "text",
    [
        "kummer:q=2,m=2,f=x^3",
        "kummer:q=5,m=3,f=x^3+1",
        "kummer:q=3,m=2,f=x^3",
        "kummer:q=3,m=2,f=x^2+2*x+1",
        "kummer:q=5,m=2,f=1",
        "kummer:q=5,m=2,f=2*x+1",
        "as:q=2,f=x^2",
        "as:q=3,f=x^3+x",
        "as:q=3,f=2*x^2+1",
    ],
)
def test_invalid_covers(text):

    with pytest.raises(CoverValidationError):
        parse_cover_spec(text).validate()


def test_cover_properties():

    spec = create_cover("kummer:q=9,m=4,f=x^2+1")

    assert spec.family == CoverFamily.Kummer
    assert (spec.p, spec.q, spec.m, spec.degree) == (3, 9, 4, 4)
    assert spec.to_dict() == {"family": "kummer", "q": 9, "m": 4, "f": "x^2+1"}

    artin_schreier = create_cover("as:q=3,f=x^2+1")

    assert artin_schreier.degree == 3
    assert artin_schreier.m is None
    assert "m" not in artin_schreier.to_dict()


@pytest.mark.parametrize(
    "text, different_degree, genus",
    [
        ("as:q=2,f=x^3", 4, 1),
        ("as:q=2,f=x^5+x", 6, 2),
        ("as:q=3,f=x^2+1", 6, 1),
        ("kummer:q=3,m=2,f=x^3+2*x", 4, 1),
        ("kummer:q=3,m=2,f=x", 2, 0),
        ("kummer:q=5,m=4,f=x^2+2", 8, 1),
        ("kummer:q=4,m=3,f=x^3+(t)", 6, 1),
    ],
)
def test_genus_formula(text, different_degree, genus):

    spec = create_cover(text)

    assert different_degree_formula(spec) == different_degree
    assert genus_formula(spec) == genus


@pytest.mark.parametrize(
    "family, q, degree, m",
    [
        (CoverFamily.ArtinSchreier, 2, 7, None),
        (CoverFamily.ArtinSchreier, 9, 4, None),
        (CoverFamily.Kummer, 5, 6, 2),
        (CoverFamily.Kummer, 7, 3, 3),
    ],
)
def test_random_cover_spec(family, q, degree, m):

    first = random_cover_spec(family, q, degree, np.random.default_rng(11), m)
    second = random_cover_spec(family, q, degree, np.random.default_rng(11), m)

    assert first == second
    assert first.family == family
    assert first.q == q
    assert first.f.degree == degree
    assert first.f.is_monic


@pytest.mark.parametrize(
    "family, q, degree, m",
    [
        (CoverFamily.ArtinSchreier, 2, 4, None),
        (CoverFamily.Kummer, 5, 3, 3),
        (CoverFamily.Kummer, 5, 3, None),
    ],
)
def test_random_cover_spec_errors(family, q, degree, m):

    with pytest.raises(CoverValidationError):
        random_cover_spec(family, q, degree, np.random.default_rng(0), m)


def test_extend_constants():

    spec = create_cover("kummer:q=3,m=2,f=x^3+2*x")
    extended = extend_constants(spec, 2)

    assert extended.q == 9
    assert extended.identifier == "kummer:q=9,m=2,f=x^3+2*x"
    assert genus_formula(extended) == genus_formula(spec)
