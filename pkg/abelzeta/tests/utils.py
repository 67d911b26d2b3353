"""
Slow but obviously correct reference implementations, used to check the
vectorized engine on small fields.
"""
from abelzeta.algebra import FieldElement, Poly
from abelzeta.funcfield import CoverFamily, extend_constants, parse_cover_spec


def create_cover(text):
    """Parses and validates the text form of a cover."""
    return parse_cover_spec(text).validate()


def monic_polynomials(base, degree):
    """Yields every monic polynomial of a given degree over a field."""

    for tail in range(base.order ** degree):
        yield Poly.from_encoding(base, tail + base.order ** degree)


def is_irreducible_by_trial_division(f):
    """Whether no monic polynomial of degree at most deg(f) / 2 divides f."""

    for degree in range(1, f.degree // 2 + 1):

        for divisor in monic_polynomials(f.base, degree):

            if (f % divisor).is_zero:
                return False

    return True


def roots_by_search(f, extension):
    """The encodings of the roots of f in an extension field, found one
    element at a time."""
    return [
        value
        for value in range(extension.order)
        if f.evaluate(FieldElement(extension, value)).is_zero
    ]


def affine_point_count(spec, degree):
    """Counts the solutions (x0, y0) over F_{q^degree} of the defining
    equation of a cover by trying every pair."""

    extended = extend_constants(spec, degree)
    extension = extended.base

    elements = [FieldElement(extension, value) for value in range(extension.order)]

    count = 0

    for x0 in elements:

        value = extended.f.evaluate(x0)

        for y0 in elements:

            if spec.family == CoverFamily.ArtinSchreier:
                solves = y0 ** spec.p - y0 == value
            else:
                solves = y0 ** spec.m == value

            count += int(solves)

    return count
