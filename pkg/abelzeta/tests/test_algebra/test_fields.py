"""
Units tests for abelzeta.algebra.fields
"""
import numpy as np
import pytest

from abelzeta.algebra import (
    FieldElement,
    canonical_embedding,
    extension_ctx,
    field_ctx,
    rth_power_residue_degree,
)
from abelzeta.utils.exceptions import BudgetExceededError, FieldMismatchError
from abelzeta.utils.numbers import is_prime

#: Every field F_{p^n} with at most 256 elements.
SMALL_FIELDS = [
    (p, n) for p in range(2, 257) if is_prime(p) for n in range(1, 9) if p ** n <= 256
]

#: Every (p, a, d) with q = p^a and q^d <= 81.
RESIDUE_FIELDS = [
    (p, a, d)
    for p, a in SMALL_FIELDS
    if p ** a <= 81
    for d in range(1, 7)
    if p ** (a * d) <= 81
]

#: The largest extension searched for r-th roots by exhaustion.
RESIDUE_SEARCH_LIMIT = 3 ** 8


def test_field_ctx_is_memoized():
    assert field_ctx(2, 2) is field_ctx(2, 2)
    assert extension_ctx(field_ctx(2, 2), 2) is field_ctx(2, 4)


@pytest.mark.parametrize(
    "p, n, expected",
    [
        (2, 1, (0, 1)),
        (2, 2, (1, 1, 1)),
        (3, 2, (1, 0, 1)),
        (2, 3, (1, 1, 0, 1)),
    ],
)
def test_canonical_modulus(p, n, expected):
    """The modulus is the first monic irreducible polynomial in the
    canonical order."""
    assert field_ctx(p, n).modulus_coefficients == expected


@pytest.mark.parametrize("p, n", [(4, 1), (2, 0), (1, 1)])
def test_invalid_field(p, n):

    with pytest.raises(ValueError):
        field_ctx(p, n)


def test_field_budget():

    with pytest.raises(BudgetExceededError):
        field_ctx(3, 19, budget=2 ** 10)


def test_f4_arithmetic():

    f4 = field_ctx(2, 2)
    t = FieldElement(f4, 2)

    assert t * t == t + 1
    assert str(t * t) == "t+1"
    assert t ** 3 == 1
    assert (t + 1) * t == 1
    assert t + t == 0
    assert 1 / t == t + 1


@pytest.mark.parametrize("p, n", [(2, 3), (3, 2), (5, 1), (7, 1)])
def test_inverses(p, n):

    ctx = field_ctx(p, n)

    for value in range(1, ctx.order):

        element = FieldElement(ctx, value)
        assert element * element.inverse() == 1


@pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (3, 2)])
def test_frobenius_fixes_field(p, n):

    ctx = field_ctx(p, n)

    for value in range(ctx.order):

        element = FieldElement(ctx, value)

        assert element ** ctx.order == element
        assert element.frobenius(n) == element


@pytest.mark.parametrize("p, n", SMALL_FIELDS)
def test_frobenius_additive(p, n):
    """a -> a^p is additive and fixes exactly the prime subfield."""

    ctx = field_ctx(p, n)
    elements = ctx.elements()

    images = ctx.pow_arrays(elements, p)
    assert images.tolist() == [ctx.frobenius(value) for value in elements.tolist()]

    sums = ctx.add_arrays(elements[:, None], elements[None, :])
    image_sums = ctx.add_arrays(images[:, None], images[None, :])

    assert np.array_equal(images[sums], image_sums)
    assert np.flatnonzero(images == elements).tolist() == list(range(p))


def test_generator_is_primitive():

    ctx = field_ctx(3, 2)
    generator = FieldElement(ctx, ctx.generator)

    powers = {(generator ** k).value for k in range(ctx.order - 1)}
    assert powers == set(range(1, ctx.order))


def test_trace_to_prime():

    f4 = field_ctx(2, 2)

    assert FieldElement(f4, 1).trace_to_prime() == 0
    assert FieldElement(f4, 2).trace_to_prime() == 1


def test_mixed_contexts():

    with pytest.raises(FieldMismatchError):
        FieldElement(field_ctx(2, 2), 1) + FieldElement(field_ctx(2, 3), 1)


@pytest.mark.parametrize(
    "source, target", [((2, 1), (2, 4)), ((2, 2), (2, 4)), ((3, 1), (3, 2))]
)
def test_canonical_embedding(source, target):

    embedding = canonical_embedding(field_ctx(*source), field_ctx(*target))

    assert embedding.verify(samples=50, seed=3)
    assert embedding.degree == target[1] // source[1]

    for value in range(field_ctx(*source).order):
        assert embedding.preimage(embedding.map_value(value)) == value


def test_no_embedding():

    with pytest.raises(FieldMismatchError):
        canonical_embedding(field_ctx(2, 2), field_ctx(2, 3))


@pytest.mark.parametrize(
    "p, n, value, r, expected",
    [
        (3, 1, 1, 2, 1),
        (3, 2, 3, 2, 1),
        (3, 1, 2, 2, 2),
        (5, 1, 4, 2, 1),
        (5, 1, 2, 4, 4),
        (7, 1, 6, 3, 1),
        (7, 1, 2, 3, 3),
        (7, 1, 3, 3, 3),
    ],
)
def test_rth_power_residue_degree(p, n, value, r, expected):
    """The degree of the factors of T^r - u0 over F_q."""
    u0 = FieldElement(field_ctx(p, n), value)
    assert rth_power_residue_degree(u0, r) == expected


def test_rth_power_residue_degree_errors():

    ctx = field_ctx(5, 1)

    with pytest.raises(ValueError):
        rth_power_residue_degree(FieldElement(ctx, 0), 2)
    with pytest.raises(ValueError):
        rth_power_residue_degree(FieldElement(ctx, 2), 3)


@pytest.mark.parametrize("p, a, d", RESIDUE_FIELDS)
def test_rth_power_residue_degree_by_exhaustion(p, a, d):
    """u0 is an r-th power in the degree j extension exactly when the
    residue degree divides j."""

    q = p ** a
    ctx = field_ctx(p, a * d)

    for r in [r for r in range(1, 5) if (q - 1) % r == 0]:

        degrees = {
            value: rth_power_residue_degree(FieldElement(ctx, value), r, q)
            for value in range(1, ctx.order)
        }
        assert all(r % degree == 0 for degree in degrees.values())

        for j in range(1, r + 1):

            if ctx.order ** j > RESIDUE_SEARCH_LIMIT:
                break

            extension = extension_ctx(ctx, j)
            embedding = canonical_embedding(ctx, extension)

            powers = set(extension.pow_arrays(extension.elements()[1:], r).tolist())

            for value, degree in degrees.items():

                is_power = embedding.map_value(value) in powers
                assert is_power == (j % degree == 0)
