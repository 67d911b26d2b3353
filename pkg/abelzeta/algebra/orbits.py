"""
Closed points of the affine line over F_q, found as Frobenius orbits in the
extension fields F_{q^d}.

A point of degree d corresponds to an orbit of x -> x^q of exact length d,
and to the monic irreducible polynomial of degree d whose roots form the
orbit. Working with discrete logarithms, the action of Frobenius on g^k is
k -> k*q (mod q^d - 1), which lets whole fields be processed with numpy.
"""
import logging

import numpy as np

from abelzeta.algebra.fields import FieldElement, canonical_embedding, extension_ctx
from abelzeta.options import resolve_budget
from abelzeta.utils import check_budget
from abelzeta.utils.exceptions import InvariantBreachError

logger = logging.getLogger(__name__)

_CHUNK_SIZE = 2 ** 20


def orbit_representatives(base, degree, budget=None):
    """Finds one element of every Frobenius orbit of exact length `degree`,
    choosing the element with the smallest encoding.

    Parameters
    ----------
    base: FieldCtx
        The field F_q.
    degree: int
        The orbit length d.
    budget: int, optional
        The largest q^d allowed.

    Returns
    -------
    FieldCtx
        The extension F_{q^d}.
    numpy.ndarray
        The representatives in ascending order of encoding.
    """
    if degree < 1:
        raise ValueError(f"The degree must be positive, not {degree}.")

    budget = resolve_budget(budget)
    check_budget(base.order ** degree, budget, "field elements")

    extension = extension_ctx(base, degree, budget)

    if degree == 1:
        return extension, extension.elements()

    order = extension.order
    exp_table = extension.exp_table
    q = base.order

    representatives = []

    for start in range(0, order - 1, _CHUNK_SIZE):

        logs = np.arange(start, min(start + _CHUNK_SIZE, order - 1), dtype=np.int64)

        conjugates = logs.copy()
        smallest = exp_table[logs]
        period = np.full(len(logs), degree, dtype=np.int64)

        for i in range(1, degree):

            conjugates = (conjugates * q) % (order - 1)
            smallest = np.minimum(smallest, exp_table[conjugates])

            returned = (conjugates == logs) & (period == degree)
            period[returned] = i

        chosen = (period == degree) & (exp_table[logs] == smallest)
        representatives.append(exp_table[logs[chosen]])

    representatives = np.sort(np.concatenate(representatives))

    logger.debug(
        f"Found {len(representatives)} Frobenius orbits of length {degree} "
        f"over F_{q}."
    )

    return extension, representatives


def conjugate_arrays(base, extension, elements, degree):
    """Returns the Frobenius conjugates a, a^q, ..., a^(q^(degree-1)) of many
    nonzero elements, one column per power."""
    elements = np.asarray(elements, np.int64)
    order = extension.order

    logs = extension.log_table[elements]

    if (logs < 0).any():
        raise ValueError("Conjugates are only tabulated for nonzero elements.")

    columns = []

    for _ in range(degree):
        columns.append(extension.exp_table[logs])
        logs = (logs * base.order) % (order - 1)

    return np.stack(columns, axis=-1)


def minimal_polynomial_arrays(base, extension, elements, degree):
    """Computes the minimal polynomials over F_q of many elements of exact
    degree `degree`, as the products of x minus each conjugate.

    Returns
    -------
    numpy.ndarray
        One row of base field encodings (constant term first, length
        degree + 1) per element.
    """
    elements = np.asarray(elements, np.int64)

    if degree == 1:

        embedding = canonical_embedding(base, extension)
        negated = extension.mul_arrays(elements, extension.from_int(-1))

        constant = embedding.preimage_array(negated)
        return np.stack([constant, np.ones_like(constant)], axis=-1)

    conjugates = conjugate_arrays(base, extension, elements, degree)
    minus_one = extension.from_int(-1)

    coefficients = np.zeros((len(elements), degree + 1), dtype=np.int64)
    coefficients[:, 0] = 1

    for i in range(degree):

        negated = extension.mul_arrays(conjugates[:, i], minus_one)
        updated = extension.mul_arrays(coefficients, negated[:, None])
        updated[:, 1:] = extension.add_arrays(updated[:, 1:], coefficients[:, :-1])

        coefficients = updated

    embedding = canonical_embedding(base, extension)
    pulled_back = embedding.preimage_array(coefficients)

    if (pulled_back < 0).any():
        raise InvariantBreachError(
            "minimal-polynomial", "A Frobenius orbit product left the base field."
        )

    return pulled_back


def irreducible_arrays(base, degree, budget=None):
    """Lists the monic irreducible polynomials of a given degree in canonical
    order together with one root of each.

    Returns
    -------
    FieldCtx
        The extension F_{q^d} holding the roots.
    numpy.ndarray
        A root of each polynomial.
    numpy.ndarray
        The coefficient rows of the polynomials (constant term first).
    """
    extension, roots = orbit_representatives(base, degree, budget)
    coefficients = minimal_polynomial_arrays(base, extension, roots, degree)

    # The canonical order compares the highest coefficients first, which
    # lexsort takes from the last key.
    order = np.lexsort(tuple(coefficients[:, i] for i in range(degree + 1)))

    return extension, roots[order], coefficients[order]


def frobenius_orbits(base, degree, budget=None):
    """Yields one element of every Frobenius orbit of exact length `degree`,
    that is one root of every closed point of degree d of the affine line,
    ordered by the encoding of the representative.

    Parameters
    ----------
    base: FieldCtx
        The field F_q.
    degree: int
        The degree d.
    budget: int, optional
        The largest q^d allowed.

    Yields
    ------
    FieldElement
        An element of F_{q^d}.
    """
    extension, representatives = orbit_representatives(base, degree, budget)

    for value in representatives.tolist():
        yield FieldElement(extension, value)


def minimal_polynomial(element, base):
    """Returns the minimal polynomial over F_q of an element of F_{q^d}.

    Parameters
    ----------
    element: FieldElement
        An element of an extension of `base`.
    base: FieldCtx
        The field F_q.

    Returns
    -------
    Poly
        The monic minimal polynomial, of degree equal to the length of the
        element's Frobenius orbit.
    """
    from abelzeta.algebra.polynomials import Poly

    extension = element.ctx

    conjugates = [element.value]

    while True:

        image = extension.pow(conjugates[-1], base.order)

        if image == element.value:
            break

        conjugates.append(image)

    product = Poly.one(extension)

    for conjugate in conjugates:
        product = product * Poly(extension, (extension.neg(conjugate), 1))

    embedding = canonical_embedding(base, extension)

    return Poly(base, [embedding.preimage(c) for c in product.coefficients])
