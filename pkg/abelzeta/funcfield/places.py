"""
Places of F_q(x), their splitting in a cover, and place counts of the cover.
"""
import logging
import math
from enum import Enum

import numpy as np

from abelzeta.algebra import (
    FieldElement,
    Poly,
    canonical_embedding,
    count_monic_irreducibles,
    extension_ctx,
    find_roots,
    minimal_polynomial,
    rth_power_residue_degree,
)
from abelzeta.algebra.orbits import orbit_representatives
from abelzeta.funcfield.covers import CoverFamily, extend_constants
from abelzeta.options import resolve_budget
from abelzeta.utils import check_budget
from abelzeta.utils.exceptions import InvariantBreachError
from abelzeta.utils.numbers import divisors

logger = logging.getLogger(__name__)


class PlaceKind(Enum):
    """Whether a place of F_q(x) is a zero of an irreducible polynomial or
    the pole of x."""

    Finite = "finite"
    Infinity = "infinity"


class RationalPlace:
    """A place of the rational function field F_q(x).

    A finite place is described by its monic irreducible polynomial and by
    one of its roots in F_{q^d}; either is derived from the other on demand.
    """

    @property
    def kind(self):
        """PlaceKind: The kind of place."""
        return self._kind

    @property
    def base(self):
        """FieldCtx: The constant field F_q."""
        return self._base

    @property
    def degree(self):
        """int: The degree of the place."""
        return self._degree

    @property
    def is_infinite(self):
        return self._kind == PlaceKind.Infinity

    @property
    def polynomial(self):
        """Poly: The monic irreducible polynomial of a finite place."""
        if self.is_infinite:
            return None

        if self._polynomial is None:
            self._polynomial = minimal_polynomial(self._root, self._base)

        return self._polynomial

    @property
    def root(self):
        """FieldElement: A root in F_{q^d} of the polynomial of a finite
        place, the least one unless the place was built from a root."""
        if self.is_infinite:
            return None

        if self._root is None:
            extension = extension_ctx(self._base, self._degree)
            self._root = find_roots(self._polynomial, extension)[0]

        return self._root

    def __init__(self, kind, base, degree=1, polynomial=None, root=None):
        """Use :meth:`infinity`, :meth:`from_polynomial` or
        :meth:`from_root` instead of constructing places directly."""
        self._kind = kind
        self._base = base
        self._degree = degree
        self._polynomial = polynomial
        self._root = root

    @classmethod
    def infinity(cls, base):
        """RationalPlace: The pole of x."""
        return cls(PlaceKind.Infinity, base)

    @classmethod
    def from_polynomial(cls, polynomial):
        """RationalPlace: The finite place of a monic irreducible polynomial.
        Irreducibility is not re-checked."""

        if polynomial.degree < 1 or not polynomial.is_monic:
            raise ValueError(f"{polynomial} does not define a place.")

        return cls(
            PlaceKind.Finite, polynomial.base, polynomial.degree, polynomial=polynomial
        )

    @classmethod
    def from_root(cls, root, base, degree):
        """RationalPlace: The finite place at which x takes the value `root`,
        an element of exact degree `degree` over F_q."""
        return cls(PlaceKind.Finite, base, degree, root=root)

    def __str__(self):
        return "infinity" if self.is_infinite else f"({self.polynomial})"

    def __repr__(self):
        return f"RationalPlace({self}, degree={self._degree})"

    def __eq__(self, other):

        if not isinstance(other, RationalPlace) or other.kind != self._kind:
            return False

        return self.is_infinite or self.polynomial == other.polynomial

    def __hash__(self):
        return hash((self._kind, None if self.is_infinite else self.polynomial))


class SplittingType:
    """How a place of F_q(x) decomposes in a cover: `g_count` places above
    it, each with ramification index `e` and residue degree `f_res`."""

    __slots__ = ("e", "f_res", "g_count")

    def __init__(self, e, f_res, g_count):
        self.e = e
        self.f_res = f_res
        self.g_count = g_count

    def __iter__(self):
        return iter((self.e, self.f_res, self.g_count))

    def __eq__(self, other):
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return f"SplittingType(e={self.e}, f_res={self.f_res}, g_count={self.g_count})"

    def to_dict(self):
        return {"e": self.e, "f": self.f_res, "g": self.g_count}


def _valuation_and_unit(f, place):
    """The multiplicity v of a finite place in f and the residue of
    f / P^v at the place."""
    polynomial = place.polynomial

    valuation = 0
    remaining = f

    while True:

        quotient, remainder = divmod(remaining, polynomial)

        if not remainder.is_zero:
            break

        valuation += 1
        remaining = quotient

    return valuation, remaining.evaluate(place.root)


def split_place(spec, place):
    """Determines the splitting of a place of F_q(x) in a validated cover.

    Parameters
    ----------
    spec: CoverSpec
        The cover.
    place: RationalPlace
        The place of F_q(x).

    Returns
    -------
    SplittingType
    """
    if place.base is not spec.base:
        raise ValueError(f"{place!r} is not a place over the constant field of {spec}.")

    if spec.family == CoverFamily.ArtinSchreier:

        if place.is_infinite:
            splitting = SplittingType(spec.p, 1, 1)

        else:

            residue = spec.f.evaluate(place.root)

            if residue.trace_to_prime().is_zero:
                splitting = SplittingType(1, 1, spec.p)
            else:
                splitting = SplittingType(1, spec.p, 1)

    else:

        if place.is_infinite:
            valuation = -spec.f.degree
            unit = FieldElement(spec.base, spec.f.leading_coefficient)
        else:
            residue = spec.f.evaluate(place.root)

            if residue.is_zero:
                valuation, unit = _valuation_and_unit(spec.f, place)
            else:
                valuation, unit = 0, residue

        r = math.gcd(spec.m, valuation)
        f_res = rth_power_residue_degree(unit, r, spec.q)

        splitting = SplittingType(spec.m // r, f_res, r // f_res)

    if splitting.e * splitting.f_res * splitting.g_count != spec.degree:

        raise InvariantBreachError(
            "fundamental-identity",
            f"{spec}: e f g = {splitting.e * splitting.f_res * splitting.g_count} "
            f"at {place} differs from the degree {spec.degree}.",
        )

    return splitting


def enumerate_places(base, bound, budget=None):
    """Yields every place of F_q(x) of degree at most `bound`: infinity
    first, then the finite places degree by degree, each degree ordered by
    the encoding of the least root.

    Parameters
    ----------
    base: FieldCtx
        The constant field.
    bound: int
        The largest degree.
    budget: int, optional
        The largest extension field allowed.

    Yields
    ------
    RationalPlace
    """
    if bound < 1:
        return

    yield RationalPlace.infinity(base)

    for degree in range(1, bound + 1):

        extension, roots = orbit_representatives(base, degree, budget)

        for root in roots.tolist():
            yield RationalPlace.from_root(FieldElement(extension, root), base, degree)


class PlaceCountWork:
    """Exact counters of the work done while counting places."""

    def __init__(self, places_enumerated=0, elements_visited=0):
        self.places_enumerated = places_enumerated
        self.elements_visited = elements_visited

    def __iadd__(self, other):
        self.places_enumerated += other.places_enumerated
        self.elements_visited += other.elements_visited
        return self


def count_places_of_degree(spec, degree, bound, budget=None):
    """Counts the places of the cover lying over the finite places of
    F_q(x) of one degree, keeping only those of degree at most `bound`.

    Unramified places are split in bulk: for a Kummer cover the residue
    u0 = f(alpha) has residue degree m / gcd(m, log u0), and for an
    Artin-Schreier cover the place splits iff the absolute trace of f(alpha)
    vanishes. Places dividing f go through :func:`split_place`.

    Returns
    -------
    dict of int and int
        The number of places of the cover of each degree.
    PlaceCountWork
        The work performed.
    """
    extension, roots = orbit_representatives(spec.base, degree, budget)

    embedding = canonical_embedding(spec.base, extension)
    residues = extension.evaluate_everywhere(
        embedding.map_array(spec.f.coefficients), roots
    )

    counts = {}

    def accumulate(place_degree, number):

        if place_degree <= bound and number > 0:
            counts[place_degree] = counts.get(place_degree, 0) + int(number)

    if spec.family == CoverFamily.ArtinSchreier:

        split = extension.trace_arrays(residues) == 0

        accumulate(degree, spec.p * np.count_nonzero(split))
        accumulate(degree * spec.p, np.count_nonzero(~split))

    else:

        ramified = residues == 0

        logs = extension.log_table[residues[~ramified]]
        residue_degrees = spec.m // np.gcd(spec.m, logs % spec.m)

        for residue_degree, number in zip(
            *np.unique(residue_degrees, return_counts=True)
        ):
            accumulate(
                degree * int(residue_degree), (spec.m // int(residue_degree)) * number
            )

        for root in roots[ramified].tolist():

            place = RationalPlace.from_root(
                FieldElement(extension, root), spec.base, degree
            )
            splitting = split_place(spec, place)

            accumulate(degree * splitting.f_res, splitting.g_count)

    work = PlaceCountWork(len(roots), extension.order)
    return counts, work


def merge_place_counts(spec, bound, partial_counts):
    """Adds the place at infinity to per degree partial counts, returning
    the vector N_1..N_bound."""
    totals = [0] * bound

    splitting = split_place(spec, RationalPlace.infinity(spec.base))

    if splitting.f_res <= bound:
        totals[splitting.f_res - 1] += splitting.g_count

    for counts in partial_counts:

        for place_degree, number in counts.items():
            totals[place_degree - 1] += number

    return totals


def count_places_with_work(spec, bound, budget=None):
    """As :func:`count_places`, also returning the work counters."""
    if bound < 0:
        raise ValueError(f"The degree bound must be non-negative, not {bound}.")

    work = PlaceCountWork(1 if bound > 0 else 0, 0)

    if bound == 0:
        return [], work

    budget = resolve_budget(budget)
    check_budget(spec.q ** bound, budget, "field elements")

    partial_counts = []

    for degree in range(1, bound + 1):

        counts, degree_work = count_places_of_degree(spec, degree, bound, budget)

        partial_counts.append(counts)
        work += degree_work

        logger.info(
            f"{spec}: counted the places over the {degree_work.places_enumerated} "
            f"places of degree {degree}."
        )

    return merge_place_counts(spec, bound, partial_counts), work


def count_places(spec, bound, budget=None):
    """Counts the places of the cover K of each degree up to `bound`.

    Parameters
    ----------
    spec: CoverSpec
        A validated cover.
    bound: int
        The degree bound B.
    budget: int, optional
        The largest extension field which may be enumerated.

    Returns
    -------
    list of int
        N_1, ..., N_B.
    """
    counts, _ = count_places_with_work(spec, bound, budget)
    return counts


def rational_place_counts(q, bound):
    """The place counts n_1..n_B of F_q(x): n_1 = q + 1 and
    n_d = count_monic_irreducibles(q, d) for d >= 2.

    Returns
    -------
    list of int
    """
    return [
        q + 1 if degree == 1 else count_monic_irreducibles(q, degree)
        for degree in range(1, bound + 1)
    ]


def point_count_sums(spec, bound, budget=None):
    """The sums S_k = sum_{d | k} d N_d for k = 1..bound, from the place
    counts of the cover.

    Returns
    -------
    list of int
    """
    counts = count_places(spec, bound, budget)
    return sums_from_place_counts(counts)


def sums_from_place_counts(counts):
    """list of int: S_k = sum_{d | k} d N_d for every k up to len(counts)."""
    return [
        sum(d * counts[d - 1] for d in divisors(k)) for k in range(1, len(counts) + 1)
    ]


def point_count_bruteforce(spec, degree, budget=None):
    """Counts the degree one places of the cover over the constant field
    F_{q^k} directly: the affine solutions (x0, y0) in F_{q^k}^2 plus the
    degree one places above infinity of the constant field extension.

    Parameters
    ----------
    spec: CoverSpec
        A validated cover.
    degree: int
        The extension degree k.
    budget: int, optional
        The largest field which may be enumerated.

    Returns
    -------
    int
        S_k.
    """
    budget = resolve_budget(budget)
    check_budget(spec.q ** degree, budget, "field elements")

    extended = extend_constants(spec, degree, budget)
    extension = extended.base

    values = extension.evaluate_everywhere(extended.f.coefficients)

    if spec.family == CoverFamily.ArtinSchreier:

        solvable = extension.trace_arrays(values) == 0
        affine = spec.p * int(np.count_nonzero(solvable))

    else:

        zeros = values == 0
        logs = extension.log_table[values[~zeros]]

        affine = int(np.count_nonzero(zeros)) + spec.m * int(
            np.count_nonzero(logs % spec.m == 0)
        )

    splitting = split_place(extended, RationalPlace.infinity(extension))
    at_infinity = splitting.g_count if splitting.f_res == 1 else 0

    return affine + at_infinity
