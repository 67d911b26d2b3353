"""
Ramification data, the different and the genus of a cover.
"""
import math

from abelzeta.algebra import irreducible_factors
from abelzeta.funcfield.covers import CoverFamily, different_degree_formula
from abelzeta.funcfield.places import PlaceKind, RationalPlace, split_place
from abelzeta.utils.exceptions import InvariantBreachError


class RamificationEntry:
    """A ramified place of F_q(x) together with the local data of the
    places above it."""

    def __init__(
        self, place, e, different_exponent, jump_count, places_above_total_degree
    ):
        """
        Parameters
        ----------
        place: RationalPlace
            The ramified place of F_q(x).
        e: int
            The ramification index.
        different_exponent: int
            The exponent of each place above in the different.
        jump_count: int
            The number of jumps in the higher ramification filtration.
        places_above_total_degree: int
            The sum of the degrees of the places above.
        """
        self.place = place
        self.e = e
        self.different_exponent = different_exponent
        self.jump_count = jump_count
        self.places_above_total_degree = places_above_total_degree

    def to_dict(self):
        return {
            "place": str(self.place),
            "degree": self.place.degree,
            "e": self.e,
            "alpha": self.different_exponent,
            "k": self.jump_count,
        }


class RamificationReport:
    """The ramified places of a cover, the degree of its different and its
    genus."""

    def __init__(self, spec, entries, different_degree, genus):

        self.spec = spec
        self.entries = entries
        self.different_degree = different_degree
        self.genus = genus

    def to_dict(self):
        """dict: The JSON ready report, with keys family, q, m (Kummer only),
        genus, different_degree and ramified."""
        value = {
            "family": self.spec.family.value,
            "q": self.spec.q,
            "genus": self.genus,
            "different_degree": str(self.different_degree),
            "ramified": [entry.to_dict() for entry in self.entries],
        }

        if self.spec.m is not None:
            value["m"] = self.spec.m

        return value


def genus_via_riemann_hurwitz(degree, different_degree, base_genus=0):
    """Solves 2g - 2 = n(2 g_F - 2) + deg D for the genus g of a separable
    cover of degree n of a field of genus g_F with constant field unchanged.

    Parameters
    ----------
    degree: int
        The degree n of the cover.
    different_degree: int
        The degree of the different.
    base_genus: int
        The genus of the base field.

    Returns
    -------
    int
    """
    twice_genus = degree * (2 * base_genus - 2) + different_degree + 2

    if twice_genus % 2 != 0 or twice_genus < 0:

        raise InvariantBreachError(
            "riemann-hurwitz",
            f"n={degree} and deg D={different_degree} give a genus of {twice_genus}/2.",
        )

    return twice_genus // 2


def _kummer_entries(spec, budget):

    entries = []

    # f is squarefree, so each place dividing f has valuation one.
    for polynomial, root in irreducible_factors(spec.f, budget):

        place = RationalPlace(
            PlaceKind.Finite,
            spec.base,
            polynomial.degree,
            polynomial=polynomial,
            root=root,
        )
        splitting = split_place(spec, place)

        if splitting.e != spec.m:
            raise InvariantBreachError(
                "kummer-ramification", f"{spec}: {place} is not totally ramified."
            )

        entries.append(
            RamificationEntry(
                place,
                splitting.e,
                splitting.e - 1,
                1,
                splitting.f_res * splitting.g_count * place.degree,
            )
        )

    infinity = RationalPlace.infinity(spec.base)
    splitting = split_place(spec, infinity)

    if splitting.e != spec.m // math.gcd(spec.m, spec.f.degree):
        raise InvariantBreachError(
            "kummer-ramification", f"{spec}: unexpected ramification at infinity."
        )

    if splitting.e > 1:

        entries.append(
            RamificationEntry(
                infinity,
                splitting.e,
                splitting.e - 1,
                1,
                splitting.f_res * splitting.g_count,
            )
        )

    return entries


def _artin_schreier_entries(spec):

    infinity = RationalPlace.infinity(spec.base)
    splitting = split_place(spec, infinity)

    # The single ramification jump sits at deg f.
    exponent = (spec.p - 1) * (spec.f.degree + 1)

    return [RamificationEntry(infinity, splitting.e, exponent, 1, 1)]


def ramification_report(spec, budget=None):
    """Computes the ramified places of a validated cover, the degree of the
    different and the genus.

    Parameters
    ----------
    spec: CoverSpec
        The cover.
    budget: int, optional
        The largest extension field used to locate the places dividing f.

    Returns
    -------
    RamificationReport
    """
    if spec.family == CoverFamily.Kummer:
        entries = _kummer_entries(spec, budget)
    else:
        entries = _artin_schreier_entries(spec)

    # Each place above has degree f_res * deg(P), and there are n / (e f_res)
    # of them, so the contribution is alpha * (n / e) * deg(P).
    different_degree = sum(
        entry.different_exponent * (spec.degree // entry.e) * entry.place.degree
        for entry in entries
    )

    for entry in entries:

        expected_degree = spec.degree * entry.place.degree

        if entry.places_above_total_degree * entry.e != expected_degree:
            raise InvariantBreachError(
                "ramification-degree",
                f"{spec}: the places above {entry.place} have the wrong total degree.",
            )

    if different_degree != different_degree_formula(spec):

        raise InvariantBreachError(
            "different-degree",
            f"{spec}: the different has degree {different_degree} rather than "
            f"{different_degree_formula(spec)}.",
        )

    genus = genus_via_riemann_hurwitz(spec.degree, different_degree)

    return RamificationReport(spec, entries, different_degree, genus)
