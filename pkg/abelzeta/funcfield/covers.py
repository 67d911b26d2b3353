"""
Kummer and Artin-Schreier covers of the rational function field F_q(x).
"""
import math
import re
from enum import Enum

from abelzeta.algebra import (
    Poly,
    canonical_embedding,
    extension_ctx,
    field_ctx,
    format_poly,
    is_squarefree,
    parse_poly,
)
from abelzeta.utils.exceptions import (
    CoverValidationError,
    PolynomialParseError,
    SpecificationParseError,
)
from abelzeta.utils.numbers import prime_power_decomposition


class CoverFamily(Enum):
    """The families of cyclic covers which are supported."""

    Kummer = "kummer"
    ArtinSchreier = "artin-schreier"


class CoverSpec:
    """A cyclic cover K of F = F_q(x), either the Kummer cover y^m = f(x) or
    the Artin-Schreier cover y^p - y = f(x).

    Notes
    -----
    Constructing a spec does not validate it; call :meth:`validate` (or
    :func:`validate`) before computing with it.
    """

    @property
    def family(self):
        """CoverFamily: The family of the cover."""
        return self._family

    @property
    def base(self):
        """FieldCtx: The constant field F_q."""
        return self._base

    @property
    def f(self):
        """Poly: The defining polynomial."""
        return self._f

    @property
    def m(self):
        """int: The Kummer exponent, or None for Artin-Schreier covers."""
        return self._m

    @property
    def q(self):
        """int: The order of the constant field."""
        return self._base.order

    @property
    def p(self):
        """int: The characteristic."""
        return self._base.p

    @property
    def degree(self):
        """int: The degree [K : F] of the cover."""
        return self._m if self._family == CoverFamily.Kummer else self._base.p

    @property
    def identifier(self):
        """str: The text form of the cover, as accepted by
        :func:`parse_cover_spec`."""
        polynomial = format_poly(self._f)

        if self._family == CoverFamily.Kummer:
            return f"kummer:q={self.q},m={self._m},f={polynomial}"

        return f"as:q={self.q},f={polynomial}"

    def __init__(self, family, f, m=None):
        """
        Parameters
        ----------
        family: CoverFamily
            The family of the cover.
        f: Poly
            The defining polynomial, whose base field is the constant field.
        m: int, optional
            The Kummer exponent. Must be omitted for Artin-Schreier covers.
        """
        family = CoverFamily(family)

        if family == CoverFamily.Kummer and m is None:
            raise CoverValidationError("Kummer covers require an exponent m.")
        if family == CoverFamily.ArtinSchreier and m is not None:
            raise CoverValidationError("Artin-Schreier covers take no exponent.")

        self._family = family
        self._base = f.base
        self._f = f
        self._m = m

    def validate(self):
        """Checks the hypotheses of the family, raising a
        `CoverValidationError` if any are violated.

        Returns
        -------
        CoverSpec
            This spec.
        """
        f = self._f

        if f.degree < 1:
            raise CoverValidationError(f"{self.identifier}: f must be nonconstant.")
        if not f.is_monic:
            raise CoverValidationError(f"{self.identifier}: f must be monic.")

        if self._family == CoverFamily.Kummer:

            if self._m < 2:
                raise CoverValidationError(f"{self.identifier}: m must be at least 2.")
            if (self.q - 1) % self._m != 0:
                raise CoverValidationError(
                    f"{self.identifier}: m={self._m} does not divide "
                    f"q - 1 = {self.q - 1}."
                )
            if not is_squarefree(f):
                raise CoverValidationError(f"{self.identifier}: f is not squarefree.")

        elif f.degree % self.p == 0:

            raise CoverValidationError(
                f"{self.identifier}: the degree of f is divisible by p = {self.p}."
            )

        return self

    def to_dict(self):
        """dict: The JSON ready description of the cover."""
        value = {
            "family": self._family.value,
            "q": self.q,
            "f": format_poly(self._f),
        }

        if self._m is not None:
            value["m"] = self._m

        return value

    def __eq__(self, other):
        return (
            isinstance(other, CoverSpec)
            and self._family == other.family
            and self._m == other.m
            and self._f == other.f
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._family, self._m, self._f))

    def __str__(self):
        return self.identifier

    def __repr__(self):
        return f"CoverSpec({self.identifier})"

    def __getstate__(self):
        return {"identifier": self.identifier}

    def __setstate__(self, state):

        parsed = parse_cover_spec(state["identifier"])

        self._family = parsed.family
        self._base = parsed.base
        self._f = parsed.f
        self._m = parsed.m


def validate(spec):
    """Validates a cover specification.

    Parameters
    ----------
    spec: CoverSpec
        The cover to validate.

    Returns
    -------
    CoverSpec
        The same spec, once every invariant of its family is verified.

    Raises
    ------
    CoverValidationError
    """
    return spec.validate()


_FAMILY_KEYS = {"kummer": ("q", "m", "f"), "as": ("q", "f")}
_SPEC_PATTERN = re.compile(r"^(kummer|as):(.*)$")


def parse_cover_spec(text, budget=None):
    """Parses the text form of a cover, ``kummer:q=3,m=2,f=x^3+2*x`` or
    ``as:q=2,f=x^3``. The result is not validated.

    Parameters
    ----------
    text: str
        The text to parse.
    budget: int, optional
        The budget used when building the constant field.

    Returns
    -------
    CoverSpec

    Raises
    ------
    SpecificationParseError
        If the text is malformed.
    """
    match = _SPEC_PATTERN.match("".join(text.split()))

    if match is None:
        raise SpecificationParseError(
            f"{text!r} does not start with a known family (kummer: or as:)."
        )

    family_key, body = match.groups()

    values = {}

    for item in body.split(","):

        key, separator, value = item.partition("=")

        if separator != "=" or len(value) == 0:
            raise SpecificationParseError(f"Malformed field {item!r} in {text!r}.")
        if key in values:
            raise SpecificationParseError(f"The field {key} repeats in {text!r}.")

        values[key] = value

    expected = _FAMILY_KEYS[family_key]

    if set(values) != set(expected):
        raise SpecificationParseError(
            f"{text!r} must define exactly the fields {', '.join(expected)}."
        )

    try:
        q = int(values["q"])
        p, n = prime_power_decomposition(q)
    except ValueError:
        raise SpecificationParseError(f"q={values['q']} is not a prime power.")

    base = field_ctx(p, n, budget)

    try:
        f = parse_poly(values["f"], base)
    except PolynomialParseError as e:
        raise SpecificationParseError(str(e))

    if family_key == "as":
        return CoverSpec(CoverFamily.ArtinSchreier, f)

    try:
        m = int(values["m"])
    except ValueError:
        raise SpecificationParseError(f"m={values['m']} is not an integer.")

    return CoverSpec(CoverFamily.Kummer, f, m)


def extend_constants(spec, degree, budget=None):
    """Returns the same cover over the constant field F_{q^degree}, with the
    coefficients of f mapped through the canonical embedding.

    Parameters
    ----------
    spec: CoverSpec
        The cover over F_q.
    degree: int
        The degree k of the constant field extension.
    budget: int, optional
        The largest field allowed.

    Returns
    -------
    CoverSpec
        The validated cover over F_{q^k}.
    """
    extension = extension_ctx(spec.base, degree, budget)
    embedding = canonical_embedding(spec.base, extension)

    f = Poly(extension, [embedding.map_value(c) for c in spec.f.coefficients])

    return CoverSpec(spec.family, f, spec.m).validate()


def different_degree_formula(spec):
    """The degree of the different of a valid cover in closed form:
    (m - 1) deg f + m - gcd(m, deg f) for Kummer covers and
    (p - 1)(deg f + 1) for Artin-Schreier covers."""
    degree = spec.f.degree

    if spec.family == CoverFamily.Kummer:
        return (spec.m - 1) * degree + spec.m - math.gcd(spec.m, degree)

    return (spec.p - 1) * (degree + 1)


def genus_formula(spec):
    """int: The genus implied by :func:`different_degree_formula`."""
    return (different_degree_formula(spec) - 2 * spec.degree + 2) // 2


def random_cover_spec(family, q, degree, rng, m=None, maximum_attempts=10000):
    """Draws a valid cover with a uniformly random monic f of the given
    degree, by rejection sampling.

    Parameters
    ----------
    family: CoverFamily
        The family to draw from.
    q: int
        The order of the constant field.
    degree: int
        The degree of f.
    rng: numpy.random.Generator
        The seeded random source.
    m: int, optional
        The Kummer exponent.
    maximum_attempts: int
        The number of draws after which sampling gives up.

    Returns
    -------
    CoverSpec
    """
    family = CoverFamily(family)
    p, n = prime_power_decomposition(q)

    base = field_ctx(p, n)

    if family == CoverFamily.ArtinSchreier and degree % p == 0:
        raise CoverValidationError(
            f"No Artin-Schreier cover over F_{q} has deg f = {degree}."
        )
    if family == CoverFamily.Kummer and (m is None or m < 2 or (q - 1) % m != 0):
        raise CoverValidationError(
            f"m={m} must be at least 2 and divide q - 1 = {q - 1}."
        )

    for _ in range(maximum_attempts):

        coefficients = [int(c) for c in rng.integers(0, q, size=degree)] + [1]
        spec = CoverSpec(family, Poly(base, coefficients), m)

        try:
            return spec.validate()
        except CoverValidationError:
            continue

    raise CoverValidationError(
        f"No valid {family.value} cover of degree {degree} over F_{q} was found "
        f"after {maximum_attempts} attempts."
    )
