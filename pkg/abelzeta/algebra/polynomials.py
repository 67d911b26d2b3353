"""
Dense univariate polynomials over the finite fields of
:mod:`abelzeta.algebra.fields`.
"""
import re

import numpy as np

from abelzeta.algebra.fields import FieldElement, canonical_embedding, extension_ctx
from abelzeta.algebra.orbits import irreducible_arrays, minimal_polynomial
from abelzeta.options import resolve_budget
from abelzeta.utils import check_budget
from abelzeta.utils.exceptions import (
    FieldMismatchError,
    InvariantBreachError,
    PolynomialParseError,
)
from abelzeta.utils.numbers import divisors, mobius, prime_factors


class Poly:
    """A polynomial in F_q[x] whose coefficients are stored as field
    encodings, constant term first, without leading zeros. The zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("base", "coefficients")

    def __init__(self, base, coefficients=()):
        """
        Parameters
        ----------
        base: FieldCtx
            The coefficient field F_q.
        coefficients: iterable of int or FieldElement
            The coefficients (constant term first). Integers are treated as
            encodings of elements of `base`.
        """
        values = []

        for coefficient in coefficients:

            if isinstance(coefficient, FieldElement):

                if coefficient.ctx is not base:
                    raise FieldMismatchError(
                        f"{coefficient!r} is not an element of {base}."
                    )

                coefficient = coefficient.value

            coefficient = int(coefficient)
            base.check(coefficient)

            values.append(coefficient)

        while len(values) > 0 and values[-1] == 0:
            values.pop()

        self.base = base
        self.coefficients = tuple(values)

    @classmethod
    def zero(cls, base):
        return cls(base)

    @classmethod
    def one(cls, base):
        return cls(base, (1,))

    @classmethod
    def x(cls, base):
        return cls(base, (0, 1))

    @classmethod
    def monomial(cls, base, power, coefficient=1):
        """Poly: The polynomial coefficient * x^power."""
        return cls(base, (0,) * power + (coefficient,))

    @classmethod
    def from_encoding(cls, base, encoding):
        """The polynomial whose canonical encoding is `encoding`."""
        coefficients = []

        while encoding > 0:
            encoding, coefficient = divmod(encoding, base.order)
            coefficients.append(coefficient)

        return cls(base, coefficients)

    @property
    def degree(self):
        """int: The degree, or -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return len(self.coefficients) == 0

    @property
    def leading_coefficient(self):
        """int: The encoding of the leading coefficient (0 for zero)."""
        return self.coefficients[-1] if len(self.coefficients) > 0 else 0

    @property
    def is_monic(self):
        return self.leading_coefficient == 1

    @property
    def encoding(self):
        """int: The canonical encoding sum(enc(c_i) * q^i). Ordering monic
        polynomials of a fixed degree by this value is the canonical order."""
        value = 0

        for coefficient in reversed(self.coefficients):
            value = value * self.base.order + coefficient

        return value

    def coefficient(self, power):
        """int: The encoding of the coefficient of x^power."""
        return self.coefficients[power] if power < len(self.coefficients) else 0

    def _check_other(self, other):

        if not isinstance(other, Poly):
            raise TypeError(f"Expected a Poly, not {type(other)}.")
        if other.base is not self.base:
            raise FieldMismatchError(
                f"Polynomials over {self.base} and {other.base} cannot be combined."
            )

    def monic(self):
        """Poly: This polynomial divided by its leading coefficient."""
        if self.is_zero:
            return self

        return self.scale(self.base.inv(self.leading_coefficient))

    def scale(self, factor):
        """Poly: This polynomial multiplied by the constant with encoding
        `factor`."""
        mul = self.base.mul
        return Poly(self.base, [mul(factor, c) for c in self.coefficients])

    def __add__(self, other):

        self._check_other(other)

        add = self.base.add
        length = max(len(self.coefficients), len(other.coefficients))

        return Poly(
            self.base,
            [add(self.coefficient(i), other.coefficient(i)) for i in range(length)],
        )

    def __neg__(self):
        neg = self.base.neg
        return Poly(self.base, [neg(c) for c in self.coefficients])

    def __sub__(self, other):
        self._check_other(other)
        return self + (-other)

    def __mul__(self, other):

        self._check_other(other)

        if self.is_zero or other.is_zero:
            return Poly.zero(self.base)

        add, mul = self.base.add, self.base.mul
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)

        for i, a in enumerate(self.coefficients):

            if a == 0:
                continue

            for j, b in enumerate(other.coefficients):
                product[i + j] = add(product[i + j], mul(a, b))

        return Poly(self.base, product)

    def __divmod__(self, other):

        self._check_other(other)

        if other.is_zero:
            raise ZeroDivisionError("Division by the zero polynomial.")

        add, mul, neg = self.base.add, self.base.mul, self.base.neg

        remainder = list(self.coefficients)
        divisor_degree = other.degree
        inverse_leading = self.base.inv(other.leading_coefficient)

        quotient = [0] * max(len(remainder) - divisor_degree, 0)

        for i in range(len(remainder) - 1, divisor_degree - 1, -1):

            if remainder[i] == 0:
                continue

            factor = mul(remainder[i], inverse_leading)
            quotient[i - divisor_degree] = factor

            negated = neg(factor)

            for j, coefficient in enumerate(other.coefficients):
                offset = i - divisor_degree + j
                remainder[offset] = add(remainder[offset], mul(negated, coefficient))

        return Poly(self.base, quotient), Poly(self.base, remainder[:divisor_degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, exponent):

        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented

        result = Poly.one(self.base)
        base = self

        while exponent > 0:

            if exponent & 1:
                result = result * base

            base = base * base
            exponent >>= 1

        return result

    def powmod(self, exponent, modulus):
        """Poly: self^exponent reduced modulo `modulus`, computed by square
        and multiply."""
        result = Poly.one(self.base) % modulus
        base = self % modulus

        while exponent > 0:

            if exponent & 1:
                result = (result * base) % modulus

            exponent >>= 1

            if exponent > 0:
                base = (base * base) % modulus

        return result

    def derivative(self):
        """Poly: The formal derivative."""
        from_int, mul = self.base.from_int, self.base.mul

        return Poly(
            self.base,
            [mul(from_int(i), c) for i, c in enumerate(self.coefficients) if i > 0],
        )

    def evaluate(self, point):
        """Evaluates at a point of F_q or of an extension F_{q^d}. Coefficients
        are mapped through the canonical embedding when the point lies in an
        extension.

        Parameters
        ----------
        point: FieldElement
            The point.

        Returns
        -------
        FieldElement
            The value, in the field of `point`.
        """
        target = point.ctx

        if target is self.base:
            coefficients = self.coefficients
        else:
            embedding = canonical_embedding(self.base, target)
            coefficients = [embedding.map_value(c) for c in self.coefficients]

        add, mul = target.add, target.mul
        value = 0

        for coefficient in reversed(coefficients):
            value = add(mul(value, point.value), coefficient)

        return FieldElement(target, value)

    def __call__(self, point):
        return self.evaluate(point)

    def __eq__(self, other):

        if not isinstance(other, Poly):
            return False

        return self.base is other.base and self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.base.p, self.base.n, self.coefficients))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)}, F_{self.base.order})"


def poly_gcd(f, g):
    """Returns the monic greatest common divisor of two polynomials, or zero
    when both are zero.

    Parameters
    ----------
    f: Poly
    g: Poly

    Returns
    -------
    Poly
    """
    f._check_other(g)

    while not g.is_zero:
        f, g = g, f % g

    return f.monic()


def is_squarefree(f):
    """bool: Whether gcd(f, f') = 1 for a nonconstant polynomial."""
    return f.degree >= 1 and poly_gcd(f, f.derivative()).degree == 0


_COEFFICIENT = r"\d+|\([^()]*\)"


def _term_pattern(variable):
    return re.compile(
        rf"^(?:(?P<constant>{_COEFFICIENT})|"
        rf"(?:(?P<coefficient>{_COEFFICIENT})\*)?{variable}(?:\^(?P<exponent>\d+))?)$"
    )


_X_TERM_PATTERN = _term_pattern("x")
_T_TERM_PATTERN = _term_pattern("t")


def _split_terms(text):
    """Splits a sum at the signs which are not inside parentheses."""
    terms = []
    current = ""
    depth = 0

    for character in text:

        if character == "(":
            depth += 1
        elif character == ")":
            depth -= 1

        if depth < 0:
            raise PolynomialParseError(f"Unbalanced parentheses in {text!r}.")

        if character in "+-" and depth == 0 and len(current) > 0:
            terms.append(current)
            current = character
        else:
            current += character

    if depth != 0:
        raise PolynomialParseError(f"Unbalanced parentheses in {text!r}.")

    terms.append(current)
    return terms


def _parse_terms(text, pattern, parse_coefficient):
    """Parses a sparse sum of terms into a dictionary of signed
    coefficients keyed by power."""

    if len(text) == 0:
        raise PolynomialParseError("Cannot parse an empty polynomial.")

    coefficients = {}

    for term in _split_terms(text):

        sign = 1

        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]

        match = pattern.match(term)

        if match is None:
            raise PolynomialParseError(f"Malformed term {term!r} in {text!r}.")

        if match.group("constant") is not None:
            coefficient, power = match.group("constant"), 0
        else:
            coefficient = match.group("coefficient")
            exponent = match.group("exponent")
            power = 1 if exponent is None else int(exponent)

        if power in coefficients:
            raise PolynomialParseError(f"The power {power} repeats in {text!r}.")

        coefficients[power] = (sign, parse_coefficient(coefficient))

    return coefficients


def _parse_element(text, base):
    """The encoding of a coefficient written as an integer or as a
    parenthesized polynomial in the generator t of the field."""

    if text is None:
        return 1
    if not text.startswith("("):
        return base.from_int(int(text))

    def parse_digit(digit):

        if digit is None:
            return 1
        if digit.startswith("("):
            raise PolynomialParseError(f"Nested parentheses in {text!r}.")

        return int(digit)

    digits = [0] * base.n

    for power, (sign, value) in _parse_terms(
        text[1:-1], _T_TERM_PATTERN, parse_digit
    ).items():

        if power >= base.n:
            raise PolynomialParseError(
                f"{text!r} is not reduced modulo the degree {base.n} modulus."
            )

        digits[power] = sign * value

    return base.from_digits(digits)


def parse_poly(text, base):
    """Parses the sparse text form of a polynomial, for example
    ``x^3+2*x``. Integer coefficients are reduced modulo the characteristic,
    and coefficients outside of the prime field may be written as a
    parenthesized polynomial in the field generator, e.g. ``(t+1)*x^2``.

    Parameters
    ----------
    text: str
        The text to parse. Whitespace is ignored.
    base: FieldCtx
        The coefficient field.

    Returns
    -------
    Poly

    Raises
    ------
    PolynomialParseError
        If the text is malformed or an exponent is repeated.
    """
    compact = "".join(text.split())

    terms = _parse_terms(
        compact, _X_TERM_PATTERN, lambda value: _parse_element(value, base)
    )

    dense = [0] * (max(terms) + 1)

    for power, (sign, value) in terms.items():
        dense[power] = value if sign == 1 else base.neg(value)

    return Poly(base, dense)


def _format_coefficient(base, value):

    if value < base.p:
        return str(value)

    return f"({FieldElement(base, value)})"


def format_poly(f):
    """str: The sparse text form of a polynomial, highest power first."""
    terms = []

    for power in range(f.degree, -1, -1):

        value = f.coefficients[power]

        if value == 0:
            continue

        coefficient = _format_coefficient(f.base, value)

        if power == 0:
            terms.append(coefficient)
            continue

        monomial = "x" if power == 1 else f"x^{power}"
        terms.append(monomial if value == 1 else f"{coefficient}*{monomial}")

    return "+".join(terms) if len(terms) > 0 else "0"


def is_irreducible(f):
    """Decides irreducibility over the base field by the criterion that a
    monic f of degree d is irreducible iff x^(q^d) = x (mod f) and
    gcd(x^(q^(d/l)) - x, f) = 1 for every prime l dividing d.

    Parameters
    ----------
    f: Poly
        A monic polynomial of degree at least one.

    Returns
    -------
    bool
    """
    if f.degree < 1 or not f.is_monic:
        raise ValueError(f"Irreducibility is only tested for monic nonconstant {f}.")

    degree = f.degree

    if degree == 1:
        return True

    x = Poly.x(f.base)
    x_reduced = x % f

    frobenius_powers = [x_reduced]

    for _ in range(degree):
        frobenius_powers.append(frobenius_powers[-1].powmod(f.base.order, f))

    if frobenius_powers[degree] != x_reduced:
        return False

    for factor in prime_factors(degree):

        if poly_gcd(frobenius_powers[degree // factor] - x, f).degree != 0:
            return False

    return True


def count_monic_irreducibles(q, m):
    """The number of monic irreducible polynomials of degree m over F_q,
    (1/m) sum_{d | m} mobius(m/d) q^d.

    Parameters
    ----------
    q: int
        The field order.
    m: int
        The degree, at least one.

    Returns
    -------
    int
    """
    if m < 1:
        raise ValueError(f"The degree must be positive, not {m}.")

    total = sum(mobius(m // d) * q ** d for d in divisors(m))

    if total % m != 0:
        raise InvariantBreachError(
            "irreducible-count", f"The Mobius sum for q={q}, m={m} is not divisible."
        )

    return total // m


def enumerate_monic_irreducibles(base, degree, budget=None):
    """Yields every monic irreducible polynomial of the given degree over the
    base field exactly once, in the canonical order.

    Parameters
    ----------
    base: FieldCtx
        The field F_q.
    degree: int
        The degree d.
    budget: int, optional
        The largest q^d allowed, defaulting to the engine budget.

    Yields
    ------
    Poly
    """
    _, _, coefficients = irreducible_arrays(base, degree, budget)

    for row in coefficients.tolist():
        yield Poly(base, row)


def find_roots(f, extension, budget=None):
    """Finds every root of f in an extension field by exhaustive, vectorized
    evaluation.

    Parameters
    ----------
    f: Poly
        A nonzero polynomial over F_q.
    extension: FieldCtx
        The field F_{q^d} to search, which must contain F_q.
    budget: int, optional
        The largest field that may be searched.

    Returns
    -------
    list of FieldElement
        The roots in ascending order of their encoding.
    """
    if f.is_zero:
        raise ValueError("Every element is a root of the zero polynomial.")

    check_budget(extension.order, resolve_budget(budget), "root candidates")

    embedding = canonical_embedding(f.base, extension)
    values = extension.evaluate_everywhere(embedding.map_array(f.coefficients))

    return [FieldElement(extension, int(root)) for root in np.flatnonzero(values == 0)]


def distinct_degree_parts(f):
    """Splits a monic squarefree polynomial into the products of its
    irreducible factors of each degree, using gcd(f, x^(q^d) - x).

    Parameters
    ----------
    f: Poly
        A monic squarefree polynomial.

    Returns
    -------
    dict of int and Poly
        The product of all irreducible factors of degree d, keyed by d, for
        every d which occurs.
    """
    if not f.is_monic:
        raise ValueError(f"{f} must be monic.")

    x = Poly.x(f.base)

    parts = {}
    remaining = f
    frobenius_power = x

    degree = 0

    while remaining.degree >= 2 * (degree + 1):

        degree += 1
        frobenius_power = frobenius_power.powmod(f.base.order, remaining)

        part = poly_gcd(frobenius_power - x, remaining)

        if part.degree > 0:

            parts[degree] = part
            remaining = remaining // part
            frobenius_power = frobenius_power % remaining

    if remaining.degree > 0:
        parts[remaining.degree] = remaining

    return parts


def irreducible_factors(f, budget=None):
    """Returns the monic irreducible factors of a monic squarefree
    polynomial, in canonical order. Each factor of degree d is recovered as
    the minimal polynomial of one of its roots, found by exhaustive search
    of F_{q^d}.

    Parameters
    ----------
    f: Poly
        A monic squarefree polynomial.
    budget: int, optional
        The largest extension field allowed for the root search.

    Returns
    -------
    list of tuple of Poly and FieldElement
        Each factor together with the least of its roots.
    """
    factors = []

    for degree, part in sorted(distinct_degree_parts(f).items()):

        extension = extension_ctx(f.base, degree, budget)

        seen = set()

        for root in find_roots(part, extension, budget):

            if root.value in seen:
                continue

            factor = minimal_polynomial(root, f.base)
            conjugate = root

            for _ in range(degree):
                seen.add(conjugate.value)
                conjugate = conjugate ** f.base.order

            factors.append((factor, root))

    return sorted(factors, key=lambda item: (item[0].degree, item[0].encoding))
