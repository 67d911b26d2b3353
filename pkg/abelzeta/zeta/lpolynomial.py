"""
The numerator P(u) of the zeta function of a cover, recovered exactly from
its place counts.
"""
import logging
from fractions import Fraction

from abelzeta.utils.exceptions import InvariantBreachError
from abelzeta.utils.numbers import divisors, mobius

logger = logging.getLogger(__name__)


class LPolynomial:
    """The integer polynomial P(u) = c_0 + c_1 u + ... + c_{2g} u^{2g} with
    Z(u) = P(u) / ((1 - u)(1 - q u)).
    """

    @property
    def q(self):
        """int: The order of the constant field."""
        return self._q

    @property
    def g(self):
        """int: The genus."""
        return self._g

    @property
    def coefficients(self):
        """tuple of int: c_0, ..., c_{2g}."""
        return self._coefficients

    @property
    def class_number(self):
        """int: h = P(1)."""
        return class_number(self)

    def __init__(self, q, g, coefficients):
        """
        Parameters
        ----------
        q: int
            The order of the constant field.
        g: int
            The genus.
        coefficients: sequence of int
            The 2g + 1 coefficients, constant term first.
        """
        coefficients = tuple(int(c) for c in coefficients)

        if len(coefficients) != 2 * g + 1:
            raise ValueError(
                f"A genus {g} L-polynomial has {2 * g + 1} coefficients, "
                f"not {len(coefficients)}."
            )

        self._q = q
        self._g = g
        self._coefficients = coefficients

    def validate(self):
        """Asserts c_0 = 1, the functional equation c_{2g-i} = q^{g-i} c_i,
        a positive class number and the Weil bound on every power sum.

        Raises
        ------
        InvariantBreachError
        """
        q, g, c = self._q, self._g, self._coefficients

        if c[0] != 1:
            raise InvariantBreachError("lpoly-constant", f"c_0 = {c[0]} instead of 1.")

        for i in range(g + 1):

            if c[2 * g - i] != q ** (g - i) * c[i]:
                raise InvariantBreachError(
                    "functional-equation",
                    f"c_{2 * g - i} = {c[2 * g - i]} differs from "
                    f"q^{g - i} c_{i} = {q ** (g - i) * c[i]}.",
                )

        if sum(c) <= 0:
            raise InvariantBreachError("class-number", f"P(1) = {sum(c)} <= 0.")

        for k, a_k in enumerate(power_sums(self, 2 * g), start=1):

            if a_k * a_k > 4 * g * g * q ** k:
                raise InvariantBreachError(
                    "weil-bound", f"|a_{k}| = {abs(a_k)} exceeds 2g q^(k/2)."
                )

        return self

    def evaluate(self, u):
        """Fraction: P(u) for a rational u."""
        u = Fraction(u)
        value = Fraction(0)

        for coefficient in reversed(self._coefficients):
            value = value * u + coefficient

        return value

    def to_dict(self):
        """dict: {"q": q, "g": g, "coeffs": [decimal strings]}."""
        return {
            "q": self._q,
            "g": self._g,
            "coeffs": [str(c) for c in self._coefficients],
        }

    @classmethod
    def from_dict(cls, value):
        """LPolynomial: The polynomial described by :meth:`to_dict` output."""
        return cls(value["q"], value["g"], [int(c) for c in value["coeffs"]])

    def __getstate__(self):
        return self.to_dict()

    def __setstate__(self, state):
        self._q = state["q"]
        self._g = state["g"]
        self._coefficients = tuple(int(c) for c in state["coeffs"])

    def __eq__(self, other):
        return (
            isinstance(other, LPolynomial)
            and self._q == other.q
            and self._coefficients == other.coefficients
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._q, self._coefficients))

    def __str__(self):

        terms = []

        for power, c in enumerate(self._coefficients):

            if c == 0:
                continue

            monomial = "" if power == 0 else ("u" if power == 1 else f"u^{power}")
            terms.append(str(c) if power == 0 else f"{c}*{monomial}")

        return " + ".join(terms)

    def __repr__(self):
        return f"LPolynomial(q={self._q}, g={self._g}, P={self})"


def lpoly_from_counts(q, g, counts):
    """Builds P(u) from the place counts N_1..N_g of a cover of genus g.

    The power sums a_k = q^k + 1 - S_k of the reciprocal roots, with
    S_k = sum_{d | k} d N_d, give the elementary symmetric functions through
    Newton's identities k e_k = sum_{j=1}^{k} (-1)^(j-1) e_{k-j} a_j. Then
    c_k = (-1)^k e_k for k <= g and the functional equation fills in the
    remaining coefficients.

    Parameters
    ----------
    q: int
        The order of the constant field.
    g: int
        The genus.
    counts: sequence of int
        N_1, ..., N_g (any further counts are ignored).

    Returns
    -------
    LPolynomial
        The validated polynomial.
    """
    if g < 0:
        raise ValueError(f"The genus must be non-negative, not {g}.")
    if len(counts) < g:
        raise ValueError(f"{g} place counts are required, only {len(counts)} given.")

    sums = [sum(d * counts[d - 1] for d in divisors(k)) for k in range(1, g + 1)]
    power_sums_ = [q ** k + 1 - s for k, s in enumerate(sums, start=1)]

    elementary = [Fraction(1)]

    for k in range(1, g + 1):

        total = sum(
            (-1) ** (j - 1) * elementary[k - j] * power_sums_[j - 1]
            for j in range(1, k + 1)
        )
        e_k = total / k

        if e_k.denominator != 1:
            raise InvariantBreachError(
                "newton-integrality",
                f"e_{k} = {e_k} is not an integer; the counts or the genus are wrong.",
            )

        elementary.append(e_k)

    coefficients = [0] * (2 * g + 1)

    for k in range(g + 1):
        coefficients[k] = (-1) ** k * int(elementary[k])

    for i in range(g):
        coefficients[2 * g - i] = q ** (g - i) * coefficients[i]

    return LPolynomial(q, g, coefficients).validate()


def class_number(lpoly):
    """The class number h = P(1).

    Parameters
    ----------
    lpoly: LPolynomial

    Returns
    -------
    int
    """
    value = sum(lpoly.coefficients)

    if value <= 0:
        raise InvariantBreachError("class-number", f"P(1) = {value} <= 0.")

    return value


def power_sums(lpoly, bound):
    """The power sums a_k of the reciprocal roots of P for k = 1..bound,
    extended past 2g by Newton's identities with e_j = 0 for j > 2g.

    Returns
    -------
    list of int
    """
    elementary = [(-1) ** k * c for k, c in enumerate(lpoly.coefficients)]

    def e(index):
        return elementary[index] if index < len(elementary) else 0

    sums = []

    for k in range(1, bound + 1):

        partial = sum(
            (-1) ** (j - 1) * e(k - j) * sums[j - 1] for j in range(1, k)
        )
        sums.append((-1) ** (k - 1) * (k * e(k) - partial))

    return sums


def predicted_S(lpoly, k):
    """The number of degree one places over F_{q^k} implied by P,
    S_k = q^k + 1 - a_k.

    Returns
    -------
    int
    """
    if k < 1:
        raise ValueError(f"k must be positive, not {k}.")

    return lpoly.q ** k + 1 - power_sums(lpoly, k)[-1]


def place_counts_from_lpoly(lpoly, bound):
    """The place counts N_1..N_bound implied by P, from k N_k =
    sum_{d | k} mobius(k/d) S_d.

    Returns
    -------
    list of int
    """
    sums = [lpoly.q ** k + 1 - a for k, a in enumerate(power_sums(lpoly, bound), 1)]

    counts = []

    for k in range(1, bound + 1):

        total = sum(mobius(k // d) * sums[d - 1] for d in divisors(k))

        if total % k != 0 or total < 0:
            raise InvariantBreachError(
                "place-count-inversion",
                f"{lpoly!r} implies {total}/{k} places of degree {k}.",
            )

        counts.append(total // k)

    return counts


def divisor_count_series(lpoly, n_max):
    """The numbers A_0..A_{n_max} of effective divisors of each degree, the
    coefficients of P(u) / ((1 - u)(1 - q u)).

    Returns
    -------
    list of int
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, not {n_max}.")

    q = lpoly.q
    c = lpoly.coefficients

    series = []

    for n in range(n_max + 1):

        value = sum(
            c[i] * (q ** (n - i + 1) - 1) // (q - 1)
            for i in range(min(n, len(c) - 1) + 1)
        )

        if value < 0:
            raise InvariantBreachError(
                "divisor-count", f"A_{n} = {value} is negative for {lpoly!r}."
            )

        series.append(value)

    return series


def zeta_eval(lpoly, u):
    """The exact value Z(u) = P(u) / ((1 - u)(1 - q u)) for a rational
    0 < u < 1/q.

    Parameters
    ----------
    lpoly: LPolynomial
    u: Fraction or str
        The point, e.g. ``Fraction(1, 4)`` or ``"1/4"`` (s = 2 over F_2).

    Returns
    -------
    Fraction
    """
    u = Fraction(u)

    if not 0 < u < Fraction(1, lpoly.q):
        raise ValueError(
            f"u = {u} lies outside of the region 0 < u < 1/q."
        )

    return lpoly.evaluate(u) / ((1 - u) * (1 - lpoly.q * u))
