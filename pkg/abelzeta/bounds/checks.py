"""
Exact and certified checks of the class number, place count, zeta and
different inequalities on concrete covers.
"""
from fractions import Fraction

from abelzeta.algebra import count_monic_irreducibles
from abelzeta.bounds.precision import (
    CheckOutcome,
    decide,
    evaluate_real,
    interval,
)
from abelzeta.funcfield import rational_place_counts
from abelzeta.utils.numbers import compare_with_sqrt
from abelzeta.zeta import zeta_eval


def _require_genus(g):

    if g < 1:
        raise ValueError(f"The bound is only defined for g >= 1, not g = {g}.")


def lemma2_check(counts, q, g, bound=None):
    """Checks |N_m - n_m| <= 4 g q^(m/2) exactly, as
    (N_m - n_m)^2 <= 16 g^2 q^m, for every m up to `bound`.

    Parameters
    ----------
    counts: list of int
        The place counts N_1, N_2, ... of the cover.
    q: int
        The order of the constant field.
    g: int
        The genus.
    bound: int, optional
        The largest m to check, defaulting to every available count.

    Returns
    -------
    list of bool
        One entry per m = 1..bound.
    """
    bound = len(counts) if bound is None else bound

    if bound > len(counts):
        raise ValueError(f"Only {len(counts)} place counts are available.")

    rational_counts = rational_place_counts(q, bound)

    return [
        (counts[m - 1] - rational_counts[m - 1]) ** 2 <= 16 * g * g * q ** m
        for m in range(1, bound + 1)
    ]


def thm1_lower_bound(q, g, h):
    """bool: Whether h >= (q - 1) q^(g - 1) / (4 g), checked as
    4 g h >= (q - 1) q^(g - 1). The bound is only claimed for large g."""
    _require_genus(g)
    return 4 * g * h >= (q - 1) * q ** (g - 1)


def effective_lower_ratio(q, g, precision_digits=None):
    """The effective floor 1 - (1 + ln 4g) / (g ln 2) of the ratio
    ln h / (g ln q), valid for every q >= 2 once g is large.

    Returns
    -------
    mpmath.mpf
    """
    _require_genus(g)

    return evaluate_real(
        lambda mp: 1 - (1 + mp.log(4 * g)) / (g * mp.log(2)), precision_digits
    )


def thm1_intermediate_lower_ratio(q, g, precision_digits=None):
    """The sharper floor ln(q - 1)/(g ln q) + 1 - 1/g - ln(4g)/(g ln q)
    implied by :func:`thm1_lower_bound`.

    Returns
    -------
    mpmath.mpf
    """
    _require_genus(g)

    def function(mp):
        log_q = mp.log(q)
        return mp.log(q - 1) / (g * log_q) + 1 - mp.mpf(1) / g - mp.log(4 * g) / (
            g * log_q
        )

    return evaluate_real(function, precision_digits)


def sqrt_q_power(q, g):
    """Expands (1 + q + 2 sqrt(q))^g = (1 + sqrt(q))^(2g) exactly as
    A + B sqrt(q).

    Returns
    -------
    tuple of int
        (A, B).
    """
    rational_part, sqrt_part = 1, 0

    for _ in range(g):
        rational_part, sqrt_part = (
            rational_part * (1 + q) + 2 * sqrt_part * q,
            2 * rational_part + sqrt_part * (1 + q),
        )

    return rational_part, sqrt_part


def upper_bound_h(q, g, h):
    """bool: Whether h <= (1 + sqrt(q))^(2g), decided exactly in Z[sqrt(q)]."""
    if g < 0:
        raise ValueError(f"The genus must be non-negative, not {g}.")

    rational_part, sqrt_part = sqrt_q_power(q, g)
    return compare_with_sqrt(h, rational_part, sqrt_part, q)


def ratio_upper_finite_field(q, precision_digits=None):
    """The ceiling 2 ln(1 + sqrt(q)) / ln q of the ratio ln h / (g ln q).

    Returns
    -------
    mpmath.mpf
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, not {q}.")

    return evaluate_real(
        lambda mp: 2 * mp.log(1 + mp.sqrt(q)) / mp.log(q), precision_digits
    )


def ratio(q, g, h, precision_digits=None):
    """The ratio ln h / (g ln q).

    Returns
    -------
    mpmath.mpf
    """
    if g < 1:
        raise ValueError("The ratio ln h / (g ln q) is undefined for genus zero.")
    if h < 1:
        raise ValueError(f"The class number must be positive, not {h}.")

    return evaluate_real(lambda mp: mp.log(h) / (g * mp.log(q)), precision_digits)


def ratio_interval(ctx, q, g, h):
    """The ratio ln h / (g ln q) as an interval of the context `ctx`."""
    return ctx.log(ctx.mpf(h)) / (g * ctx.log(ctx.mpf(q)))


def ratio_bounds_outcomes(
    q, g, h, precision_digits=None, maximum_precision_digits=None
):
    """Certifies the position of the ratio between the effective floor and
    the finite field ceiling.

    Returns
    -------
    CheckOutcome
        Whether ratio >= 1 - (1 + ln 4g) / (g ln 2) (never asserted).
    CheckOutcome
        Whether ratio <= 2 ln(1 + sqrt(q)) / ln q.
    """
    _require_genus(g)

    def lower(ctx):
        floor = 1 - (1 + ctx.log(ctx.mpf(4 * g))) / (g * ctx.log(ctx.mpf(2)))
        return ratio_interval(ctx, q, g, h) >= floor

    def upper(ctx):
        ceiling = 2 * ctx.log(1 + ctx.sqrt(ctx.mpf(q))) / ctx.log(ctx.mpf(q))
        return ratio_interval(ctx, q, g, h) <= ceiling

    lower_outcome = decide(lower, precision_digits, maximum_precision_digits)

    if lower_outcome == CheckOutcome.Fail:
        lower_outcome = CheckOutcome.ReportOnly

    return lower_outcome, decide(upper, precision_digits, maximum_precision_digits)


def rational_zeta_value(q, u):
    """Fraction: 1 / ((1 - u)(1 - q u)), the zeta function of F_q(x)."""
    u = Fraction(u)
    return 1 / ((1 - u) * (1 - q * u))


def zeta_chain_check(report, degree, s=2):
    """Checks h q^(-g s) Z_0(u) <= Z_K(u) <= Z_0(u)^n at u = q^(-s) exactly,
    where Z_0 is the zeta function of F_q(x).

    Parameters
    ----------
    report: ZetaReport
        The zeta data of the cover.
    degree: int
        The degree n = [K : F].
    s: int
        A positive integer exponent s > 1.

    Returns
    -------
    tuple of bool
        The lower and the upper comparison.
    """
    q, g, h = report.lpoly.q, report.lpoly.g, report.h

    u = Fraction(1, q ** s)

    rational_value = rational_zeta_value(q, u)
    cover_value = zeta_eval(report.lpoly, u)

    lower = h * Fraction(1, q ** (g * s)) * rational_value <= cover_value
    upper = cover_value <= rational_value ** degree

    return lower, upper


def binary_zeta_interval(ctx, s):
    """The zeta function 1 / ((1 - 2^-s)(1 - 2^(1-s))) of F_2(T) at a
    rational s > 1, as an interval."""
    s = interval(ctx, s)
    two = ctx.mpf(2)

    return 1 / ((1 - two ** (-s)) * (1 - two ** (1 - s)))


def lemma3_ratio_bound(
    q, g, h, degree, s=2, precision_digits=None, maximum_precision_digits=None
):
    """Certifies ln h / (g ln q) < s + (n - 1) ln Z_2(s) / (g ln 2), where
    Z_2 is the zeta function of F_2(T).

    Parameters
    ----------
    q, g, h: int
        The constant field order, the genus and the class number.
    degree: int
        The degree n = [K : F].
    s: int or Fraction
        A rational exponent s > 1.

    Returns
    -------
    CheckOutcome
    """
    _require_genus(g)

    s = Fraction(s)

    if s <= 1:
        raise ValueError(f"s must exceed 1, not {s}.")

    def comparison(ctx):

        bound = interval(ctx, s) + (degree - 1) * ctx.log(
            binary_zeta_interval(ctx, s)
        ) / (g * ctx.log(ctx.mpf(2)))

        return ratio_interval(ctx, q, g, h) < bound

    return decide(comparison, precision_digits, maximum_precision_digits)


def lemma3_epsilon_check(q, g, h, degree, epsilon, **kwargs):
    """:func:`lemma3_ratio_bound` at s = 1 + epsilon / 2 for a rational
    epsilon > 0."""
    epsilon = Fraction(epsilon)

    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, not {epsilon}.")

    return lemma3_ratio_bound(q, g, h, degree, 1 + epsilon / 2, **kwargs)


def lemma4_check(h_degree=1, base_class_number=1):
    """bool: Whether [H : F] <= h_F. For F = F_q(x), h_F = 1 and the covers
    are totally ramified somewhere, so [H : F] = 1."""
    return h_degree <= base_class_number


def lemma5_check(q, degree, different_degree, h_degree=1):
    """bool: Whether deg D >= n (ln n - ln [H : F]) / (2 ln q), checked as
    q^(2 deg D) [H : F]^n >= n^n."""
    if degree < 2:
        raise ValueError(f"The cover degree must be at least 2, not {degree}.")

    return q ** (2 * different_degree) * h_degree ** degree >= degree ** degree


def hasse_arf_checks(report, q):
    """Checks 2 alpha >= k e and e <= q^(d k) for every ramified place.

    Parameters
    ----------
    report: RamificationReport
    q: int

    Returns
    -------
    tuple of bool
    """
    first = all(
        2 * entry.different_exponent >= entry.jump_count * entry.e
        for entry in report.entries
    )
    second = all(
        entry.e <= q ** (entry.place.degree * entry.jump_count)
        for entry in report.entries
    )

    return first, second


def riemann_hurwitz_check(report, h_degree=1):
    """Checks 2g - 2 = -2n + deg D and the lower bound
    g / n >= -1 + (ln n - ln [H : F]) / (4 ln q), the latter as
    q^(4 (g + n)) [H : F]^n >= n^n.

    Returns
    -------
    tuple of bool
    """
    spec = report.spec
    degree, genus, q = spec.degree, report.genus, spec.q

    identity = 2 * genus - 2 == -2 * degree + report.different_degree
    lower = q ** (4 * (genus + degree)) * h_degree ** degree >= degree ** degree

    return identity, lower


def class_number_lower_chain(q, g, h, places_of_degree_2g):
    """Checks the chain h (q^(g+1) - 1)/(q - 1) >= N_2g >=
    psi(2g) - 4 g q^g >= q^(2g)/(2g) - (4g + 2) q^g.

    Returns
    -------
    tuple of bool
        One entry per link.
    """
    _require_genus(g)

    irreducible_count = count_monic_irreducibles(q, 2 * g)

    first = h * (q ** (g + 1) - 1) // (q - 1) >= places_of_degree_2g
    second = places_of_degree_2g >= irreducible_count - 4 * g * q ** g
    third = irreducible_count - 4 * g * q ** g >= Fraction(q ** (2 * g), 2 * g) - (
        4 * g + 2
    ) * q ** g

    return first, second, third


def degree_genus_ratio(degree, g):
    """Fraction: n / g, or None in genus zero."""
    return None if g == 0 else Fraction(degree, g)
