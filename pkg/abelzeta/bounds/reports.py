"""
The per cover report of every inequality check.
"""
import logging

from abelzeta.bounds.checks import (
    class_number_lower_chain,
    degree_genus_ratio,
    effective_lower_ratio,
    hasse_arf_checks,
    lemma2_check,
    lemma3_ratio_bound,
    lemma4_check,
    lemma5_check,
    ratio,
    ratio_bounds_outcomes,
    ratio_interval,
    ratio_upper_finite_field,
    riemann_hurwitz_check,
    thm1_intermediate_lower_ratio,
    thm1_lower_bound,
    upper_bound_h,
    zeta_chain_check,
)
from abelzeta.bounds.precision import CheckOutcome, decide, format_real
from abelzeta.options import get_default_options
from abelzeta.utils.exceptions import InvariantBreachError
from abelzeta.zeta import (
    place_counts_from_lpoly,
    riemann_inequality_check,
    riemann_roch_check,
)

logger = logging.getLogger(__name__)

#: The named checks, in CSV column order.
CHECK_NAMES = (
    "lemma2",
    "thm1_lower",
    "effective_lower",
    "intermediate_lower",
    "upper_h",
    "ratio_upper",
    "zeta_chain",
    "lemma3",
    "lemma4",
    "lemma5",
    "hasse_arf_first",
    "hasse_arf_second",
    "riemann_roch",
    "riemann_inequality",
    "riemann_hurwitz",
    "class_number_chain",
)

#: Checks which only hold once the genus is large enough.
REPORT_ONLY_CHECKS = frozenset({"thm1_lower", "effective_lower", "intermediate_lower"})

#: The leading CSV columns, followed by one column per named check.
ROW_COLUMNS = (
    "spec",
    "family",
    "q",
    "m",
    "f",
    "n",
    "g",
    "h",
    "deg_diff",
    "ratio",
    "n_over_g",
)


class BoundsReport:
    """The outcome of every named check on one cover, together with the
    exact integers the checks were decided from."""

    @property
    def spec(self):
        """CoverSpec: The cover."""
        return self._spec

    @property
    def g(self):
        """int: The genus."""
        return self._g

    @property
    def h(self):
        """int: The class number."""
        return self._h

    @property
    def degree(self):
        """int: The degree n = [K : F]."""
        return self._spec.degree

    @property
    def different_degree(self):
        """int: The degree of the different."""
        return self._different_degree

    @property
    def ratio(self):
        """mpmath.mpf: ln h / (g ln q), or None in genus zero."""
        return self._ratio

    @property
    def checks(self):
        """dict of str and CheckOutcome: The outcome of each named check."""
        return dict(self._checks)

    def __init__(
        self,
        spec,
        g,
        h,
        different_degree,
        checks,
        ratio_value=None,
        precision_digits=None,
        counted_degrees=None,
    ):
        """
        Parameters
        ----------
        spec: CoverSpec
            The cover.
        g, h, different_degree: int
            The genus, class number and degree of the different.
        checks: dict of str and CheckOutcome
            The outcome of each check in :data:`CHECK_NAMES`.
        ratio_value: mpmath.mpf, optional
            ln h / (g ln q), absent in genus zero.
        precision_digits: int, optional
            The number of significant digits to report the ratio with.
        counted_degrees: int, optional
            How many of N_1..N_2g the bound checks read from counted places.
            The rest were predicted by the L-polynomial. All by default.
        """
        missing = set(CHECK_NAMES) - set(checks)

        if len(missing) > 0:
            raise ValueError(f"The outcomes of {sorted(missing)} are missing.")

        if precision_digits is None:
            precision_digits = get_default_options().precision_digits

        self._spec = spec
        self._g = g
        self._h = h
        self._different_degree = different_degree
        self._checks = {name: checks[name] for name in CHECK_NAMES}
        self._ratio = ratio_value
        self._precision_digits = precision_digits
        self._counted_degrees = (
            2 * g if counted_degrees is None else min(counted_degrees, 2 * g)
        )

    @property
    def lemma2_degrees(self):
        """dict of str and list of int: The degrees m <= 2g whose place count
        entered the place count bound as ``counted``, and those which only
        repeat the L-polynomial as ``derived``."""
        return {
            "counted": list(range(1, self._counted_degrees + 1)),
            "derived": list(range(self._counted_degrees + 1, 2 * self._g + 1)),
        }

    def failed_checks(self):
        """list of str: The hard checks which failed."""
        return [
            name
            for name, outcome in self._checks.items()
            if outcome == CheckOutcome.Fail
        ]

    def inconclusive_checks(self):
        """list of str: The checks interval arithmetic could not decide."""
        return [
            name
            for name, outcome in self._checks.items()
            if outcome == CheckOutcome.Inconclusive
        ]

    def formatted_ratio(self):
        """str: The ratio as a decimal string, empty in genus zero."""
        if self._ratio is None:
            return ""

        return format_real(self._ratio, self._precision_digits)

    def to_row(self):
        """dict: The CSV row, keyed by :data:`ROW_COLUMNS` followed by the
        check names. Big integers are decimal strings."""
        n_over_g = degree_genus_ratio(self.degree, self._g)

        row = {
            "spec": self._spec.identifier,
            "family": self._spec.family.value,
            "q": self._spec.q,
            "m": "" if self._spec.m is None else self._spec.m,
            "f": self._spec.to_dict()["f"],
            "n": self.degree,
            "g": self._g,
            "h": str(self._h),
            "deg_diff": str(self._different_degree),
            "ratio": self.formatted_ratio(),
            "n_over_g": "" if n_over_g is None else str(n_over_g),
        }

        for name, outcome in self._checks.items():
            row[name] = outcome.value

        return row

    def to_dict(self):
        """dict: The JSON ready report."""
        row = self.to_row()

        value = {
            **{column: row[column] for column in ROW_COLUMNS},
            "checks": {name: row[name] for name in CHECK_NAMES},
            "lemma2_degrees": self.lemma2_degrees,
        }

        if self._g > 0:

            value["effective_lower_ratio"] = format_real(
                effective_lower_ratio(self._spec.q, self._g), self._precision_digits
            )
            value["intermediate_lower_ratio"] = format_real(
                thm1_intermediate_lower_ratio(self._spec.q, self._g),
                self._precision_digits,
            )

        value["ratio_upper"] = format_real(
            ratio_upper_finite_field(self._spec.q), self._precision_digits
        )

        return value


def _extended_counts(zeta_report):
    """The place counts N_1..N_{2g}, measured where available and predicted
    by the L-polynomial beyond."""
    g = zeta_report.lpoly.g
    counts = list(zeta_report.counts)

    if len(counts) >= 2 * g:
        return counts

    predicted = place_counts_from_lpoly(zeta_report.lpoly, 2 * g)

    if predicted[: len(counts)] != counts:
        raise InvariantBreachError(
            "place-count-prediction",
            f"The L-polynomial predicts {predicted[: len(counts)]} places rather "
            f"than the counted {counts}.",
        )

    return counts + predicted[len(counts):]


def build_bounds_report(
    ramification, zeta_report, s=2, precision_digits=None, maximum_precision_digits=None
):
    """Evaluates every named check on a cover.

    Parameters
    ----------
    ramification: RamificationReport
        The ramification data of the cover.
    zeta_report: ZetaReport
        The zeta data of the cover.
    s: int
        The exponent at which zeta values are compared.
    precision_digits: int, optional
        The starting precision of interval comparisons.
    maximum_precision_digits: int, optional
        The precision after which comparisons are inconclusive.

    Returns
    -------
    BoundsReport
    """
    spec = ramification.spec
    q, g, h = spec.q, zeta_report.lpoly.g, zeta_report.h

    if g != ramification.genus:
        raise InvariantBreachError(
            "genus",
            f"{spec}: the L-polynomial has genus {g} but Riemann-Hurwitz gives "
            f"{ramification.genus}.",
        )

    precision = {
        "precision_digits": precision_digits,
        "maximum_precision_digits": maximum_precision_digits,
    }

    counts = _extended_counts(zeta_report)

    if len(zeta_report.counts) < 2 * g:
        logger.debug(
            f"{spec}: N_m for {len(zeta_report.counts)} < m <= {2 * g} are "
            f"predicted by the L-polynomial rather than counted."
        )

    checks = {}

    checks["lemma2"] = CheckOutcome.from_bool(all(lemma2_check(counts, q, g, 2 * g)))
    checks["upper_h"] = CheckOutcome.from_bool(upper_bound_h(q, g, h))
    checks["zeta_chain"] = CheckOutcome.from_bool(
        all(zeta_chain_check(zeta_report, spec.degree, s))
    )
    checks["lemma4"] = CheckOutcome.from_bool(lemma4_check())
    checks["lemma5"] = CheckOutcome.from_bool(
        lemma5_check(q, spec.degree, ramification.different_degree)
    )

    first, second = hasse_arf_checks(ramification, q)

    checks["hasse_arf_first"] = CheckOutcome.from_bool(first)
    checks["hasse_arf_second"] = CheckOutcome.from_bool(second)
    checks["riemann_roch"] = CheckOutcome.from_bool(riemann_roch_check(zeta_report))
    checks["riemann_inequality"] = CheckOutcome.from_bool(
        riemann_inequality_check(zeta_report)
    )
    checks["riemann_hurwitz"] = CheckOutcome.from_bool(
        all(riemann_hurwitz_check(ramification))
    )

    ratio_value = None

    if g == 0:

        # Every bound on ln h / (g ln q) is undefined in genus zero.
        for name in (
            "thm1_lower",
            "effective_lower",
            "intermediate_lower",
            "ratio_upper",
            "lemma3",
            "class_number_chain",
        ):
            checks[name] = CheckOutcome.ReportOnly

    else:

        ratio_value = ratio(q, g, h, precision_digits)

        checks["thm1_lower"] = CheckOutcome.from_bool(
            thm1_lower_bound(q, g, h), hard=False
        )
        checks["effective_lower"], checks["ratio_upper"] = ratio_bounds_outcomes(
            q, g, h, **precision
        )

        def intermediate(ctx):

            log_q = ctx.log(ctx.mpf(q))
            floor = (
                ctx.log(ctx.mpf(q - 1)) / (g * log_q)
                + 1
                - ctx.mpf(1) / g
                - ctx.log(ctx.mpf(4 * g)) / (g * log_q)
            )
            return ratio_interval(ctx, q, g, h) >= floor

        outcome = decide(intermediate, **precision)
        checks["intermediate_lower"] = (
            CheckOutcome.ReportOnly if outcome == CheckOutcome.Fail else outcome
        )

        checks["lemma3"] = lemma3_ratio_bound(q, g, h, spec.degree, s, **precision)
        checks["class_number_chain"] = CheckOutcome.from_bool(
            all(class_number_lower_chain(q, g, h, counts[2 * g - 1]))
        )

    report = BoundsReport(
        spec,
        g,
        h,
        ramification.different_degree,
        checks,
        ratio_value,
        precision_digits,
        counted_degrees=len(zeta_report.counts),
    )

    logger.debug(f"{spec}: {report.to_row()}")
    return report


def assert_hard_checks(report):
    """Raises if any hard check of a report failed.

    Parameters
    ----------
    report: BoundsReport

    Raises
    ------
    InvariantBreachError
    """
    failed = report.failed_checks()

    if len(failed) > 0:

        raise InvariantBreachError(
            failed[0], f"{report.spec} fails the checks {', '.join(failed)}."
        )

    for name in report.inconclusive_checks():
        logger.warning(f"{report.spec}: the {name} check is inconclusive.")

    return report
