"""
Certified real comparisons with mpmath interval arithmetic.
"""
import logging
import threading
from enum import Enum
from fractions import Fraction

import mpmath

from abelzeta.options import get_default_options

logger = logging.getLogger(__name__)

# mpmath keeps its working precision in module level contexts.
_precision_lock = threading.RLock()


class CheckOutcome(Enum):
    """The outcome of a named check.

    Hard checks are either passed or failed. Checks which only hold for
    large genus are recorded as ``report-only`` when they do not hold (or
    are undefined) for an instance, and comparisons which interval
    arithmetic could not decide at the maximum precision are
    ``inconclusive``.
    """

    Pass = "pass"
    Fail = "fail"
    ReportOnly = "report-only"
    Inconclusive = "inconclusive"

    @classmethod
    def from_bool(cls, value, hard=True):
        """CheckOutcome: Pass for True, otherwise Fail (or ReportOnly for
        checks which are not asserted)."""
        if value:
            return cls.Pass

        return cls.Fail if hard else cls.ReportOnly


def _resolve_precision(precision_digits, maximum_precision_digits):

    options = get_default_options()

    if precision_digits is None:
        precision_digits = options.precision_digits
    if maximum_precision_digits is None:
        maximum_precision_digits = max(
            options.maximum_precision_digits, precision_digits
        )

    return precision_digits, maximum_precision_digits


def interval(ctx, value):
    """Converts an exact integer or Fraction into an interval of the given
    interval context."""
    value = Fraction(value)
    return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)


def decide(comparison, precision_digits=None, maximum_precision_digits=None):
    """Evaluates an interval comparison at increasing precision until it
    is decided.

    Parameters
    ----------
    comparison: callable
        A function of the mpmath interval context returning True, False, or
        None when the intervals overlap.
    precision_digits: int, optional
        The starting number of significant digits.
    maximum_precision_digits: int, optional
        The precision after which an undecided comparison is reported as
        inconclusive.

    Returns
    -------
    CheckOutcome
        Pass, Fail or Inconclusive.
    """
    digits, maximum_digits = _resolve_precision(
        precision_digits, maximum_precision_digits
    )

    while True:

        with _precision_lock:

            previous = mpmath.iv.dps

            try:
                mpmath.iv.dps = digits
                result = comparison(mpmath.iv)
            finally:
                mpmath.iv.dps = previous

        if result is not None:
            return CheckOutcome.Pass if result else CheckOutcome.Fail

        if digits >= maximum_digits:

            logger.warning(
                f"An interval comparison remained undecided at {digits} digits."
            )
            return CheckOutcome.Inconclusive

        logger.debug(f"Escalating an undecided comparison past {digits} digits.")
        digits = min(2 * digits, maximum_digits)


def evaluate_real(function, precision_digits=None):
    """Evaluates a real valued function of the mpmath context with guard
    digits, returning the result rounded to the requested precision.

    Parameters
    ----------
    function: callable
        A function of :data:`mpmath.mp`.
    precision_digits: int, optional
        The number of significant digits required.

    Returns
    -------
    mpmath.mpf
    """
    digits, _ = _resolve_precision(precision_digits, None)

    with _precision_lock:

        with mpmath.workdps(digits + 10):
            value = function(mpmath.mp)

        with mpmath.workdps(digits):
            return +value


def format_real(value, precision_digits=None):
    """str: A deterministic decimal representation of a real value."""
    digits, _ = _resolve_precision(precision_digits, None)

    with _precision_lock:
        return mpmath.nstr(value, digits)
