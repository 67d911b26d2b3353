"""
Units tests for abelzeta.bounds.precision
"""
from fractions import Fraction

import pytest

from abelzeta.bounds import CheckOutcome, decide, evaluate_real, format_real
from abelzeta.bounds.precision import interval


@pytest.mark.parametrize(
    "value, hard, expected",
    [
        (True, True, CheckOutcome.Pass),
        (False, True, CheckOutcome.Fail),
        (True, False, CheckOutcome.Pass),
        (False, False, CheckOutcome.ReportOnly),
    ],
)
def test_from_bool(value, hard, expected):
    assert CheckOutcome.from_bool(value, hard) == expected


def test_decide():

    assert decide(lambda ctx: ctx.mpf(2) > ctx.mpf(1)) == CheckOutcome.Pass
    assert decide(lambda ctx: ctx.mpf(2) < ctx.mpf(1)) == CheckOutcome.Fail


def test_decide_escalates():
    """1 + 10^-40 is indistinguishable from 1 at 15 digits."""

    def comparison(ctx):
        return interval(ctx, Fraction(10 ** 40 + 1, 10 ** 40)) > ctx.mpf(1)

    outcome = decide(comparison, precision_digits=15, maximum_precision_digits=120)
    assert outcome == CheckOutcome.Pass


def test_decide_inconclusive():

    outcome = decide(lambda ctx: None, precision_digits=15, maximum_precision_digits=30)
    assert outcome == CheckOutcome.Inconclusive


def test_evaluate_and_format():

    value = evaluate_real(lambda mp: mp.pi, 20)

    assert format_real(value, 20) == "3.1415926535897932385"
    assert format_real(value, 5) == "3.1416"
