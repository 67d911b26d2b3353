"""
Units tests for abelzeta.bounds.checks
"""
from fractions import Fraction

import pytest

from abelzeta.bounds import (
    CheckOutcome,
    class_number_lower_chain,
    degree_genus_ratio,
    effective_lower_ratio,
    hasse_arf_checks,
    lemma2_check,
    lemma3_epsilon_check,
    lemma3_ratio_bound,
    lemma4_check,
    lemma5_check,
    ratio,
    ratio_bounds_outcomes,
    ratio_upper_finite_field,
    riemann_hurwitz_check,
    thm1_intermediate_lower_ratio,
    thm1_lower_bound,
    upper_bound_h,
    zeta_chain_check,
)
from abelzeta.bounds.checks import rational_zeta_value, sqrt_q_power
from abelzeta.funcfield import ramification_report
from abelzeta.tests.utils import create_cover
from abelzeta.zeta import LPolynomial, ZetaReport


def _close(value, expected, tolerance=1e-6):
    return abs(float(value) - expected) < tolerance


@pytest.mark.parametrize(
    "q, g, h, expected", [(2, 1, 3, 1.5849625007), (3, 1, 4, 1.2618595071)]
)
def test_ratio(q, g, h, expected):
    assert _close(ratio(q, g, h), expected)


@pytest.mark.parametrize("g, h", [(0, 1), (1, 0)])
def test_ratio_undefined(g, h):

    with pytest.raises(ValueError):
        ratio(2, g, h)


def test_real_bounds():

    assert _close(effective_lower_ratio(2, 1), -2.4426950409)
    assert _close(thm1_intermediate_lower_ratio(2, 1), -2.0)
    assert _close(ratio_upper_finite_field(2), 2.5431066063)
    assert _close(ratio_upper_finite_field(4), 1.5849625007)

    # The floor tends to one from below.
    assert 0.9 < effective_lower_ratio(2, 10 ** 6) < 1

    with pytest.raises(ValueError):
        effective_lower_ratio(2, 0)
    with pytest.raises(ValueError):
        ratio_upper_finite_field(1)


def test_thm1_lower_bound():

    assert thm1_lower_bound(2, 1, 3)
    assert not thm1_lower_bound(2, 10, 1)

    with pytest.raises(ValueError):
        thm1_lower_bound(2, 0, 1)


def test_sqrt_q_power():
    assert sqrt_q_power(2, 1) == (3, 2)
    assert sqrt_q_power(2, 2) == (17, 12)
    assert sqrt_q_power(5, 0) == (1, 0)


@pytest.mark.parametrize(
    "q, g, h, expected",
    [
        (2, 1, 5, True),
        (2, 1, 6, False),
        (3, 1, 7, True),
        (3, 1, 8, False),
        (4, 2, 81, True),
    ],
)
def test_upper_bound_h(q, g, h, expected):
    """h <= (1 + sqrt(q))^(2g), where (1 + sqrt(2))^2 = 5.83 and
    (1 + sqrt(3))^2 = 7.46."""
    assert upper_bound_h(q, g, h) == expected


def test_ratio_bounds_outcomes():

    assert ratio_bounds_outcomes(2, 1, 3) == (CheckOutcome.Pass, CheckOutcome.Pass)

    # A class number far below the effective floor is only reported.
    lower, upper = ratio_bounds_outcomes(2, 40, 1)

    assert lower == CheckOutcome.ReportOnly
    assert upper == CheckOutcome.Pass


def test_lemma2_check():

    assert lemma2_check([3, 3], 2, 1) == [True, True]
    assert lemma2_check([20], 2, 1) == [False]
    assert lemma2_check([3, 3], 2, 1, bound=1) == [True]

    with pytest.raises(ValueError):
        lemma2_check([3], 2, 1, bound=2)


def test_zeta_chain_check():

    report = ZetaReport(LPolynomial(2, 1, (1, 0, 2)), [3])

    assert rational_zeta_value(2, Fraction(1, 4)) == Fraction(8, 3)
    assert zeta_chain_check(report, 2) == (True, True)
    assert zeta_chain_check(report, 2, s=3) == (True, True)


def test_lemma3_ratio_bound():

    assert lemma3_ratio_bound(2, 1, 3, 2) == CheckOutcome.Pass
    assert lemma3_ratio_bound(2, 1, 5, 1) == CheckOutcome.Fail
    assert lemma3_epsilon_check(2, 1, 3, 2, Fraction(1, 2)) == CheckOutcome.Pass

    with pytest.raises(ValueError):
        lemma3_ratio_bound(2, 1, 3, 2, s=1)
    with pytest.raises(ValueError):
        lemma3_epsilon_check(2, 1, 3, 2, 0)


def test_lemma4_check():
    assert lemma4_check()
    assert not lemma4_check(2, 1)


@pytest.mark.parametrize(
    "q, degree, different_degree, expected",
    [
        (2, 2, 4, True),
        (3, 2, 4, True),
        (3, 2, 2, True),
        (2, 5, 0, False),
        (2, 5, 6, True),
    ],
)
def test_lemma5_check(q, degree, different_degree, expected):
    """q^(2 deg D) >= n^n, e.g. 2^8 = 256 and 3^8 = 6561 against 4."""
    assert lemma5_check(q, degree, different_degree) == expected


def test_lemma5_check_degree():

    with pytest.raises(ValueError):
        lemma5_check(2, 1, 4)


@pytest.mark.parametrize(
    "text", ["as:q=2,f=x^3", "kummer:q=3,m=2,f=x^3+2*x", "kummer:q=3,m=2,f=x"]
)
def test_ramification_checks(text):

    spec = create_cover(text)
    report = ramification_report(spec)

    assert hasse_arf_checks(report, spec.q) == (True, True)
    assert riemann_hurwitz_check(report) == (True, True)


def test_class_number_lower_chain():

    assert class_number_lower_chain(2, 1, 3, 3) == (True, True, True)
    # N_2g can never exceed the divisor count h (q^(g+1) - 1)/(q - 1).
    assert class_number_lower_chain(2, 1, 3, 10)[0] is False

    with pytest.raises(ValueError):
        class_number_lower_chain(2, 0, 1, 0)


def test_degree_genus_ratio():
    assert degree_genus_ratio(4, 6) == Fraction(2, 3)
    assert degree_genus_ratio(2, 0) is None
