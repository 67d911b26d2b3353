from .checks import (
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
from .precision import CheckOutcome, decide, evaluate_real, format_real
from .reports import (
    CHECK_NAMES,
    REPORT_ONLY_CHECKS,
    ROW_COLUMNS,
    BoundsReport,
    assert_hard_checks,
    build_bounds_report,
)

__all__ = [
    CHECK_NAMES,
    REPORT_ONLY_CHECKS,
    ROW_COLUMNS,
    BoundsReport,
    CheckOutcome,
    assert_hard_checks,
    build_bounds_report,
    class_number_lower_chain,
    decide,
    degree_genus_ratio,
    effective_lower_ratio,
    evaluate_real,
    format_real,
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
]
