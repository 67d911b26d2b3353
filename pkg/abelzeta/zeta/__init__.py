from .lpolynomial import (
    LPolynomial,
    class_number,
    divisor_count_series,
    lpoly_from_counts,
    place_counts_from_lpoly,
    power_sums,
    predicted_S,
    zeta_eval,
)
from .reports import ZetaReport, riemann_inequality_check, riemann_roch_check

__all__ = [
    LPolynomial,
    ZetaReport,
    class_number,
    divisor_count_series,
    lpoly_from_counts,
    place_counts_from_lpoly,
    power_sums,
    predicted_S,
    riemann_inequality_check,
    riemann_roch_check,
    zeta_eval,
]
