"""
Summaries of the zeta function of a cover.
"""
from abelzeta.utils.exceptions import InvariantBreachError
from abelzeta.zeta.lpolynomial import class_number, divisor_count_series


def _riemann_roch_value(h, q, g, n):
    """h (q^(n-g+1) - 1) / (q - 1), the number of effective divisors of
    degree n >= 2g - 1."""
    return h * (q ** (n - g + 1) - 1) // (q - 1)


class ZetaReport:
    """The L-polynomial of a cover together with its class number, its place
    counts and the numbers A_0..A_{2g+1} of effective divisors."""

    def __init__(self, lpoly, counts):
        """
        Parameters
        ----------
        lpoly: LPolynomial
            The validated L-polynomial.
        counts: list of int
            The place counts N_1..N_B.
        """
        self.lpoly = lpoly
        self.h = class_number(lpoly)
        self.counts = list(counts)
        self.divisor_counts = divisor_count_series(lpoly, 2 * lpoly.g + 1)

    def validate(self):
        """Asserts A_0 = 1, A_n >= 0, the exact Riemann-Roch values for
        n >= 2g - 1 and h = A_{2g} (q - 1) / (q^(g+1) - 1).

        Raises
        ------
        InvariantBreachError
        """
        q, g, h = self.lpoly.q, self.lpoly.g, self.h
        series = self.divisor_counts

        if series[0] != 1:
            raise InvariantBreachError("divisor-count", f"A_0 = {series[0]} != 1.")

        for n in range(max(0, 2 * g - 1), 2 * g + 2):

            if series[n] != _riemann_roch_value(h, q, g, n):
                raise InvariantBreachError(
                    "riemann-roch",
                    f"A_{n} = {series[n]} differs from h(q^(n-g+1)-1)/(q-1) = "
                    f"{_riemann_roch_value(h, q, g, n)}.",
                )

        if series[2 * g] * (q - 1) != h * (q ** (g + 1) - 1):
            raise InvariantBreachError(
                "riemann-roch", f"A_{2 * g} does not determine h = {h}."
            )

        return self

    def to_dict(self):
        return {
            "lpoly": self.lpoly.to_dict(),
            "h": str(self.h),
            "N": [str(n) for n in self.counts],
            "A": [str(a) for a in self.divisor_counts],
        }


def riemann_inequality_check(report):
    """Checks Riemann's inequality on the effective divisor counts,
    A_n >= h (q^(n-g+1) - 1) / (q - 1) for g <= n <= 2g + 1.

    Parameters
    ----------
    report: ZetaReport

    Returns
    -------
    bool
    """
    q, g, h = report.lpoly.q, report.lpoly.g, report.h

    return all(
        report.divisor_counts[n] >= _riemann_roch_value(h, q, g, n)
        for n in range(g, 2 * g + 2)
    )


def riemann_roch_check(report):
    """bool: Whether A_n = h (q^(n-g+1) - 1) / (q - 1) holds exactly for
    every max(0, 2g - 1) <= n <= 2g + 1."""
    q, g, h = report.lpoly.q, report.lpoly.g, report.h

    return all(
        report.divisor_counts[n] == _riemann_roch_value(h, q, g, n)
        for n in range(max(0, 2 * g - 1), 2 * g + 2)
    )
