"""
Tables of the number of monic irreducible polynomials over F_q.
"""
import logging

import pandas

from abelzeta.algebra import (
    count_monic_irreducibles,
    enumerate_monic_irreducibles,
    field_ctx,
)
from abelzeta.options import resolve_budget
from abelzeta.utils.exceptions import InvariantBreachError
from abelzeta.utils.numbers import prime_power_decomposition

logger = logging.getLogger(__name__)


def irreducible_count_table(q, m, budget=None):
    """Tabulates psi(1)..psi(m) from the counting formula, together with an
    enumeration column wherever q^d is within the budget.

    Parameters
    ----------
    q: int
        The field order.
    m: int
        The largest degree, at least one.
    budget: int, optional
        The largest q^d which is enumerated.

    Returns
    -------
    pandas.DataFrame
        The columns d, formula and enumerated (empty where not enumerated).

    Raises
    ------
    InvariantBreachError
        If the two columns ever disagree.
    """
    if m < 1:
        raise ValueError(f"The degree must be positive, not {m}.")

    p, n = prime_power_decomposition(q)

    budget = resolve_budget(budget)
    base = field_ctx(p, n, budget)

    rows = []

    for degree in range(1, m + 1):

        formula = count_monic_irreducibles(q, degree)
        enumerated = ""

        if q ** degree <= budget:

            enumerated = sum(
                1 for _ in enumerate_monic_irreducibles(base, degree, budget)
            )

            if enumerated != formula:
                raise InvariantBreachError(
                    "irreducible-count",
                    f"{enumerated} monic irreducibles of degree {degree} over F_{q} "
                    f"were enumerated, but the formula gives {formula}.",
                )

        logger.debug(f"psi({degree}) = {formula} over F_{q}.")

        rows.append(
            {"d": degree, "formula": str(formula), "enumerated": str(enumerated)}
        )

    return pandas.DataFrame(rows, columns=["d", "formula", "enumerated"])
