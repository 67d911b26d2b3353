"""
The full analysis of a single cover: ramification, place counts, the
L-polynomial and every inequality check.
"""
import logging
import time

from abelzeta.bounds import assert_hard_checks, build_bounds_report
from abelzeta.funcfield import (
    PlaceCountWork,
    count_places,
    count_places_of_degree,
    merge_place_counts,
    ramification_report,
    sums_from_place_counts,
)
from abelzeta.options import get_default_options, resolve_budget
from abelzeta.utils import check_budget
from abelzeta.utils.exceptions import (
    AbelZetaException,
    InvariantBreachError,
    TaskFailedError,
)
from abelzeta.zeta import ZetaReport, lpoly_from_counts, predicted_S

logger = logging.getLogger(__name__)


class CoverAnalysis:
    """The ramification, zeta and bounds reports of one cover, together
    with the work it took to compute them."""

    def __init__(self, spec, ramification, zeta, bounds, work, wall_time=None):

        self.spec = spec
        self.ramification = ramification
        self.zeta = zeta
        self.bounds = bounds
        self.work = work
        self.wall_time = wall_time

    def to_dict(self):
        """dict: The JSON ready report."""
        return {
            "spec": self.spec.identifier,
            "ramification": self.ramification.to_dict(),
            "zeta": self.zeta.to_dict(),
            "bounds": self.bounds.to_dict(),
        }


def count_places_parallel(spec, bound, backend=None, budget=None):
    """Counts the places of a cover up to degree `bound`, optionally
    submitting one task per degree of the places of F_q(x) below.

    Parameters
    ----------
    spec: CoverSpec
        A validated cover.
    bound: int
        The degree bound.
    backend: CalculationBackend, optional
        The backend to distribute the degrees over. The counts are computed
        inline when not set.
    budget: int, optional
        The largest field which may be enumerated.

    Returns
    -------
    list of int
        N_1..N_bound.
    PlaceCountWork
        The work performed.
    """
    if bound < 1:
        return [], PlaceCountWork()

    budget = resolve_budget(budget)
    check_budget(spec.q ** bound, budget, "field elements")

    if backend is None:

        results = [
            count_places_of_degree(spec, degree, bound, budget)
            for degree in range(1, bound + 1)
        ]

    else:

        futures = [
            backend.submit_task(
                count_places_of_degree,
                spec=spec,
                degree=degree,
                bound=bound,
                budget=budget,
            )
            for degree in range(1, bound + 1)
        ]
        results = [future.result() for future in futures]

        for result in results:

            if isinstance(result, AbelZetaException):
                raise TaskFailedError(result)

    work = PlaceCountWork(1, 0)

    for _, degree_work in results:
        work += degree_work

    counts = merge_place_counts(spec, bound, [counts for counts, _ in results])
    return counts, work


def check_prediction(spec, lpoly, budget=None):
    """Independently counts S_{g+1} and compares it with the value
    predicted by the L-polynomial.

    Raises
    ------
    InvariantBreachError
    """
    g = lpoly.g

    counted = sums_from_place_counts(count_places(spec, g + 1, budget))[-1]
    predicted = predicted_S(lpoly, g + 1)

    if counted != predicted:

        raise InvariantBreachError(
            "prediction",
            f"{spec}: S_{g + 1} = {counted} but the L-polynomial predicts {predicted}.",
        )

    logger.debug(f"{spec}: the predicted S_{g + 1} = {predicted} was confirmed.")


def analyze(
    spec,
    budget=None,
    precision_digits=None,
    maximum_precision_digits=None,
    verify_prediction=None,
    backend=None,
):
    """Runs the full pipeline on a validated cover.

    Parameters
    ----------
    spec: CoverSpec
        The cover.
    budget: int, optional
        The largest field which may be enumerated.
    precision_digits: int, optional
        The starting precision of real valued comparisons.
    maximum_precision_digits: int, optional
        The precision after which comparisons are inconclusive.
    verify_prediction: bool, optional
        Whether to independently count S_{g+1}. Defaults to the engine
        options.
    backend: CalculationBackend, optional
        A backend to count places of different degrees on.

    Returns
    -------
    CoverAnalysis

    Raises
    ------
    InvariantBreachError
        If any hard check fails.
    """
    start_time = time.perf_counter()

    spec.validate()

    if verify_prediction is None:
        verify_prediction = get_default_options().check_prediction

    ramification = ramification_report(spec, budget)
    g = ramification.genus

    logger.info(
        f"{spec}: genus {g}, different of degree {ramification.different_degree}."
    )

    counts, work = count_places_parallel(spec, max(g, 1), backend, budget)

    lpoly = lpoly_from_counts(spec.q, g, counts)
    zeta = ZetaReport(lpoly, counts).validate()

    if verify_prediction:
        check_prediction(spec, lpoly, budget)

    bounds = build_bounds_report(
        ramification,
        zeta,
        precision_digits=precision_digits,
        maximum_precision_digits=maximum_precision_digits,
    )
    assert_hard_checks(bounds)

    wall_time = time.perf_counter() - start_time

    logger.info(f"{spec}: h = {zeta.h}, analyzed in {wall_time:.3f} s.")

    return CoverAnalysis(spec, ramification, zeta, bounds, work, wall_time)
