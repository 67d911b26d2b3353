"""
Family sweeps: sequences of covers of growing genus along which the ratio
ln h / (g ln q) is tabulated.
"""
import json
import logging

import numpy as np
import pandas

from abelzeta.attributes import UNDEFINED, Attribute, AttributeClass
from abelzeta.backends import create_backend
from abelzeta.bounds import (
    CHECK_NAMES,
    ROW_COLUMNS,
    CheckOutcome,
    evaluate_real,
    format_real,
)
from abelzeta.funcfield import CoverFamily, random_cover_spec
from abelzeta.lab.pipeline import analyze
from abelzeta.options import get_default_options
from abelzeta.utils.exceptions import (
    AbelZetaException,
    InvariantBreachError,
    TaskFailedError,
)
from abelzeta.utils.numbers import prime_power_decomposition

logger = logging.getLogger(__name__)

#: The work counter columns which follow the check columns.
WORK_COLUMNS = ("places_enumerated", "elements_visited")


class SweepPlan(AttributeClass):
    """A deterministic schedule of covers of one family.

    Examples
    --------
    The Artin-Schreier family y^2 + y = f over F_2 with deg f = 3, 5, ..., 41:

    >>> plan = SweepPlan(
    ...     family=CoverFamily.ArtinSchreier,
    ...     q=2,
    ...     minimum_degree=3,
    ...     maximum_degree=41,
    ...     degree_step=2,
    ...     asserted_genus=10,
    ... )
    """

    family = Attribute(
        docstring="The family of covers to sweep.", type_hint=CoverFamily
    )
    q = Attribute(docstring="The order of the constant field.", type_hint=int)
    m = Attribute(
        docstring="The Kummer exponent, which must divide q - 1.",
        type_hint=int,
        optional=True,
    )
    minimum_degree = Attribute(
        docstring="The degree of f of the first cover.", type_hint=int
    )
    maximum_degree = Attribute(
        docstring="The largest degree of f in the schedule.", type_hint=int
    )
    degree_step = Attribute(
        docstring="The step between consecutive degrees of f.",
        type_hint=int,
        default_value=1,
    )
    seed = Attribute(
        docstring="The seed of the generator f is drawn from.",
        type_hint=int,
        default_value=0,
    )
    budget = Attribute(
        docstring="The largest field which may be enumerated per cover.",
        type_hint=int,
        optional=True,
    )
    asserted_genus = Attribute(
        docstring="The genus g* from which on the large genus lower bounds "
        "are asserted rather than only reported.",
        type_hint=int,
        optional=True,
    )
    check_prediction = Attribute(
        docstring="Whether to independently count S_{g+1} for every row.",
        type_hint=bool,
        default_value=False,
    )
    record_timings = Attribute(
        docstring="Whether to add the wall time of each row to the outputs, "
        "which are then no longer byte reproducible.",
        type_hint=bool,
        default_value=False,
    )
    csv_path = Attribute(
        docstring="The path to write the table to.", type_hint=str, optional=True
    )
    json_path = Attribute(
        docstring="The path to write the summary to.", type_hint=str, optional=True
    )
    svg_path = Attribute(
        docstring="The path to write the ratio plot to.", type_hint=str, optional=True
    )

    def __init__(self, **kwargs):

        for name, value in kwargs.items():
            setattr(self, name, value)

    def validate(self):
        super(SweepPlan, self).validate()

        p, _ = prime_power_decomposition(self.q)

        if self.degree_step < 1:
            raise ValueError("The degree step must be positive.")
        if self.minimum_degree < 1:
            raise ValueError("The degree of f must be positive.")

        if self.family == CoverFamily.Kummer:

            if self.m == UNDEFINED:
                raise ValueError("A Kummer sweep requires the exponent m.")
            if self.m < 2 or (self.q - 1) % self.m != 0:
                raise ValueError(f"m = {self.m} must be at least 2 and divide q - 1.")

        elif self.m != UNDEFINED:
            raise ValueError("Only Kummer sweeps take an exponent m.")

        elif any(degree % p == 0 for degree in self.degrees()):
            raise ValueError(f"The schedule contains degrees divisible by p = {p}.")

    def degrees(self):
        """list of int: The scheduled degrees of f, possibly empty."""
        return list(
            range(self.minimum_degree, self.maximum_degree + 1, self.degree_step)
        )

    def covers(self):
        """Draws the scheduled covers, one per degree, from a generator
        seeded with :attr:`seed`.

        Returns
        -------
        list of CoverSpec
        """
        rng = np.random.default_rng(self.seed)
        m = None if self.m == UNDEFINED else self.m

        return [
            random_cover_spec(self.family, self.q, degree, rng, m)
            for degree in self.degrees()
        ]


class SweepRow:
    """A bounds report of one cover together with its work counters."""

    def __init__(self, analysis, record_timings=False):

        self.spec = analysis.spec
        self.bounds = analysis.bounds
        self.work = analysis.work
        self.wall_time = analysis.wall_time
        self.record_timings = record_timings

    @property
    def g(self):
        return self.bounds.g

    def to_row(self):
        """dict: The CSV row."""
        row = self.bounds.to_row()

        row["places_enumerated"] = self.work.places_enumerated
        row["elements_visited"] = self.work.elements_visited

        if self.record_timings:
            row["wall_time"] = f"{self.wall_time:.6f}"

        return row


def row_columns(record_timings=False):
    """tuple of str: The fixed CSV column order."""
    columns = ROW_COLUMNS + CHECK_NAMES + WORK_COLUMNS
    return columns + ("wall_time",) if record_timings else columns


def _analyze_row(spec, budget, verify_prediction, record_timings):
    analysis = analyze(spec, budget=budget, verify_prediction=verify_prediction)
    return SweepRow(analysis, record_timings)


class SweepResult:
    """The rows of a sweep, ordered by genus, and its summary."""

    def __init__(self, plan, rows):

        self.plan = plan
        self.rows = sorted(rows, key=lambda row: (row.g, row.spec.identifier))

    def asserted_rows(self):
        """list of SweepRow: The rows in the asserted large genus segment."""
        if self.plan.asserted_genus == UNDEFINED:
            return []

        return [row for row in self.rows if row.g >= self.plan.asserted_genus]

    def check_asserted_segment(self):
        """Asserts the large genus lower bounds on the asserted segment.

        Raises
        ------
        InvariantBreachError
        """
        for row in self.asserted_rows():

            for name in ("thm1_lower", "effective_lower"):

                if row.bounds.checks[name] != CheckOutcome.Pass:

                    raise InvariantBreachError(
                        name,
                        f"{row.spec} (g = {row.g}) lies in the asserted segment "
                        f"g >= {self.plan.asserted_genus} but {name} is "
                        f"{row.bounds.checks[name].value}.",
                    )

    def to_pandas(self):
        """pandas.DataFrame: The rows in the fixed column order."""
        columns = row_columns(self.plan.record_timings)
        return pandas.DataFrame(
            [row.to_row() for row in self.rows], columns=list(columns)
        )

    def to_csv(self, file_path=None):
        """str: The CSV table, also written to `file_path` if set."""
        return self.to_pandas().to_csv(file_path, index=False)

    def summary(self):
        """dict: The JSON ready summary of the sweep."""
        precision_digits = get_default_options().precision_digits

        segment = [row for row in self.rows if row.g > 0]

        if self.plan.asserted_genus != UNDEFINED:
            segment = self.asserted_rows()

        maximum_deviation = None

        if len(segment) > 0:

            deviation = evaluate_real(
                lambda mp: max(abs(row.bounds.ratio - 1) for row in segment),
                precision_digits,
            )
            maximum_deviation = format_real(deviation, precision_digits)

        failed = sorted(
            {name for row in self.rows for name in row.bounds.failed_checks()}
        )

        return {
            "family": self.plan.family.value,
            "q": self.plan.q,
            "m": None if self.plan.m == UNDEFINED else self.plan.m,
            "seed": self.plan.seed,
            "rows": len(self.rows),
            "genera": [row.g for row in self.rows],
            "asserted_genus": (
                None
                if self.plan.asserted_genus == UNDEFINED
                else self.plan.asserted_genus
            ),
            "segment_rows": len(segment),
            "max_abs_ratio_minus_one": maximum_deviation,
            "failed_checks": failed,
            "rows_data": [row.bounds.to_dict() for row in self.rows],
        }

    def summary_json(self, file_path=None):
        """str: The summary as deterministic JSON."""
        json_string = json.dumps(
            self.summary(), sort_keys=True, indent=2, separators=(",", ": ")
        )

        if file_path is not None:

            with open(file_path, "w") as file:
                file.write(json_string + "\n")

        return json_string


def run_sweep(plan, number_of_threads=None, backend=None):
    """Analyzes every cover of a plan.

    Parameters
    ----------
    plan: SweepPlan
        The validated plan.
    number_of_threads: int, optional
        The number of worker threads, defaulting to the engine options.
    backend: CalculationBackend, optional
        A started backend to use instead of creating one.

    Returns
    -------
    SweepResult

    Raises
    ------
    TaskFailedError
        If the analysis of any cover failed, naming the cover.
    InvariantBreachError
        If the asserted segment violates a large genus lower bound.
    """
    plan.validate()

    if number_of_threads is None:
        number_of_threads = get_default_options().number_of_threads

    covers = plan.covers()
    budget = None if plan.budget == UNDEFINED else plan.budget

    logger.info(f"Sweeping {len(covers)} {plan.family.value} covers over F_{plan.q}.")

    owns_backend = backend is None

    if owns_backend:
        backend = create_backend(number_of_threads)
        backend.start()

    try:

        futures = [
            backend.submit_task(
                _analyze_row,
                spec=spec,
                budget=budget,
                verify_prediction=plan.check_prediction,
                record_timings=plan.record_timings,
            )
            for spec in covers
        ]

        rows = []

        for spec, future in zip(covers, futures):

            result = future.result()

            if isinstance(result, AbelZetaException):
                raise TaskFailedError(result)

            logger.info(
                f"{spec}: g = {result.g}, ratio = {result.bounds.formatted_ratio()}."
            )
            rows.append(result)

    finally:

        if owns_backend:
            backend.stop()

    result = SweepResult(plan, rows)
    result.check_asserted_segment()

    return result

