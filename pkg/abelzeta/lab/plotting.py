"""
Static plots of sweep results.
"""
import logging

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from abelzeta.bounds import effective_lower_ratio, ratio_upper_finite_field

logger = logging.getLogger(__name__)


def plot_ratio_convergence(result, file_path, include_date=False):
    """Draws ln h / (g ln q) against the genus for every row of a sweep of
    positive genus, overlaid with the effective lower floor, the finite
    field ceiling and the limit 1, and saves it as a self contained SVG.

    Parameters
    ----------
    result: SweepResult
        The sweep to plot.
    file_path: str
        The path of the SVG file.
    include_date: bool
        Whether to embed the creation date, which makes the file differ
        between otherwise identical runs.

    Returns
    -------
    matplotlib.figure.Figure
    """
    rows = [row for row in result.rows if row.g > 0]
    q = result.plan.q

    genera = np.array([row.g for row in rows], dtype=int)
    ratios = np.array([float(row.bounds.ratio) for row in rows])

    figure = Figure(figsize=(6.4, 4.8))
    axis = figure.add_subplot(1, 1, 1)

    if len(rows) > 0:

        curve_genera = np.arange(1, genera.max() + 1)
        floors = np.array([float(effective_lower_ratio(q, g)) for g in curve_genera])

        axis.plot(curve_genera, floors, "r--", label="effective lower floor")
        axis.plot(genera, ratios, "bo-", label=r"$\ln h / (g \ln q)$")

    axis.axhline(
        float(ratio_upper_finite_field(q)),
        color="g",
        linestyle=":",
        label="upper bound",
    )
    axis.axhline(1.0, color="k", linewidth=0.5)

    axis.set_xlabel("genus g")
    axis.set_ylabel("ratio")
    axis.set_title(f"{result.plan.family.value} covers over F_{q}")
    axis.legend(loc="lower right")

    metadata = None if include_date else {"Date": None}

    with matplotlib.rc_context({"svg.hashsalt": "abelzeta"}):
        figure.savefig(file_path, format="svg", metadata=metadata)

    logger.info(f"The ratio plot was saved to {file_path}.")
    return figure
