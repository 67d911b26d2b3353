"""
Units tests for abelzeta.lab.plotting
"""
import os

from abelzeta.lab import SweepPlan, plot_ratio_convergence, run_sweep
from abelzeta.utils import get_data_filename


def test_ratio_plot(tmpdir):

    plan = SweepPlan.from_json(
        get_data_filename(os.path.join("plans", "kummer_f5_hyperelliptic.json"))
    )
    plan.maximum_degree = 7

    result = run_sweep(plan, 1)

    first_path = str(tmpdir.join("first.svg"))
    second_path = str(tmpdir.join("second.svg"))

    plot_ratio_convergence(result, first_path)
    plot_ratio_convergence(result, second_path)

    with open(first_path, "rb") as file:
        first = file.read()
    with open(second_path, "rb") as file:
        second = file.read()

    assert first.startswith(b"<?xml")
    assert first == second


def test_empty_ratio_plot(tmpdir):

    plan = SweepPlan.from_json(get_data_filename(os.path.join("plans", "empty.json")))

    file_path = str(tmpdir.join("empty.svg"))
    plot_ratio_convergence(run_sweep(plan, 1), file_path)

    assert os.path.isfile(file_path)
