"""Shared fixtures of the test suite. Slow tests, such as full family
sweeps, only run when ``--runslow`` is passed.
"""
import pytest

from abelzeta.options import EngineOptions, get_default_options, set_default_options


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_collection_modifyitems(config, items):

    if config.getoption("--runslow"):
        return

    skip_slow = pytest.mark.skip(reason="needs --runslow to run")

    for item in items:

        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def default_options():
    """Restores the engine options changed by a test."""

    previous = get_default_options()
    set_default_options(EngineOptions())

    yield get_default_options()

    set_default_options(previous)
