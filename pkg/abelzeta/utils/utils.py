"""
A collection of general utilities.
"""
import logging
import os
import sys


def get_data_filename(relative_path):
    """The installed path of a file shipped in ``abelzeta/data``, such as
    ``plans/kummer_f5_hyperelliptic.json``.

    Raises
    ------
    ValueError
        If the package holds no such file.
    """
    from pkg_resources import resource_filename

    path = resource_filename("abelzeta", os.path.join("data", relative_path))

    if not os.path.isfile(path):
        raise ValueError(f"abelzeta ships no data file named {relative_path}.")

    return path


def setup_timestamp_logging(file_path=None, stream=None, level=logging.INFO):
    """Adds a handler which prefixes each record with its time of day to
    the root logger.

    Parameters
    ----------
    file_path: str, optional
        A file to append the log to instead of `stream`.
    stream: io.TextIOBase, optional
        The stream to log to when no file is given. Defaults to
        ``sys.stderr`` so that reports written to standard output
        stay machine readable.
    level: int
        The logging level.
    """
    if file_path is not None:
        handler = logging.FileHandler(file_path)
    else:
        handler = logging.StreamHandler(sys.stderr if stream is None else stream)

    handler.setFormatter(
        logging.Formatter(
            fmt="%(asctime)s.%(msecs)03d %(levelname)-8s %(message)s",
            datefmt="%H:%M:%S",
        )
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.addHandler(handler)


def check_budget(requested, budget, what="field elements"):
    """Raise a `BudgetExceededError` if `requested` exceeds `budget`.

    Parameters
    ----------
    requested: int
        The amount of work about to be performed.
    budget: int
        The maximum amount of work allowed.
    what: str
        A description of what is being counted, used in the error message.
    """
    from abelzeta.utils.exceptions import BudgetExceededError

    if requested > budget:
        raise BudgetExceededError(requested, budget, what)
