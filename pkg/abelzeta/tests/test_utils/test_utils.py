"""
Units tests for abelzeta.utils.utils
"""
import io
import logging
import os

import pytest

from abelzeta.utils import check_budget, get_data_filename, setup_timestamp_logging
from abelzeta.utils.exceptions import BudgetExceededError


def test_check_budget():

    check_budget(10, 10)

    with pytest.raises(BudgetExceededError) as error_info:
        check_budget(11, 10, "places")

    assert error_info.value.requested == 11
    assert error_info.value.budget == 10
    assert "11 places" in str(error_info.value)


def test_get_data_filename():

    file_name = get_data_filename(os.path.join("plans", "artin_schreier_f2.json"))
    assert os.path.isfile(file_name)

    with pytest.raises(ValueError):
        get_data_filename(os.path.join("plans", "missing.json"))


def test_timestamp_logging():

    root_logger = logging.getLogger()

    handlers = list(root_logger.handlers)
    level = root_logger.level

    stream = io.StringIO()

    try:

        setup_timestamp_logging(stream=stream, level=logging.DEBUG)
        logging.getLogger("abelzeta.test").debug("a debug message")

    finally:

        for handler in list(root_logger.handlers):

            if handler not in handlers:
                root_logger.removeHandler(handler)

        root_logger.setLevel(level)

    assert "DEBUG" in stream.getvalue()
    assert "a debug message" in stream.getvalue()
