"""
Units tests for abelzeta.utils.exceptions
"""
import pytest

from abelzeta.utils.exceptions import (
    AbelZetaException,
    BudgetExceededError,
    CoverValidationError,
    InvariantBreachError,
    SpecificationParseError,
    TaskFailedError,
)


def raise_and_wrap(exception, spec=None):

    try:
        raise exception
    except Exception as e:
        return AbelZetaException.from_exception(e, spec)


def test_exceptions():
    """Test that AbelZetaException serializes correctly."""

    wrapped = raise_and_wrap(ValueError("dummy message"))

    assert wrapped.error_type == "ValueError"
    assert wrapped.exit_code == 1
    assert wrapped.summary() == "ValueError: dummy message"

    state = wrapped.__getstate__()

    recreated = AbelZetaException()
    recreated.__setstate__(state)

    assert recreated.message == wrapped.message
    assert recreated.spec is None
    assert recreated.summary() == wrapped.summary()


def test_exception_json():

    wrapped = raise_and_wrap(CoverValidationError("bad cover"), "as:q=2,f=x^2")
    recreated = AbelZetaException.parse_json(wrapped.json())

    assert isinstance(recreated, AbelZetaException)
    assert recreated.spec == "as:q=2,f=x^2"
    assert recreated.exit_code == 3
    assert recreated.summary().endswith("CoverValidationError: bad cover")
    assert str(recreated).startswith("as:q=2,f=x^2: ")


@pytest.mark.parametrize(
    "exception, exit_code",
    [
        (SpecificationParseError("x"), 2),
        (CoverValidationError("x"), 3),
        (BudgetExceededError(10, 5), 4),
        (InvariantBreachError("lemma5", "x"), 5),
    ],
)
def test_exit_codes(exception, exit_code):

    assert exception.exit_code == exit_code
    assert raise_and_wrap(exception).exit_code == exit_code


def test_task_failed_error():

    wrapped = raise_and_wrap(BudgetExceededError(10, 5), "as:q=2,f=x^3")
    error = TaskFailedError(wrapped)

    assert error.exit_code == 4
    assert error.spec == "as:q=2,f=x^3"
    assert "as:q=2,f=x^3" in str(error)


def test_error_messages():

    error = BudgetExceededError(10, 5, "field elements")

    assert str(error) == (
        "The computation requires 10 field elements, which exceeds the "
        "configured budget of 5."
    )
    assert isinstance(error, RuntimeError)

    error = InvariantBreachError("lemma5", "the bound fails.")

    assert error.check_name == "lemma5"
    assert str(error) == "[lemma5] the bound fails."
    assert isinstance(error, AssertionError)

    assert isinstance(SpecificationParseError("x"), ValueError)
