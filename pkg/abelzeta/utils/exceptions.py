"""
A collection of commonly raised python exceptions.
"""
import traceback

from abelzeta.utils.serialization import TypedBaseModel


class AbelZetaError(Exception):
    """The base class of all errors raised by this package."""

    #: The process exit code the command line interface maps this error onto.
    exit_code = 1


class PolynomialParseError(AbelZetaError, ValueError):
    """Raised when a polynomial string does not follow the strict
    ``c*x^k`` text format."""

    exit_code = 2


class SpecificationParseError(PolynomialParseError):
    """Raised when a cover specification string (e.g. ``as:q=2,f=x^3``)
    cannot be parsed."""


class CoverValidationError(AbelZetaError, ValueError):
    """Raised when a cover specification violates the hypotheses
    required of its family."""

    exit_code = 3


class BudgetExceededError(AbelZetaError, RuntimeError):
    """Raised when a computation would visit more field elements than the
    configured budget allows. Results are never silently truncated."""

    exit_code = 4

    def __init__(self, requested, budget, what="elements"):

        self.requested = requested
        self.budget = budget

        super(BudgetExceededError, self).__init__(
            f"The computation requires {requested} {what}, which exceeds the "
            f"configured budget of {budget}."
        )


class InvariantBreachError(AbelZetaError, AssertionError):
    """Raised when an identity or inequality that must hold for every valid
    instance fails. This always signals a bug or corrupted input data."""

    exit_code = 5

    def __init__(self, check_name, message):

        self.check_name = check_name
        super(InvariantBreachError, self).__init__(f"[{check_name}] {message}")


class FieldMismatchError(AbelZetaError, ValueError):
    """Raised when elements or polynomials from different finite field
    contexts are combined."""


class TaskFailedError(AbelZetaError):
    """Raised by an orchestrator when a worker returned a failure, keeping
    the exit code of the original error and the cover it concerned."""

    def __init__(self, exception):

        self.exception = exception
        self.spec = exception.spec
        self.exit_code = exception.exit_code

        super(TaskFailedError, self).__init__(
            f"{exception.error_type} while processing {exception.spec}: "
            f"{exception.summary()}"
        )


class AbelZetaException(TypedBaseModel):
    """A serializable wrapper around an `Exception`, which allows workers
    to return failures as values together with the cover they concern.
    """

    @classmethod
    def from_exception(cls, exception, spec=None):
        """Initialize this class from an existing exception.

        Parameters
        ----------
        exception: Exception
            The existing exception
        spec: str, optional
            The text form of the cover specification being processed.

        Returns
        -------
        cls
            The initialized exception object.
        """

        message = traceback.format_exception(None, exception, exception.__traceback__)

        return cls(
            message,
            spec=spec,
            error_type=type(exception).__name__,
            exit_code=getattr(exception, "exit_code", 1),
        )

    def __init__(self, message=None, spec=None, error_type=None, exit_code=1):
        """Constructs a new AbelZetaException object.

        Parameters
        ----------
        message: str or list of str
            Information about the raised exception.
        spec: str, optional
            The text form of the cover specification which triggered the error.
        error_type: str, optional
            The class name of the original exception.
        exit_code: int
            The exit code associated with the original exception.
        """
        self.message = message
        self.spec = spec
        self.error_type = error_type
        self.exit_code = exit_code

    def __getstate__(self):
        return {
            "message": self.message,
            "spec": self.spec,
            "error_type": self.error_type,
            "exit_code": self.exit_code,
        }

    def __setstate__(self, state):
        self.message = state["message"]
        self.spec = state.get("spec")
        self.error_type = state.get("error_type")
        self.exit_code = state.get("exit_code", 1)

    def __str__(self):

        message = self.message

        if isinstance(message, list):
            message = "".join(message)

        if self.spec is not None:
            message = f"{self.spec}: {message}"

        return str(message)

    def summary(self):
        """str: The last line of the original traceback."""
        message = self.message

        if isinstance(message, list):
            message = "".join(message)

        lines = [line for line in str(message).strip().splitlines() if line.strip()]
        return "" if len(lines) == 0 else lines[-1].strip()
