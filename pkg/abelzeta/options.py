"""
Engine wide configuration.
"""
import threading

from abelzeta.attributes import Attribute, AttributeClass


class EngineOptions(AttributeClass):
    """The options which control how much work the engine may perform and
    how precisely real valued quantities are evaluated.

    Examples
    --------
    Temporarily raise the enumeration budget:

    >>> options = EngineOptions(budget=2 ** 28)
    >>> set_default_options(options)
    """

    budget = Attribute(
        docstring="The maximum number of field elements a single call may "
        "enumerate, and the maximum size of any finite field context.",
        type_hint=int,
        default_value=2 ** 26,
    )
    precision_digits = Attribute(
        docstring="The number of significant decimal digits used when "
        "evaluating real valued quantities such as logarithms.",
        type_hint=int,
        default_value=30,
    )
    maximum_precision_digits = Attribute(
        docstring="The precision at which an interval comparison which is "
        "still undecided is reported as inconclusive.",
        type_hint=int,
        default_value=120,
    )
    number_of_threads = Attribute(
        docstring="The number of worker threads used by sweeps and oracle runs.",
        type_hint=int,
        default_value=1,
    )
    check_prediction = Attribute(
        docstring="Whether to independently count S_{g+1} and compare it with "
        "the value predicted by each computed L-polynomial.",
        type_hint=bool,
        default_value=False,
    )

    def __init__(
        self,
        budget=None,
        precision_digits=None,
        maximum_precision_digits=None,
        number_of_threads=None,
        check_prediction=None,
    ):
        """Constructs a new EngineOptions object. Any argument left as
        `None` keeps its default value.
        """
        if budget is not None:
            self.budget = budget
        if precision_digits is not None:
            self.precision_digits = precision_digits
        if maximum_precision_digits is not None:
            self.maximum_precision_digits = maximum_precision_digits
        if number_of_threads is not None:
            self.number_of_threads = number_of_threads
        if check_prediction is not None:
            self.check_prediction = check_prediction

    def validate(self):
        super(EngineOptions, self).validate()

        if self.budget < 2:
            raise ValueError("The budget must allow at least two elements.")
        if self.precision_digits < 15:
            raise ValueError("At least 15 significant digits are required.")
        if self.maximum_precision_digits < self.precision_digits:
            raise ValueError(
                "The maximum precision must not be below the working precision."
            )
        if self.number_of_threads < 1:
            raise ValueError("At least one thread is required.")


_default_options = EngineOptions()
_default_options_lock = threading.Lock()


def get_default_options():
    """EngineOptions: The process wide default options."""
    with _default_options_lock:
        return _default_options


def set_default_options(options):
    """Replaces the process wide default options.

    Parameters
    ----------
    options: EngineOptions
        The new defaults.
    """
    global _default_options

    options.validate()

    with _default_options_lock:
        _default_options = options


def resolve_budget(budget=None):
    """int: `budget` if set, otherwise the default budget."""
    return get_default_options().budget if budget is None else budget
