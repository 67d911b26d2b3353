"""
Typed JSON encoding of the engine's value objects.

Every value which JSON cannot represent natively is written as a dictionary
carrying an ``@type`` tag, the import path of its class, so that readers
rebuild exact rationals, enums and numpy scalars rather than floats and
strings.
"""
import importlib
import inspect
import json
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction

import numpy as np

TYPE_KEY = "@type"


def type_path(value_type):
    """str: The ``module.QualifiedName`` tag written for `value_type`."""
    return f"{value_type.__module__}.{value_type.__qualname__}"


def locate_type(path):
    """Imports the class named by a ``module.QualifiedName`` tag.

    Parameters
    ----------
    path: str
        The tag produced by :func:`type_path`.

    Returns
    -------
    type
    """
    module_name, separator, _ = path.rpartition(".")

    if len(separator) == 0 or len(module_name) == 0 or path.endswith("."):
        raise ValueError(f"{path} is not of the form module.ClassName.")

    parts = path.split(".")

    # The longest importable prefix is the module, the rest nested classes.
    for split in range(len(parts) - 1, 0, -1):

        try:
            located = importlib.import_module(".".join(parts[:split]))
        except ImportError:
            continue

        try:
            for name in parts[split:]:
                located = getattr(located, name)
        except AttributeError:
            raise ValueError(f"{path} does not name a class.")

        return located

    raise ValueError(f"No module of {path} could be imported.")


def _decode_enum(enum_class, state):
    return enum_class(state["value"])


def _encode_fraction(value):
    # Decimal strings keep numerators beyond 2^53 exact in any JSON reader.
    return {"numerator": str(value.numerator), "denominator": str(value.denominator)}


def _decode_fraction(_, state):
    return Fraction(int(state["numerator"]), int(state["denominator"]))


def _wrapped(convert):
    return lambda value: {"value": convert(value)}


def _unwrapped(convert):
    return lambda value_type, state: convert(state["value"])


#: The (type, encoder, decoder) triples of values without a __getstate__.
#: Subclasses match, and the first matching entry wins.
CODECS = (
    (Enum, lambda value: {"value": value.value}, _decode_enum),
    (Fraction, _encode_fraction, _decode_fraction),
    (set, _wrapped(sorted), _unwrapped(set)),
    (frozenset, _wrapped(sorted), _unwrapped(frozenset)),
    (np.int32, _wrapped(int), _unwrapped(np.int32)),
    (np.int64, _wrapped(int), _unwrapped(np.int64)),
    (np.float64, _wrapped(float), _unwrapped(np.float64)),
    (np.ndarray, _wrapped(lambda array: array.tolist()), _unwrapped(np.array)),
)


def _find_codec(value_type):

    for codec in CODECS:

        if issubclass(value_type, codec[0]):
            return codec

    return None


def _requires_arguments(value_type):
    """Whether the constructor of `value_type` has a required parameter."""
    optional_kinds = (inspect.Parameter.VAR_KEYWORD, inspect.Parameter.VAR_POSITIONAL)

    return any(
        parameter.default is inspect.Parameter.empty
        and parameter.kind not in optional_kinds
        for parameter in inspect.signature(value_type).parameters.values()
    )


class TypedJSONEncoder(json.JSONEncoder):
    """Writes :data:`CODECS` values and objects with a ``__getstate__``
    as ``@type`` tagged dictionaries."""

    def default(self, value):

        value_type = type(value)
        codec = _find_codec(value_type)

        if codec is not None:
            state = codec[1](value)

        elif callable(getattr(value, "__getstate__", None)):
            state = value.__getstate__()

        else:
            return super(TypedJSONEncoder, self).default(value)

        if not isinstance(state, dict):
            raise ValueError(f"The state of {value_type} is not a dictionary.")

        return {**state, TYPE_KEY: type_path(value_type)}


class TypedJSONDecoder(json.JSONDecoder):
    """Rebuilds the values written by :class:`TypedJSONEncoder`. Tagged
    objects other than :data:`CODECS` values are constructed without
    arguments and then passed their state."""

    def __init__(self, *args, **kwargs):
        kwargs["object_hook"] = self.object_hook
        super(TypedJSONDecoder, self).__init__(*args, **kwargs)

    @staticmethod
    def object_hook(dictionary):

        if TYPE_KEY not in dictionary:
            return dictionary

        value_type = locate_type(dictionary[TYPE_KEY])

        if not isinstance(value_type, type):
            raise ValueError(f"{dictionary[TYPE_KEY]} is not a class.")

        state = {key: value for key, value in dictionary.items() if key != TYPE_KEY}
        codec = _find_codec(value_type)

        if codec is not None:

            try:
                return codec[2](value_type, state)
            except (KeyError, TypeError, ValueError) as e:
                raise ValueError(f"Malformed {value_type.__name__} value {state}: {e}")

        if not hasattr(value_type, "__setstate__") or _requires_arguments(value_type):
            raise ValueError(f"{value_type} cannot be rebuilt from its state.")

        value = value_type()
        value.__setstate__(state)

        return value


class TypedBaseModel(ABC):
    """An object which round trips through typed JSON.

    The structure of the output is whatever ``__getstate__`` returns, and
    ``__setstate__`` must accept the same dictionary back.
    """

    def json(self, file_path=None, format=False):
        """Serializes this object with sorted keys.

        Parameters
        ----------
        file_path: str, optional
            A file to also write the JSON to.
        format: bool
            Whether to indent the output.

        Returns
        -------
        str
        """
        indent_options = {"indent": 2, "separators": (",", ": ")} if format else {}

        json_string = json.dumps(
            self, sort_keys=True, cls=TypedJSONEncoder, **indent_options
        )

        if file_path is not None:

            with open(file_path, "w") as file:
                file.write(json_string)

        return json_string

    @classmethod
    def from_json(cls, file_path):
        """Loads an object from a JSON file, see :meth:`parse_json`."""
        with open(file_path, "r") as file:
            return cls.parse_json(file.read())

    @classmethod
    def parse_json(cls, string_contents):
        """Parses typed JSON.

        Parameters
        ----------
        string_contents: str or bytes

        Returns
        -------
        Any
        """
        return json.loads(string_contents, cls=TypedJSONDecoder)

    @abstractmethod
    def __getstate__(self):
        """dict of str and Any: The serialized fields of this object."""

    @abstractmethod
    def __setstate__(self, state):
        """Restores the fields returned by ``__getstate__``."""
