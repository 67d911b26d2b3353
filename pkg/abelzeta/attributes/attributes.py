"""
Typed, documented and serializable attributes for option and plan objects.
"""
import copy
import inspect
import typing
from collections.abc import Iterable, Mapping
from enum import Enum

from abelzeta.utils.serialization import TYPE_KEY, TypedBaseModel


class UndefinedAttribute:
    """The value of an attribute which was never set, as opposed to one
    set to ``None``. All instances compare equal."""

    def __eq__(self, other):
        return isinstance(other, UndefinedAttribute)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(UndefinedAttribute)

    def __repr__(self):
        return "UNDEFINED"

    def __getstate__(self):
        return {}

    def __setstate__(self, state):
        pass


UNDEFINED = UndefinedAttribute()


def _union_members(type_hint):
    """tuple: The members of a `typing.Union`, or just `type_hint`."""
    if getattr(type_hint, "__origin__", None) is typing.Union:
        return type_hint.__args__

    return (type_hint,)


def is_supported_type(type_hint):
    """bool: Whether `type_hint` is a class or a `typing.Union` of classes."""
    return all(isinstance(member, type) for member in _union_members(type_hint))


def is_instance_of_type(value, type_hint):
    """Whether `value` matches `type_hint`. An `int` is a valid `float`,
    while a `bool` is never a valid `int`.

    Parameters
    ----------
    value: Any
    type_hint: type or typing.Union

    Returns
    -------
    bool
    """
    for member in _union_members(type_hint):

        if isinstance(value, bool) and member is not bool:
            continue

        if isinstance(value, member) or (member is float and isinstance(value, int)):
            return True

    return False


def _children(value):
    """The values nested one level inside a container."""
    if isinstance(value, Mapping):
        return list(value.values())
    if isinstance(value, Iterable) and not isinstance(value, (str, bytes)):
        return list(value)

    return []


class AttributeClass(TypedBaseModel):
    """An object whose state is a set of declared :class:`Attribute` values,
    which can be read from either typed or plain JSON.
    """

    @classmethod
    def get_attributes(cls):
        """list of str: The attribute names declared on this class and its
        bases, base classes first and in declaration order."""
        names = {}

        for owner in reversed(inspect.getmro(cls)):

            for name, value in vars(owner).items():

                if isinstance(value, Attribute):
                    names.setdefault(name, None)

        return list(names)

    @classmethod
    def _attribute(cls, name):
        return getattr(cls, name)

    def validate(self):
        """Checks that every required attribute is set, including those of
        nested attribute classes, possibly held in lists or dictionaries.

        Raises
        ------
        ValueError
            If a required attribute is missing.
        """
        for name in self.get_attributes():

            value = getattr(self, name)

            if value == UNDEFINED and not self._attribute(name).optional:
                raise ValueError(f"The required {name} attribute has not been set.")

            nested = [value] if isinstance(value, AttributeClass) else _children(value)

            for child in nested:

                if isinstance(child, AttributeClass):
                    child.validate()

    @classmethod
    def parse_json(cls, string_contents):
        """Parses either typed JSON, or a plain dictionary of attribute values
        such as a hand written plan file, then validates the result."""
        parsed = super(AttributeClass, cls).parse_json(string_contents)

        if isinstance(parsed, dict):

            state = parsed
            parsed = cls()
            parsed.__setstate__(state)

        parsed.validate()
        return parsed

    def __getstate__(self):

        state = {}

        for name in self.get_attributes():

            value = getattr(self, name)

            if value == UNDEFINED and self._attribute(name).optional:
                continue

            state[name] = value

        return state

    def __setstate__(self, state):

        names = self.get_attributes()
        unknown = sorted(set(state) - set(names) - {TYPE_KEY})

        if len(unknown) > 0:
            raise ValueError(
                f"{type(self).__name__} has no attributes named {', '.join(unknown)}."
            )

        for name in names:

            attribute = self._attribute(name)

            if name in state:
                attribute.__set__(self, state[name])

            elif not attribute.optional and attribute.default_value == UNDEFINED:
                raise IndexError(f"The state has no value for the {name} attribute.")


class Attribute:
    """A descriptor which type checks and documents an attribute of an
    :class:`AttributeClass`.

    Values are stored on the instance under the attribute name prefixed
    with an underscore. Plain JSON values are coerced on assignment:
    strings and integers to the enum named by the type hint, and lists to
    tuples.
    """

    def __init__(self, docstring, type_hint, default_value=UNDEFINED, optional=False):
        """
        Parameters
        ----------
        docstring: str
            What the attribute holds. The type and default are appended.
        type_hint: type or typing.Union
            The accepted type.
        default_value: Any
            The initial value. Optional attributes default to `UNDEFINED`.
        optional: bool
            Whether the attribute may be left unset.
        """
        if not is_supported_type(type_hint):
            raise ValueError(f"{type_hint} is not a class or a union of classes.")

        if optional and default_value != UNDEFINED:
            raise ValueError("An optional attribute cannot have a default value.")

        if default_value != UNDEFINED and not is_instance_of_type(
            default_value, type_hint
        ):
            raise ValueError(f"The default {default_value!r} is not a {type_hint}.")

        self.type_hint = type_hint
        self.optional = optional
        self._default_value = default_value
        self._name = None

        self.__doc__ = self._describe(docstring)

    @property
    def default_value(self):
        """Any: The initial value of the attribute."""
        return self._default_value

    def _describe(self, docstring):

        type_name = getattr(self.type_hint, "__name__", str(self.type_hint))
        description = f"{type_name}: {docstring}"

        if self.optional:
            return f"{description} This attribute is *optional*."
        if self._default_value == UNDEFINED:
            return f"{description} This attribute is required."

        return f"{description} Defaults to ``{self._default_value!r}``."

    def _coerce(self, value):

        if isinstance(self.type_hint, type) and issubclass(self.type_hint, Enum):

            if isinstance(value, (str, int)) and not isinstance(value, self.type_hint):
                return self.type_hint(value)

        if self.type_hint is tuple and isinstance(value, list):
            return tuple(value)

        return value

    def __set_name__(self, owner, name):
        self._name = name

    def __get__(self, instance, owner=None):

        if instance is None:
            return self

        private_name = f"_{self._name}"

        if private_name not in vars(instance):
            setattr(instance, private_name, copy.deepcopy(self._default_value))

        return getattr(instance, private_name)

    def __set__(self, instance, value):

        value = self._coerce(value)

        if value != UNDEFINED and not is_instance_of_type(value, self.type_hint):
            raise ValueError(
                f"The {self._name} attribute only accepts values of type "
                f"{self.type_hint}, not {type(value).__name__}."
            )

        setattr(instance, f"_{self._name}", value)
