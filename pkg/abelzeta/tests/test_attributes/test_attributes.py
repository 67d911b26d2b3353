"""
Units tests for abelzeta.attributes
"""
import json

import pytest

from abelzeta.attributes import UNDEFINED, Attribute, AttributeClass
from abelzeta.funcfield import CoverFamily
from abelzeta.utils.serialization import TypedJSONDecoder, TypedJSONEncoder


class AttributeObject(AttributeClass):

    required_value = Attribute("", str)
    optional_value = Attribute("", int, UNDEFINED, optional=True)
    family = Attribute("", CoverFamily, CoverFamily.Kummer)
    degrees = Attribute("", tuple, (), optional=False)


class NestedAttributeObject(AttributeClass):

    some_value = Attribute("", AttributeObject)

    some_list = Attribute("", list, UNDEFINED, optional=True)
    some_dict = Attribute("", dict, UNDEFINED, optional=True)


def test_undefined_singleton():
    """A test of the UNDEFINED singleton pattern"""

    from abelzeta.attributes.attributes import UndefinedAttribute

    value_a = UndefinedAttribute()
    value_b = UndefinedAttribute()

    assert value_a == value_b
    assert value_a != 0


def test_undefined_serialization():
    """A test of serializing the UNDEFINED placeholder"""

    value_a = UNDEFINED
    value_a_json = json.dumps(value_a, cls=TypedJSONEncoder)
    value_a_recreated = json.loads(value_a_json, cls=TypedJSONDecoder)

    assert value_a == value_a_recreated


def test_get_attributes():

    all_attributes = AttributeObject.get_attributes()
    assert all_attributes == ["required_value", "optional_value", "family", "degrees"]


def test_type_check():

    some_object = AttributeObject()

    with pytest.raises(ValueError):
        some_object.required_value = 5

    with pytest.raises(ValueError):
        some_object.optional_value = True

    with pytest.raises(ValueError):
        some_object.family = "hyperelliptic"


def test_value_coercion():
    """Plain JSON values are converted to enums and tuples."""

    some_object = AttributeObject()

    some_object.family = "artin-schreier"
    assert some_object.family == CoverFamily.ArtinSchreier

    some_object.degrees = [3, 5]
    assert some_object.degrees == (3, 5)


def test_unsupported_attribute():

    with pytest.raises(ValueError):
        Attribute("", "not a type")

    with pytest.raises(ValueError):
        Attribute("", int, 5, optional=True)

    with pytest.raises(ValueError):
        Attribute("", int, "five")

    with pytest.raises(ValueError):
        Attribute("", int, True)


def test_state_methods():

    some_object = AttributeObject()
    some_object.required_value = "Set"

    state = some_object.__getstate__()

    assert len(state) == 3

    new_object = AttributeObject()
    new_object.required_value = ""
    new_object.optional_value = 10

    new_object.__setstate__(state)

    assert new_object.required_value == some_object.required_value
    assert new_object.optional_value == 10
    assert new_object.family == some_object.family


def test_unknown_state():

    some_object = AttributeObject()

    with pytest.raises(ValueError):
        some_object.__setstate__({"required_value": "", "unknown": 1})

    with pytest.raises(IndexError):
        some_object.__setstate__({"optional_value": 1})


def test_plain_json():
    """Untyped JSON is parsed into the class it is read as."""

    some_object = AttributeObject.parse_json(
        '{"required_value": "a", "family": "artin-schreier"}'
    )

    assert isinstance(some_object, AttributeObject)
    assert some_object.family == CoverFamily.ArtinSchreier
    assert some_object.optional_value == UNDEFINED

    with pytest.raises(IndexError):
        AttributeObject.parse_json('{"family": "kummer"}')


def test_nested_validation():

    nested_object = NestedAttributeObject()
    nested_object.some_value = AttributeObject()

    # Should fail
    with pytest.raises(ValueError):
        nested_object.validate()

    nested_object.some_value.required_value = ""
    nested_object.validate()

    nested_object.some_list = [AttributeObject()]

    # Should fail
    with pytest.raises(ValueError):
        nested_object.validate()

    nested_object.some_list[0].required_value = ""
    nested_object.validate()

    nested_object.some_dict = {"x": AttributeObject()}

    # Should fail
    with pytest.raises(ValueError):
        nested_object.validate()

    nested_object.some_dict["x"].required_value = ""
    nested_object.validate()


def test_docstrings():

    assert AttributeObject.required_value.__doc__ == "str:  This attribute is required."
    assert AttributeObject.optional_value.__doc__.endswith("*optional*.")
    assert AttributeObject.degrees.__doc__.endswith("Defaults to ``()``.")
