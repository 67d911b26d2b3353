"""
Units tests for abelzeta.utils.serialization
"""
import json
from fractions import Fraction

import numpy as np
import pytest

from abelzeta.funcfield import CoverFamily
from abelzeta.utils.serialization import (
    TypedBaseModel,
    TypedJSONDecoder,
    TypedJSONEncoder,
)


class Foo(TypedBaseModel):
    def __init__(self, field1=None, field2=None):

        self.field1 = field1
        self.field2 = field2

    def __getstate__(self):
        return {"field1": self.field1, "field2": self.field2}

    def __setstate__(self, state):
        self.field1 = state["field1"]
        self.field2 = state["field2"]


@pytest.mark.parametrize(
    "value",
    [
        CoverFamily.ArtinSchreier,
        Fraction(10 ** 40 + 1, 3),
        Fraction(-7, 2),
        {3, 1, 2},
        frozenset({"a", "b"}),
        np.int64(12),
    ],
)
def test_typed_round_trip(value):

    serialized = json.dumps(value, cls=TypedJSONEncoder)
    deserialized = json.loads(serialized, cls=TypedJSONDecoder)

    assert type(deserialized) == type(value)
    assert deserialized == value


def test_fraction_strings():
    """Large rationals are written as decimal strings."""

    serialized = json.loads(json.dumps(Fraction(2 ** 100, 3), cls=TypedJSONEncoder))

    assert serialized["numerator"] == str(2 ** 100)
    assert serialized["denominator"] == "3"


def test_array_round_trip():

    value = np.array([1, -2, 3])

    serialized = json.dumps(value, cls=TypedJSONEncoder)
    deserialized = json.loads(serialized, cls=TypedJSONDecoder)

    assert np.array_equal(deserialized, value)


def test_base_model():

    foo = Foo(Fraction(1, 3), [CoverFamily.Kummer])

    recreated = Foo.parse_json(foo.json(format=True))

    assert isinstance(recreated, Foo)
    assert recreated.field1 == Fraction(1, 3)
    assert recreated.field2 == [CoverFamily.Kummer]


def test_base_model_file(tmpdir):

    file_path = str(tmpdir.join("foo.json"))

    Foo(1, "a").json(file_path)
    recreated = Foo.from_json(file_path)

    assert recreated.field1 == 1
    assert recreated.field2 == "a"


def test_unknown_type():

    with pytest.raises(ValueError):
        json.loads('{"@type": "nomodule"}', cls=TypedJSONDecoder)
