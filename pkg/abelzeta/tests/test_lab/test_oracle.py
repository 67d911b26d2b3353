"""
Units tests for abelzeta.lab.oracle
"""
import json

import pytest

from abelzeta.funcfield import genus_formula
from abelzeta.lab import check_cover, draw_covers, run_oracle
from abelzeta.lab.oracle import ORACLE_BUDGET
from abelzeta.tests.utils import create_cover


def test_empty_oracle():
    """A run without covers passes vacuously."""

    result = run_oracle(1, 0, 3)

    assert result.passed
    assert result.to_dict() == {
        "seed": 1,
        "count": 0,
        "passed": True,
        "failures": 0,
        "outcomes": [],
    }


@pytest.mark.parametrize(
    "text", ["as:q=2,f=x^3", "kummer:q=3,m=2,f=x^3+2*x", "kummer:q=5,m=4,f=x^2+2"]
)
def test_check_cover(text):

    outcome = check_cover(create_cover(text))

    assert outcome.passed
    assert outcome.mismatches == []
    assert "replay" not in outcome.to_dict()


def test_corrupted_counts():
    """An injected error in N_2 is located at S_2."""

    outcome = check_cover(create_cover("as:q=2,f=x^3"), corrupt={2: 1})

    assert not outcome.passed
    assert len(outcome.mismatches) == 1

    mismatch = outcome.mismatches[0]

    assert mismatch.kind == "splitting"
    assert (mismatch.k, mismatch.expected, mismatch.actual) == (2, 9, 11)

    assert outcome.replay == 'abelzeta oracle --replay "as:q=2,f=x^3"'
    assert outcome.to_dict()["replay"] == outcome.replay


def test_draw_covers():

    first = draw_covers(5, 6, 2)
    second = draw_covers(5, 6, 2)

    assert [spec.identifier for spec in first] == [spec.identifier for spec in second]

    for spec in first:

        g = genus_formula(spec)

        assert g <= 2
        assert spec.q ** (2 * g + 1) <= ORACLE_BUDGET


@pytest.mark.parametrize("count, max_genus", [(-1, 2), (2, -1)])
def test_draw_covers_invalid(count, max_genus):

    with pytest.raises(ValueError):
        draw_covers(1, count, max_genus)


def test_small_oracle():

    result = run_oracle(3, 4, 1)

    assert result.passed
    assert len(result.outcomes) == 4
    assert result.failures() == []


def test_oracle_independent_of_threads():
    """The report is byte identical for any worker count."""

    def report(number_of_threads):
        result = run_oracle(5, 6, 4, number_of_threads=number_of_threads)
        return json.dumps(result.to_dict(), sort_keys=True)

    expected = report(1)

    assert json.loads(expected)["count"] == 6
    assert report(2) == expected
    assert report(8) == expected


def test_replayed_oracle():

    result = run_oracle(1, 0, 0, specs=["as:q=2,f=x^3"], corrupt={2: 1})

    assert not result.passed
    assert [outcome.spec.identifier for outcome in result.failures()] == [
        "as:q=2,f=x^3"
    ]


@pytest.mark.slow
def test_oracle():

    result = run_oracle(1, 25, 6)

    assert result.passed
    assert len(result.outcomes) == 25
