"""Tests for hyperwalk data types and their JSON payloads."""

import json
from fractions import Fraction

import pytest

from hyperwalk.exceptions import HyperwalkInputError
from hyperwalk.types import (
    CheckResult,
    Classification,
    Verdict,
    Witness,
    format_fraction,
    parse_fraction,
)


class TestFractions:
    """Test exact rational formatting."""

    def test_format(self):
        """Test fractions always carry a denominator."""
        assert format_fraction(Fraction(1, 3)) == "1/3"
        assert format_fraction(2) == "2/1"

    @pytest.mark.parametrize(("text", "value"), [("1/3", Fraction(1, 3)), ("4", Fraction(4))])
    def test_parse(self, text, value):
        """Test rationals and bare integers parse."""
        assert parse_fraction(text) == value

    @pytest.mark.parametrize("text", ["one half", "1/0", ""])
    def test_parse_errors(self, text):
        """Test malformed rationals are input errors."""
        with pytest.raises(HyperwalkInputError):
            parse_fraction(text)


class TestWitness:
    """Test witness payloads."""

    def test_payload(self):
        """Test values are serialized as exact strings."""
        witness = Witness("associativity", (1, 1, 2, 0), (Fraction(1, 4), Fraction(1, 8)))
        payload = witness.to_payload()
        assert payload == {
            "kind": "associativity",
            "indices": [1, 1, 2, 0],
            "values": ["1/4", "1/8"],
        }
        assert Witness.from_payload(payload) == witness


class TestCheckResult:
    """Test check results."""

    def test_ok_is_truthy(self):
        """Test a passing result is truthy and has no witness."""
        result = CheckResult.ok((True, True))
        assert result
        assert result.witness is None
        assert result.to_payload() == {"holds": True, "witness": None, "per_index": [True, True]}

    def test_fail_round_trip(self):
        """Test a failing result keeps its witness through JSON."""
        result = CheckResult.fail("s2", (1, 1, 1, 2, 3), (1, 0))
        assert not result
        assert result.witness.values == (Fraction(1), Fraction(0))
        restored = CheckResult.from_payload(json.loads(json.dumps(result.to_payload())))
        assert restored == result


class TestVerdictPayload:
    """Test verdict serialization."""

    @pytest.mark.parametrize("fixture_name", ["petersen_graph", "fig2", "prism"])
    def test_json_round_trip(self, request, coordinator_for, fixture_name):
        """Test a verdict survives a JSON round trip."""
        verdict = coordinator_for(request.getfixturevalue(fixture_name)).decide()
        restored = Verdict.from_payload(json.loads(json.dumps(verdict.to_payload())))
        assert restored == verdict
        assert restored.classification == verdict.classification

    def test_schema_is_versioned(self, cycle4, coordinator_for):
        """Test the payload carries its schema version."""
        payload = coordinator_for(cycle4).decide().to_payload()
        assert payload["schema"] == "1"
        assert payload["classification"] == Classification.DISTANCE_REGULAR

    def test_unknown_schema(self, cycle4, coordinator_for):
        """Test another schema version is refused."""
        payload = coordinator_for(cycle4).decide().to_payload()
        payload["schema"] = "0"
        with pytest.raises(HyperwalkInputError, match="schema"):
            Verdict.from_payload(payload)
