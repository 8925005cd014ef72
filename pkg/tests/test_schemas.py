import json
from fractions import Fraction

import pytest
from marshmallow import ValidationError

from xlaguerre.pipeline import BOTH, analyze
from xlaguerre.schemas import AnalysisReportSchema, SpectrumSchema
from xlaguerre.spectral import spectrum


def test_report_json_is_stable(worked_pair):
    schema = AnalysisReportSchema()
    text = schema.to_json(analyze(worked_pair, Fraction(3, 2), BOTH).as_dict())
    assert schema.to_json(schema.from_json(text)) == text
    data = json.loads(text)
    assert data["shifts"]["t1p"] == -4
    assert data["friedrichs"] == "infinity"


def test_report_requires_fields(empty_pair):
    data = analyze(empty_pair).as_dict()
    del data["weight"]
    with pytest.raises(ValidationError):
        AnalysisReportSchema().load(data)


def test_spectrum_schema(empty_pair):
    dumped = SpectrumSchema().dump(spectrum(empty_pair).as_dict())
    assert dumped == {
        "families": [{"base": "-α", "excluded": []}],
        "points": [],
        "rendered": "{n-α}_{n∈ℕ₀}",
    }
