import json

from marshmallow import Schema, fields

from .spectrum import MeromorphicSchema, SpectrumDiffSchema, SpectrumSchema


class InputsSchema(Schema):
    m1 = fields.Str(required=True)
    m2 = fields.Str(required=True)
    alpha = fields.Str(required=True)
    convention = fields.Str(required=True)


class ShiftReportSchema(Schema):
    t1 = fields.Integer(required=True)
    t2 = fields.Integer(required=True)
    t1p = fields.Integer(required=True)
    t2p = fields.Integer(required=True)
    mu = fields.Str(required=True)
    nu = fields.Str(required=True)
    mup = fields.Str(required=True)
    nup = fields.Str(required=True)
    C1 = fields.Str(required=True)
    C2 = fields.Str(required=True)
    C3 = fields.Str(required=True)
    D1 = fields.Str(required=True)
    D2 = fields.Str(required=True)
    D3 = fields.Str(required=True)
    alpha_prime = fields.Str(required=True)
    alpha_second = fields.Str(required=True)


class BoundarySchema(Schema):
    y1 = fields.Str(required=True)
    y2 = fields.Str(required=True)
    gamma0 = fields.Str(required=True)
    gamma1 = fields.Str(required=True)


class ClassificationSchema(Schema):
    zero = fields.Str(required=True)
    infinity = fields.Str(required=True)
    deficiency = fields.List(fields.Integer(), allow_none=True)


class AnalysisReportSchema(Schema):
    inputs = fields.Nested(InputsSchema, required=True)
    shifts = fields.Nested(ShiftReportSchema, required=True)
    bold_alpha = fields.Str(required=True)
    admissible = fields.Boolean(required=True)
    weight = fields.Str(required=True)
    frak_c = fields.Nested(MeromorphicSchema, required=True)
    frak_d = fields.Nested(MeromorphicSchema, required=True)
    m_infinity = fields.Nested(MeromorphicSchema, required=True)
    m_zero = fields.Nested(MeromorphicSchema, required=True)
    # convention -> extension -> spectrum
    spectra = fields.Dict(
        keys=fields.Str(),
        values=fields.Dict(keys=fields.Str(), values=fields.Nested(SpectrumSchema)),
        required=True,
    )
    disjoint = fields.Boolean(required=True)
    boundary = fields.Nested(BoundarySchema, required=True)
    classification = fields.Nested(ClassificationSchema, required=True)
    convention_diff = fields.Dict(
        keys=fields.Str(), values=fields.Nested(SpectrumDiffSchema), allow_none=True
    )
    friedrichs = fields.Str(allow_none=True)
    warnings = fields.List(fields.Str())

    def to_json(self, report: dict) -> str:
        return json.dumps(self.dump(report), ensure_ascii=False, indent=2, sort_keys=True)

    def from_json(self, text: str) -> dict:
        return self.load(json.loads(text))
