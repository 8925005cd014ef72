from marshmallow import Schema, fields


class FamilySchema(Schema):
    base = fields.Str(required=True)
    excluded = fields.List(fields.Integer(), required=True)


class SpectrumSchema(Schema):
    families = fields.List(fields.Nested(FamilySchema), required=True)
    points = fields.List(fields.Str(), required=True)
    rendered = fields.Str(required=True)


class SpectrumDiffSchema(Schema):
    paper_only = fields.List(fields.Str(), required=True)
    strict_only = fields.List(fields.Str(), required=True)


class MeromorphicSchema(Schema):
    """A factored meromorphic function of λ, every factor rendered"""

    constant = fields.Str(required=True)
    gamma_num = fields.List(fields.Str(), required=True)
    gamma_den = fields.List(fields.Str(), required=True)
    roots_num = fields.List(fields.Str(), required=True)
    roots_den = fields.List(fields.Str(), required=True)
    sign_suppressed = fields.Boolean(required=True)
    rendered = fields.Str(required=True)
