# ruff: noqa: F401
from .report import AnalysisReportSchema, ShiftReportSchema
from .spectrum import FamilySchema, MeromorphicSchema, SpectrumDiffSchema, SpectrumSchema
