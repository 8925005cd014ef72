# ruff: noqa: F401
from .meromorphic import FactoredMeromorphic, GammaFactor, meromorphic_div, meromorphic_mul
from .scalars import ALPHA, LAMBDA, SCALARS, AffinePoint, Scalar, rising_factorial, to_scalar
from .series import (
    LaurentSeries,
    QuasiRationalSeries,
    determinant,
    series_differentiate,
    wronskian,
)
