"""
Truncated Laurent series and quasi-rational series in x.

A ``LaurentSeries`` knows its coefficients below ``prec``; coefficients at or above ``prec``
are unknown (not zero) and reading them raises ``TruncationExhausted``. ``prec=None`` marks an
exact (finite) Laurent polynomial.

A ``QuasiRationalSeries`` is a finite sum of terms x^{j·base} e^{k·x} S(x), keyed by the tag
(j, k), where ``base`` is the Laguerre parameter of the whole Wronskian and S a Laurent series.
The integer part of the x-exponent lives in S.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import HeuristicGCDFailed
from sympy.polys.rings import ring

from xlaguerre.exact.scalars import (
    ONE,
    SCALARS,
    ZERO,
    Scalar,
    scalar_add,
    scalar_mul,
    to_scalar,
)
from xlaguerre.utils.errors import NonPolynomialResult, TruncationExhausted

log = logging.getLogger("xlaguerre")

SERIES_RING, X = ring("x", SCALARS)

Tag = tuple[int, int]

# above this size, single-tag determinants go through fraction-free elimination
BAREISS_THRESHOLD = 4


def _min_prec(*precs: int | None) -> int | None:
    known = [p for p in precs if p is not None]
    return min(known) if known else None


@dataclass(frozen=True)
class LaurentSeries:
    coeffs: Mapping[int, Scalar] = field(default_factory=dict)
    prec: int | None = None

    def __post_init__(self):
        # drop zeros and everything we do not know
        coeffs = {
            k: c
            for k, c in self.coeffs.items()
            if c and (self.prec is None or k < self.prec)
        }
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_poly(cls, poly, prec: int | None = None) -> "LaurentSeries":
        """From a SERIES_RING polynomial"""
        return cls({monom[0]: coeff for monom, coeff in poly.terms()}, prec)

    @classmethod
    def constant(cls, value) -> "LaurentSeries":
        return cls({0: to_scalar(value)})

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        """Exactly zero, not merely zero up to the precision"""
        return self.prec is None and not self.coeffs

    def valuation(self) -> int | None:
        """Lowest exponent with a known nonzero coefficient, or the precision if truncated zero"""
        if self.coeffs:
            return min(self.coeffs)
        return self.prec

    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def __getitem__(self, k: int) -> Scalar:
        if self.prec is not None and k >= self.prec:
            raise TruncationExhausted(
                f"coefficient x^{k} requested from a series known below x^{self.prec}",
                step="series_read",
            )
        return self.coeffs.get(k, ZERO)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({k: -c for k, c in self.coeffs.items()}, self.prec)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = scalar_add(coeffs[k], c) if k in coeffs else c
        return LaurentSeries(coeffs, _min_prec(self.prec, other.prec))

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            value = to_scalar(other)
            return LaurentSeries(
                {k: scalar_mul(c, value) for k, c in self.coeffs.items()}, self.prec
            )
        if self.is_zero() or other.is_zero():
            return LaurentSeries()
        v1, v2 = self.valuation(), other.valuation()
        precs = []
        if other.prec is not None:
            precs.append(v1 + other.prec)
        if self.prec is not None:
            precs.append(v2 + self.prec)
        prec = min(precs) if precs else None
        coeffs: dict[int, Scalar] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if prec is not None and i + j >= prec:
                    continue
                term = scalar_mul(a, b)
                coeffs[i + j] = scalar_add(coeffs[i + j], term) if i + j in coeffs else term
        return LaurentSeries(coeffs, prec)

    __rmul__ = __mul__

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by x^n"""
        if not n:
            return self
        return LaurentSeries(
            {k + n: c for k, c in self.coeffs.items()},
            None if self.prec is None else self.prec + n,
        )

    def derivative(self) -> "LaurentSeries":
        return LaurentSeries(
            {k - 1: scalar_mul(k, c) for k, c in self.coeffs.items() if k},
            None if self.prec is None else self.prec - 1,
        )

    def truncate(self, prec: int) -> "LaurentSeries":
        return LaurentSeries(self.coeffs, _min_prec(self.prec, prec))

    def to_poly(self):
        """The known coefficients as a SERIES_RING polynomial (no negative powers allowed)"""
        if self.coeffs and min(self.coeffs) < 0:
            raise NonPolynomialResult(
                f"negative power x^{min(self.coeffs)} in a series read as a polynomial",
                step="to_poly",
            )
        return SERIES_RING.from_dict({(k,): c for k, c in self.coeffs.items()})

    def subs_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "LaurentSeries":
        return LaurentSeries({k: fn(c) for k, c in self.coeffs.items()}, self.prec)


@dataclass(frozen=True)
class QuasiRationalSeries:
    base: Scalar
    terms: Mapping[Tag, LaurentSeries] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {tag: s for tag, s in self.terms.items() if not s.is_zero()}
        )

    @classmethod
    def monomial(
        cls, base: Scalar, series: LaurentSeries, tag: Tag = (0, 0)
    ) -> "QuasiRationalSeries":
        return cls(base, {tag: series})

    @property
    def tags(self) -> list[Tag]:
        return sorted(self.terms)

    @property
    def prec(self) -> int | None:
        return _min_prec(*(s.prec for s in self.terms.values()))

    def is_zero(self) -> bool:
        return not self.terms

    def single_term(self) -> tuple[Tag, LaurentSeries]:
        if not self.terms:
            return (0, 0), LaurentSeries()
        if len(self.terms) > 1:
            raise NonPolynomialResult(
                f"series carries several prefactor tags {self.tags}", step="single_term"
            )
        return next(iter(self.terms.items()))

    def _check_base(self, other: "QuasiRationalSeries") -> None:
        if self.base != other.base:
            raise ValueError("quasi-rational series built on different parameters")

    def __neg__(self) -> "QuasiRationalSeries":
        return QuasiRationalSeries(self.base, {tag: -s for tag, s in self.terms.items()})

    def __add__(self, other: "QuasiRationalSeries") -> "QuasiRationalSeries":
        self._check_base(other)
        terms = dict(self.terms)
        for tag, s in other.terms.items():
            terms[tag] = terms[tag] + s if tag in terms else s
        return QuasiRationalSeries(self.base, terms)

    def __sub__(self, other: "QuasiRationalSeries") -> "QuasiRationalSeries":
        return self + (-other)

    def __mul__(self, other) -> "QuasiRationalSeries":
        if not isinstance(other, QuasiRationalSeries):
            return QuasiRationalSeries(
                self.base, {tag: s * other for tag, s in self.terms.items()}
            )
        self._check_base(other)
        terms: dict[Tag, LaurentSeries] = {}
        for (j1, k1), s1 in self.terms.items():
            for (j2, k2), s2 in other.terms.items():
                tag = (j1 + j2, k1 + k2)
                terms[tag] = terms[tag] + s1 * s2 if tag in terms else s1 * s2
        return QuasiRationalSeries(self.base, terms)

    __rmul__ = __mul__

    def with_prefactor(self, j: int = 0, k: int = 0, power: int = 0) -> "QuasiRationalSeries":
        """Multiply by x^{j·base + power} e^{k·x}"""
        return QuasiRationalSeries(
            self.base,
            {(tj + j, tk + k): s.shift(power) for (tj, tk), s in self.terms.items()},
        )

    def derivative(self) -> "QuasiRationalSeries":
        return series_differentiate(self)

    def subs_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "QuasiRationalSeries":
        return QuasiRationalSeries(
            fn(self.base), {tag: s.subs_coefficients(fn) for tag, s in self.terms.items()}
        )


def series_differentiate(f: QuasiRationalSeries) -> QuasiRationalSeries:
    """d/dx of x^{j·base} e^{kx} S = x^{j·base} e^{kx} (j·base·S/x + k·S + S')"""
    terms = {}
    for (j, k), s in f.terms.items():
        d = s.derivative()
        if k:
            d = d + s * k
        if j:
            d = d + s.shift(-1) * scalar_mul(j, f.base)
        terms[(j, k)] = d
    return QuasiRationalSeries(f.base, terms)


def _laplace(rows: Sequence[Sequence], zero, memo: dict | None = None, start: int = 0, cols=None):
    """Cofactor expansion along the rows, memoized on the remaining column set"""
    if memo is None:
        memo = {}
    if cols is None:
        cols = tuple(range(len(rows)))
    if not cols:
        return None
    key = (start, cols)
    if key in memo:
        return memo[key]
    if len(cols) == 1:
        result = rows[start][cols[0]]
    else:
        result = zero
        for position, c in enumerate(cols):
            entry = rows[start][c]
            if _is_zero(entry):
                continue
            minor = _laplace(rows, zero, memo, start + 1, cols[:position] + cols[position + 1 :])
            term = entry * minor
            result = result - term if position % 2 else result + term
    memo[key] = result
    return result


def _is_zero(entry) -> bool:
    return entry.is_zero() if hasattr(entry, "is_zero") else not entry


def _single_tag_columns(matrix: Sequence[Sequence[QuasiRationalSeries]]) -> list[Tag] | None:
    tags = []
    for c in range(len(matrix)):
        column_tags = {tag for row in matrix for tag in row[c].terms}
        if len(column_tags) > 1:
            return None
        tags.append(next(iter(column_tags)) if column_tags else (0, 0))
    return tags


def _laurent_determinant(columns: list[list[LaurentSeries]]) -> LaurentSeries:
    """Determinant of a matrix of Laurent series given column by column"""
    n = len(columns)
    if n <= BAREISS_THRESHOLD:
        rows = [[columns[c][i] for c in range(n)] for i in range(n)]
        return _laplace(rows, LaurentSeries())
    # clear negative powers column-wise, then eliminate fraction-free over QQ(alpha,lam)[x]
    shifts, precs = [], []
    for column in columns:
        valuations = [s.valuation() for s in column if s.valuation() is not None]
        shift = -min(valuations) if valuations else 0
        shifts.append(shift)
        precs.append(_min_prec(*(s.prec for s in column)))
        precs[-1] = None if precs[-1] is None else precs[-1] + shift
    polys = [
        [column[i].shift(shifts[c]).to_poly() for c, column in enumerate(columns)]
        for i in range(n)
    ]
    domain = SERIES_RING.to_domain()
    try:
        det = DomainMatrix(polys, (n, n), domain).det()
    except HeuristicGCDFailed:
        log.debug(f"elimination of size {n} hit a gcd failure, using cofactor expansion")
        rows = [[columns[c][i] for c in range(n)] for i in range(n)]
        return _laplace(rows, LaurentSeries())
    total_shift = sum(shifts)
    prec = _min_prec(*precs)
    return LaurentSeries.from_poly(det, prec).shift(-total_shift)


def determinant(matrix: Sequence[Sequence[QuasiRationalSeries]]) -> QuasiRationalSeries:
    """
    Exact determinant of a square matrix of quasi-rational series.

    When every column carries a single prefactor tag, the tags are factored out and the
    determinant is taken over the Laurent series; otherwise full cofactor expansion is used.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        raise ValueError("determinant of an empty matrix needs a parameter base")
    base = matrix[0][0].base
    tags = _single_tag_columns(matrix)
    if tags is None:
        log.debug(f"mixed-tag determinant of size {n}, using cofactor expansion")
        return _laplace(matrix, QuasiRationalSeries(base))
    columns = [
        [matrix[i][c].terms.get(tags[c], LaurentSeries()) for i in range(n)] for c in range(n)
    ]
    det = _laurent_determinant(columns)
    tag = (sum(t[0] for t in tags), sum(t[1] for t in tags))
    return QuasiRationalSeries.monomial(base, det, tag)


def wronskian_matrix(functions: Sequence[QuasiRationalSeries]) -> list[list[QuasiRationalSeries]]:
    """Row i holds the i-th derivatives"""
    rows = [list(functions)]
    for _ in range(1, len(functions)):
        rows.append([f.derivative() for f in rows[-1]])
    return rows


def wronskian(
    functions: Sequence[QuasiRationalSeries], base: Scalar | None = None
) -> QuasiRationalSeries:
    """Wr[f_1, ..., f_r]; the empty Wronskian is 1"""
    if not functions:
        return QuasiRationalSeries.monomial(
            base if base is not None else ONE, LaurentSeries.constant(1)
        )
    return determinant(wronskian_matrix(functions))
