"""
Shift machinery: moving the two Maya diagrams one box at a time multiplies the prefactored
Wronskians by explicit constants. Walking M₁ then M₂ to canonical (resp. conjugate canonical)
position gives the constants C₁C₂C₃ (resp. D₁D₂D₃) in closed form.

All constants are determined up to sign.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple

from xlaguerre.exact.scalars import (
    ALPHA,
    LAMBDA,
    ONE,
    Scalar,
    falling_factorial,
    product,
    render_scalar,
    rising_factorial,
    to_scalar,
)
from xlaguerre.maya import (
    DiagramPair,
    Partition,
    canonical_shift,
    conjugate_canonical_shift,
    shift,
    to_conjugate_partition,
    to_partition,
)
from xlaguerre.oracle import FIRST_KIND, PLAIN, SECOND_KIND
from xlaguerre.utils.errors import StepPreconditionError

log = logging.getLogger("xlaguerre")

STEPS = ("a", "b", "c", "d")

# diagram moved, box shift, change of α, change of λ (for the solution columns)
STEP_EFFECTS: dict[str, tuple[str, int, int, int]] = {
    "a": ("m1", -1, 1, -1),
    "b": ("m1", 1, -1, 1),
    "c": ("m2", -1, 1, 0),
    "d": ("m2", 1, -1, 0),
}


class Step(NamedTuple):
    pair: DiagramPair
    constant: Scalar
    d_alpha: int
    d_lambda: int
    which: str = ""
    inverse: bool = False


def _applies(which: str, pair: DiagramPair) -> bool:
    """a, c need 0 among the included indices of M₁, M₂; b, d among the excluded ones"""
    diagram = pair.m1 if which in ("a", "b") else pair.m2
    indices = diagram.included if which in ("a", "c") else diagram.excluded
    return 0 in indices


def _moved(which: str, pair: DiagramPair, box_shift: int) -> DiagramPair:
    if STEP_EFFECTS[which][0] == "m1":
        return DiagramPair(shift(pair.m1, box_shift), pair.m2)
    return DiagramPair(pair.m1, shift(pair.m2, box_shift))


def step_constant(kind: str, which: str, pair: DiagramPair, alpha: Scalar, lam: Scalar) -> Scalar:
    """The constant of a forward step taken at (pair, α, λ)"""
    n, n_ = pair.m1.included, pair.m1.excluded
    m, m_ = pair.m2.included, pair.m2.excluded
    if which == "a":
        products = product(k - alpha for k in m_) * product(k + 1 for k in n_)
    elif which == "b":
        products = product(k + 1 for k in n) * product(k + alpha for k in m)
    elif which == "c":
        products = product(k + 1 for k in m_) * product(k - alpha for k in n_)
    else:
        products = product(k + alpha for k in n) * product(k + 1 for k in m)
    products = to_scalar(products)
    if kind == PLAIN:
        return products
    if kind == FIRST_KIND:
        factor = {
            "a": -lam / (alpha + 1),
            "b": alpha,
            "c": (lam + alpha + 1) / (alpha + 1),
            "d": alpha,
        }[which]
    else:
        factor = {
            "a": -alpha,
            "b": (lam + 1) / (1 - alpha),
            "c": -alpha,
            "d": (-lam - alpha) / (1 - alpha),
        }[which]
    return factor * products


def step_reduce(
    kind: str,
    pair: DiagramPair,
    which: str,
    alpha=ALPHA,
    lam=LAMBDA,
    inverse: bool = False,
) -> Step:
    """
    One unit shift of M₁ (cases a, b) or M₂ (cases c, d).
    The inverse step moves the other way; its constant is the reciprocal of the forward
    constant taken at the shifted state.
    """
    if which not in STEPS:
        raise ValueError(f"unknown step '{which}'")
    alpha, lam = to_scalar(alpha), to_scalar(lam)
    _, box_shift, d_alpha, d_lambda = STEP_EFFECTS[which]
    if kind == PLAIN:
        d_lambda = 0
    elif kind == SECOND_KIND and which in ("c", "d"):
        d_lambda = 0
    if not inverse:
        if not _applies(which, pair):
            raise StepPreconditionError(
                f"step {which} needs the boundary index 0 in {pair}",
                step=f"step_{which}",
                diagram=str(pair),
            )
        constant = step_constant(kind, which, pair, alpha, lam)
        return Step(_moved(which, pair, box_shift), constant, d_alpha, d_lambda, which)
    shifted = _moved(which, pair, -box_shift)
    if not _applies(which, shifted):
        raise StepPreconditionError(
            f"inverse step {which} does not apply to {pair}",
            step=f"step_{which}_inverse",
            diagram=str(pair),
        )
    constant = 1 / step_constant(kind, which, shifted, alpha - d_alpha, lam - d_lambda)
    return Step(shifted, constant, -d_alpha, -d_lambda, which, True)


def step_reduce_first(pair: DiagramPair, which: str, alpha=ALPHA, lam=LAMBDA, inverse=False):
    """Ω_{M₁,M₂}[h^α(x,λ)] = constant · Ω_{new pair}[h^{α+dα}(x,λ+dλ)]"""
    return step_reduce(FIRST_KIND, pair, which, alpha, lam, inverse)


def step_reduce_second(pair: DiagramPair, which: str, alpha=ALPHA, lam=LAMBDA, inverse=False):
    """Ω_{M₁,M₂}[h̃^α(x,λ)] = constant · Ω_{new pair}[h̃^{α+dα}(x,λ+dλ)]"""
    return step_reduce(SECOND_KIND, pair, which, alpha, lam, inverse)


def step_reduce_plain(pair: DiagramPair, which: str, alpha=ALPHA, inverse=False):
    """Ω^α_{M₁,M₂} = constant · Ω^{α+dα}_{new pair}"""
    return step_reduce(PLAIN, pair, which, alpha, LAMBDA, inverse)


@dataclass
class Walk:
    pair: DiagramPair
    alpha: Scalar
    lam: Scalar
    constant: Scalar = ONE
    steps: list[Step] | None = None

    def trace(self) -> list[str]:
        return [f"{s.which}{'⁻¹' if s.inverse else ''}" for s in self.steps or []]


def _move(kind: str, walk: Walk, diagram: str, direction: int) -> None:
    """Shift one diagram by one box; forward steps when possible, inverse steps otherwise"""
    pair = walk.pair
    target = pair.m1 if diagram == "m1" else pair.m2
    backward, forward = ("a", "b") if diagram == "m1" else ("c", "d")
    if direction > 0:
        which, inverse = (forward, False) if 0 in target.excluded else (backward, True)
    else:
        which, inverse = (backward, False) if 0 in target.included else (forward, True)
    step = step_reduce(kind, pair, which, walk.alpha, walk.lam, inverse)
    walk.pair = step.pair
    walk.constant *= step.constant
    walk.alpha += step.d_alpha
    walk.lam += step.d_lambda
    walk.steps = (walk.steps or []) + [step]


def walk_to(kind: str, pair: DiagramPair, t1: int, t2: int, alpha=ALPHA, lam=LAMBDA) -> Walk:
    """Shift M₁ by t1, then M₂ by t2, accumulating the step constants"""
    walk = Walk(pair, to_scalar(alpha), to_scalar(lam), ONE, [])
    for diagram, t in (("m1", t1), ("m2", t2)):
        for _ in range(abs(t)):
            _move(kind, walk, diagram, 1 if t > 0 else -1)
    log.debug(f"{kind} walk of {pair}: {' '.join(walk.trace()) or 'no step'}")
    return walk


def reduce_to_canonical(pair: DiagramPair, kind: str = FIRST_KIND, alpha=ALPHA, lam=LAMBDA):
    t1 = canonical_shift(pair.m1)
    t2 = canonical_shift(pair.m2)
    return walk_to(kind, pair, t1, t2, alpha, lam)


def reduce_to_conjugate(pair: DiagramPair, kind: str = SECOND_KIND, alpha=ALPHA, lam=LAMBDA):
    t1 = conjugate_canonical_shift(pair.m1)
    t2 = conjugate_canonical_shift(pair.m2)
    return walk_to(kind, pair, t1, t2, alpha, lam)


def _missing(limit: int, indices: tuple[int, ...]) -> list[int]:
    return [k for k in range(limit) if k not in indices]


class FirstKindConstants(NamedTuple):
    C1: Scalar
    C2: Scalar
    C3: Scalar
    t1: int
    t2: int
    mu: Partition
    nu: Partition


class SecondKindConstants(NamedTuple):
    D1: Scalar
    D2: Scalar
    D3: Scalar
    t1p: int
    t2p: int
    mup: Partition
    nup: Partition


def plain_constant_first(pair: DiagramPair, alpha=ALPHA) -> Scalar:
    """C₃ = ∏(m′−α−n) ∏(n′−α−m) ∏(n+n′+1) ∏(m+m′+1)"""
    a = to_scalar(alpha)
    n, n_ = pair.m1.included, pair.m1.excluded
    m, m_ = pair.m2.included, pair.m2.excluded
    return to_scalar(
        product(k_ - a - k for k in n for k_ in m_)
        * product(k_ - a - k for k in m for k_ in n_)
        * product(k + k_ + 1 for k in n for k_ in n_)
        * product(k + k_ + 1 for k in m for k_ in m_)
    )


def plain_constant_second(pair: DiagramPair, alpha=ALPHA) -> Scalar:
    """D₃ = ∏(n+α−m′) ∏(m+α−n′) ∏(n+n′+1) ∏(m+m′+1)"""
    a = to_scalar(alpha)
    n, n_ = pair.m1.included, pair.m1.excluded
    m, m_ = pair.m2.included, pair.m2.excluded
    return to_scalar(
        product(k + a - k_ for k in n for k_ in m_)
        * product(k + a - k_ for k in m for k_ in n_)
        * product(k + k_ + 1 for k in n for k_ in n_)
        * product(k + k_ + 1 for k in m for k_ in m_)
    )


def shift_constants_first(pair: DiagramPair, alpha=ALPHA) -> FirstKindConstants:
    a, lam = to_scalar(alpha), LAMBDA
    t1, t2 = canonical_shift(pair.m1), canonical_shift(pair.m2)
    if t1 < 0:
        C1 = rising_factorial(-lam, -t1) / rising_factorial(a + 1, -t1)
    elif t1 > 0:
        C1 = falling_factorial(a, t1) / product(
            -lam - k - 1 for k in _missing(t1, pair.m1.excluded)
        )
    else:
        C1 = ONE
    if t2 < 0:
        C2 = rising_factorial(lam + a + 1, -t2) / rising_factorial(a - t1 + 1, -t2)
    elif t2 > 0:
        C2 = falling_factorial(a - t1, t2) / product(
            lam + a - k for k in _missing(t2, pair.m2.excluded)
        )
    else:
        C2 = ONE
    mu = to_partition(shift(pair.m1, t1))
    nu = to_partition(shift(pair.m2, t2))
    return FirstKindConstants(
        to_scalar(C1), to_scalar(C2), plain_constant_first(pair, a), t1, t2, mu, nu
    )


def shift_constants_second(pair: DiagramPair, alpha=ALPHA) -> SecondKindConstants:
    a, lam = to_scalar(alpha), LAMBDA
    t1, t2 = conjugate_canonical_shift(pair.m1), conjugate_canonical_shift(pair.m2)
    if t1 < 0:
        D1 = falling_factorial(-a, -t1) / product(
            lam - k for k in _missing(-t1, pair.m1.included)
        )
    elif t1 > 0:
        D1 = rising_factorial(lam + 1, t1) / rising_factorial(1 - a, t1)
    else:
        D1 = ONE
    if t2 < 0:
        D2 = falling_factorial(-a + t1, -t2) / product(
            -lam - a - 1 - k for k in _missing(-t2, pair.m2.included)
        )
    elif t2 > 0:
        D2 = rising_factorial(-lam - a, t2) / rising_factorial(1 - a + t1, t2)
    else:
        D2 = ONE
    mup = to_conjugate_partition(shift(pair.m1, t1))
    nup = to_conjugate_partition(shift(pair.m2, t2))
    return SecondKindConstants(
        to_scalar(D1), to_scalar(D2), plain_constant_second(pair, a), t1, t2, mup, nup
    )


def shift_constants_plain(pair: DiagramPair, alpha=ALPHA) -> tuple[Scalar, Scalar]:
    return plain_constant_first(pair, alpha), plain_constant_second(pair, alpha)


@dataclass(frozen=True)
class ShiftReport:
    pair: DiagramPair
    alpha: Scalar
    first: FirstKindConstants
    second: SecondKindConstants

    @property
    def C(self) -> Scalar:
        return self.first.C1 * self.first.C2 * self.first.C3

    @property
    def D(self) -> Scalar:
        return self.second.D1 * self.second.D2 * self.second.D3

    @property
    def alpha_prime(self) -> Scalar:
        """Parameter of the canonical pair, α − t₁ − t₂"""
        return self.alpha - self.first.t1 - self.first.t2

    @property
    def alpha_second(self) -> Scalar:
        """Parameter of the conjugate canonical pair, α − t₁′ − t₂′"""
        return self.alpha - self.second.t1p - self.second.t2p

    @property
    def lambda_shift_first(self) -> int:
        return self.first.t1

    @property
    def lambda_shift_second(self) -> int:
        return self.second.t1p

    @property
    def canonical(self) -> DiagramPair:
        return DiagramPair(shift(self.pair.m1, self.first.t1), shift(self.pair.m2, self.first.t2))

    @property
    def conjugate(self) -> DiagramPair:
        return DiagramPair(
            shift(self.pair.m1, self.second.t1p), shift(self.pair.m2, self.second.t2p)
        )

    def as_dict(self) -> dict:
        return {
            "t1": self.first.t1,
            "t2": self.first.t2,
            "t1p": self.second.t1p,
            "t2p": self.second.t2p,
            "mu": self.first.mu.render(),
            "nu": self.first.nu.render(),
            "mup": self.second.mup.render(),
            "nup": self.second.nup.render(),
            "C1": render_scalar(self.first.C1),
            "C2": render_scalar(self.first.C2),
            "C3": render_scalar(self.first.C3),
            "D1": render_scalar(self.second.D1),
            "D2": render_scalar(self.second.D2),
            "D3": render_scalar(self.second.D3),
            "alpha_prime": render_scalar(self.alpha_prime),
            "alpha_second": render_scalar(self.alpha_second),
        }


def shift_report(pair: DiagramPair, alpha=ALPHA) -> ShiftReport:
    a = to_scalar(alpha)
    return ShiftReport(pair, a, shift_constants_first(pair, a), shift_constants_second(pair, a))
