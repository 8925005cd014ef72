"""
Closed-form values at x = 0 of prefactored Wronskians in canonical position.

With A = a + 1 and ρ = (number of Wronskian rows) − 1, every seed L^a_s(0) = A^{(s)}/s! is split
at the threshold ρ: seeds with s ≥ ρ keep a numerator (A+ρ)^{(s−ρ)}, seeds below it contribute a
denominator (A+s)^{(ρ−s)}. What the derivative rows leave behind is the staircase
∏_{k}(A+k)^{(ρ−k)} times the Vandermonde of the nodes −n_i, A + m_j and the λ node.
"""

import logging
from dataclasses import dataclass
from math import factorial

from xlaguerre.exact.meromorphic import affine_lambda_roots
from xlaguerre.exact.scalars import (
    LAMBDA,
    AffinePoint,
    Scalar,
    product,
    rising_factorial,
    to_scalar,
)
from xlaguerre.maya import Partition
from xlaguerre.utils.errors import NegativeFactorialLength

log = logging.getLogger("xlaguerre")


def vandermonde(nodes: list) -> Scalar:
    """Δ(a₁, …, a_r) = ∏_{i<j} (a_j − a_i)"""
    nodes = [to_scalar(node) for node in nodes]
    return product(
        nodes[j] - nodes[i] for i in range(len(nodes)) for j in range(i + 1, len(nodes))
    )


def threshold_index(indices: tuple[int, ...], rho: int) -> int:
    """
    Smallest 1-based s with indices[i] < ρ for i ≥ s (and ≥ ρ before); len + 1 when none.
    """
    for s, index in enumerate(indices, start=1):
        if index < rho:
            return s
    return len(indices) + 1


@dataclass(frozen=True)
class ZeroEvalInput:
    n_indices: tuple[int, ...]
    m_indices: tuple[int, ...]
    param: Scalar
    rows: int
    lambda_node: Scalar | None = None

    @property
    def rho(self) -> int:
        return self.rows - 1

    @property
    def s(self) -> int:
        return threshold_index(self.n_indices, self.rho)

    @property
    def s_prime(self) -> int:
        return threshold_index(self.m_indices, self.rho)

    def nodes(self) -> list[Scalar]:
        A = self.param + 1
        nodes = [to_scalar(-n) for n in reversed(self.n_indices)]
        nodes += [A + m for m in self.m_indices]
        if self.lambda_node is not None:
            nodes.append(self.lambda_node)
        return nodes


def _rising(base: Scalar, length: int, where: str) -> Scalar:
    if length < 0:
        raise NegativeFactorialLength(
            f"rising factorial of length {length} at {where}", step="evalzero"
        )
    return rising_factorial(base, length)


def closed_form(data: ZeroEvalInput) -> Scalar:
    A = data.param + 1
    rho = data.rho
    seeds = data.n_indices + data.m_indices
    first = data.rows - len(seeds)
    value = product(_rising(A + k, rho - k, f"staircase k={k}") for k in range(first, rho + 1))
    for index in seeds:
        if index >= rho:
            value *= _rising(A + rho, index - rho, f"seed {index}")
        else:
            value /= _rising(A + index, rho - index, f"seed {index}")
        value /= factorial(index)
    return value * vandermonde(data.nodes())


def first_kind_input(mu: Partition, nu: Partition, alpha_expr, lambda_expr=LAMBDA):
    seeds = mu.length + nu.length
    return ZeroEvalInput(
        mu.indices(), nu.indices(), to_scalar(alpha_expr), seeds + 1, -to_scalar(lambda_expr)
    )


def second_kind_input(mup: Partition, nup: Partition, alpha_expr, lambda_expr=LAMBDA):
    """The conjugate canonical Wronskian reads like a first-kind one on the parameter −a"""
    a = to_scalar(alpha_expr)
    seeds = mup.length + nup.length
    return ZeroEvalInput(
        nup.indices(), mup.indices(), -a, seeds + 1, -to_scalar(lambda_expr) - a
    )


def eval_first_kind(mu: Partition, nu: Partition, alpha_expr, lambda_expr=LAMBDA) -> Scalar:
    """Ω_{μ,ν}[h^a(x, λ)] at x = 0, up to sign"""
    return closed_form(first_kind_input(mu, nu, alpha_expr, lambda_expr))


def eval_second_kind(mup: Partition, nup: Partition, alpha_expr, lambda_expr=LAMBDA) -> Scalar:
    """Ω_{μ′,ν′}[h̃^a(x, λ)] at x = 0, up to sign"""
    return closed_form(second_kind_input(mup, nup, alpha_expr, lambda_expr))


def eval_plain(mu: Partition, nu: Partition, alpha_expr) -> Scalar:
    """Ω^a_{μ,ν}(0), up to sign"""
    return closed_form(
        ZeroEvalInput(mu.indices(), nu.indices(), to_scalar(alpha_expr), mu.length + nu.length)
    )


def eval_plain_conjugate(mup: Partition, nup: Partition, alpha_expr) -> Scalar:
    """Ω^a_{μ′,ν′}(0) of the conjugate canonical pair, up to sign"""
    return closed_form(
        ZeroEvalInput(
            nup.indices(), mup.indices(), -to_scalar(alpha_expr), mup.length + nup.length
        )
    )


def first_kind_lambda_roots(
    mu: Partition, nu: Partition, alpha_expr, lambda_expr=LAMBDA
) -> list[AffinePoint]:
    """
    λ-roots of the first-kind evaluation, read off the differences between the λ node and the
    other nodes
    """
    data = first_kind_input(mu, nu, alpha_expr, lambda_expr)
    nodes = data.nodes()
    lambda_node = nodes.pop()
    roots = []
    for node in nodes:
        roots.extend(affine_lambda_roots(lambda_node - node))
    return sorted(roots)
