"""
Maya diagrams and partitions.

A Maya diagram is written (n′₁,…,n′_{r₄} | n₁,…,n_{r₁}): the n are the filled boxes at
non-negative positions, the n′ encode the empty boxes at negative positions k = −n′−1.
"""

import logging
import re
from dataclasses import dataclass
from itertools import chain, combinations, product
from typing import Iterator

from xlaguerre.utils.errors import DiagramParseError, DiagramValidationError

log = logging.getLogger("xlaguerre")

DIAGRAM_RE = re.compile(r"^\(\s*([0-9,\s]*)\|([0-9,\s]*)\)$")
EMPTY = "∅"


def _strictly_decreasing(values: tuple[int, ...]) -> bool:
    return all(a > b for a, b in zip(values, values[1:]))


def _render_list(values: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in values) if values else EMPTY


@dataclass(frozen=True)
class MayaDiagram:
    excluded: tuple[int, ...] = ()
    included: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(self.excluded))
        object.__setattr__(self, "included", tuple(self.included))
        for name in ("excluded", "included"):
            values = getattr(self, name)
            if any(v < 0 for v in values):
                raise DiagramValidationError(
                    f"negative entry in {name} list {values}", step="maya", diagram=str(values)
                )
            if not _strictly_decreasing(values):
                raise DiagramValidationError(
                    f"{name} list {values} is not strictly decreasing",
                    step="maya",
                    diagram=str(values),
                )

    def filled(self, k: int) -> bool:
        if k >= 0:
            return k in self.included
        return (-k - 1) not in self.excluded

    @property
    def max_index(self) -> int:
        return max(chain(self.excluded, self.included), default=0)

    @property
    def is_trivial(self) -> bool:
        return not self.excluded and not self.included

    def is_canonical(self) -> bool:
        """No empty box left of the origin, box 0 empty"""
        return not self.excluded and 0 not in self.included

    def is_conjugate_canonical(self) -> bool:
        """No filled box right of the origin, box −1 filled"""
        return not self.included and 0 not in self.excluded

    def render(self) -> str:
        return f"({_render_list(self.excluded)}|{_render_list(self.included)})"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 0 for p in parts):
            raise DiagramValidationError(f"negative part in {parts}", step="partition")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DiagramValidationError(f"{parts} is not weakly decreasing", step="partition")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def indices(self) -> tuple[int, ...]:
        """n_i = μ_i + r − i, strictly decreasing"""
        r = self.length
        return tuple(p + r - i for i, p in enumerate(self.parts, start=1))

    def conjugate(self) -> "Partition":
        """Young-diagram transpose"""
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def render(self) -> str:
        return f"({','.join(str(p) for p in self.parts)})" if self.parts else EMPTY

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class DiagramPair:
    m1: MayaDiagram
    m2: MayaDiagram

    @property
    def r1(self) -> int:
        return len(self.m1.included)

    @property
    def r2(self) -> int:
        return len(self.m2.included)

    @property
    def r3(self) -> int:
        return len(self.m2.excluded)

    @property
    def r4(self) -> int:
        return len(self.m1.excluded)

    @property
    def r(self) -> int:
        return self.r1 + self.r2 + self.r3 + self.r4

    @property
    def is_trivial(self) -> bool:
        return self.m1.is_trivial and self.m2.is_trivial

    def render(self) -> str:
        return f"M1={self.m1.render()} M2={self.m2.render()}"

    def __str__(self) -> str:
        return self.render()


def parse_diagram(text: str) -> MayaDiagram:
    match = DIAGRAM_RE.match(text.strip().replace(EMPTY, ""))
    if not match:
        raise DiagramParseError(f"cannot parse Maya diagram '{text}'", step="parse", diagram=text)

    def parse_side(side: str) -> tuple[int, ...]:
        items = [item.strip() for item in side.split(",")]
        if items == [""]:
            return ()
        if "" in items:
            raise DiagramParseError(f"empty entry in '{text}'", step="parse", diagram=text)
        return tuple(int(item) for item in items)

    return MayaDiagram(excluded=parse_side(match.group(1)), included=parse_side(match.group(2)))


def shift(diagram: MayaDiagram, t: int) -> MayaDiagram:
    """Translate the box pattern by t: the new box k holds the old box k − t"""
    if not t:
        return diagram
    bound = diagram.max_index + abs(t) + 2
    included = [k for k in range(bound - 1, -1, -1) if diagram.filled(k - t)]
    excluded = [-k - 1 for k in range(-bound, 0) if not diagram.filled(k - t)]
    return MayaDiagram(excluded=tuple(excluded), included=tuple(included))


def _first_missing(values: tuple[int, ...]) -> int:
    k = 0
    while k in values:
        k += 1
    return k


def canonical_shift(diagram: MayaDiagram) -> int:
    if diagram.excluded:
        return diagram.excluded[0] + 1
    return -_first_missing(diagram.included)


def conjugate_canonical_shift(diagram: MayaDiagram) -> int:
    if diagram.included:
        return -diagram.included[0] - 1
    # rightmost filled box left of the origin moves to −1
    return _first_missing(diagram.excluded)


def to_partition(diagram: MayaDiagram) -> Partition:
    """μ_j = n_j − r + j on a diagram without empty boxes left of the origin"""
    if diagram.excluded:
        raise DiagramValidationError(
            f"{diagram} is not in canonical form", step="to_partition", diagram=str(diagram)
        )
    r = len(diagram.included)
    return Partition(tuple(n - r + j for j, n in enumerate(diagram.included, start=1)))


def to_conjugate_partition(diagram: MayaDiagram) -> Partition:
    """μ′_j = n′_j − r′ + j on a diagram without filled boxes right of the origin"""
    if diagram.included:
        raise DiagramValidationError(
            f"{diagram} is not in conjugate canonical form",
            step="to_conjugate_partition",
            diagram=str(diagram),
        )
    r = len(diagram.excluded)
    return Partition(tuple(n - r + j for j, n in enumerate(diagram.excluded, start=1)))


def partition_length(diagram: MayaDiagram, t: int) -> int:
    """
    Length of the partition read off shift(diagram, t), where t is the canonical or the
    conjugate canonical shift of the diagram.
    """
    r1, r4 = len(diagram.included), len(diagram.excluded)
    if t == canonical_shift(diagram):
        if t > 0:
            return r1 + diagram.excluded[0] + 1 - r4
        if t == 0:
            return r1
        return r1 - _first_missing(diagram.included)
    if t == conjugate_canonical_shift(diagram):
        return conjugate_partition_length(diagram, t)
    raise DiagramValidationError(
        f"{t} is neither the canonical nor the conjugate canonical shift of {diagram}",
        step="partition_length",
        diagram=str(diagram),
    )


def conjugate_partition_length(diagram: MayaDiagram, t: int) -> int:
    r1, r4 = len(diagram.included), len(diagram.excluded)
    if t < 0:
        return r4 + diagram.included[0] + 1 - r1
    if t == 0:
        return r4
    return r4 - _first_missing(diagram.excluded)


def is_even(partition: Partition) -> bool:
    parts = partition.parts
    if len(parts) % 2:
        return False
    return all(parts[i] == parts[i + 1] for i in range(0, len(parts), 2))


def canonical_pair(mu: Partition, nu: Partition) -> DiagramPair:
    """(∅|n) and (∅|m) with n_i = μ_i + r(μ) − i, m_j = ν_j + r(ν) − j"""
    return DiagramPair(MayaDiagram(included=mu.indices()), MayaDiagram(included=nu.indices()))


def conjugate_pair(mu: Partition, nu: Partition) -> DiagramPair:
    """(n′|∅) and (m′|∅), the conjugate canonical diagrams of μ′ and ν′"""
    return DiagramPair(MayaDiagram(excluded=mu.indices()), MayaDiagram(excluded=nu.indices()))


def _subsets(bound: int) -> Iterator[tuple[int, ...]]:
    values = range(bound - 1, -1, -1)
    for size in range(bound + 1):
        yield from combinations(values, size)


def enumerate_diagrams(bound: int) -> Iterator[MayaDiagram]:
    """Every diagram whose indices are all below ``bound``"""
    for excluded, included in product(_subsets(bound), _subsets(bound)):
        yield MayaDiagram(excluded=excluded, included=included)


def enumerate_pairs(bound: int) -> Iterator[DiagramPair]:
    diagrams = list(enumerate_diagrams(bound))
    for m1, m2 in product(diagrams, diagrams):
        yield DiagramPair(m1, m2)


def type_one_pair(m: int) -> DiagramPair:
    """M₁ = (∅|∅), M₂ = (∅|m): the single seed e^x L_m(−x)"""
    if m < 1:
        raise DiagramValidationError(f"Type I degree must be positive, got {m}", step="type_one")
    return DiagramPair(MayaDiagram(), MayaDiagram(included=(m,)))
