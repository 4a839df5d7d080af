"""Partitions and form-type diagrams.

A partition is a weakly decreasing tuple of positive integers.  A partition
paired with a form type eps (+1 orthogonal, -1 symplectic) labels a nilpotent
orbit; it is a valid diagram for eps=+1 iff every even part size occurs with
even multiplicity, and for eps=-1 iff every odd part size occurs with even
multiplicity.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapacityError, ContractError, PartitionParseError

#: Default cap for whole-poset enumeration; override per call or via ORBIT_MAX_SIZE.
DEFAULT_MAX_SIZE = 40

ORTHOGONAL = 1
SYMPLECTIC = -1
VALID_EPS = (ORTHOGONAL, SYMPLECTIC)


def max_size() -> int:
    """Enumeration bound, honouring the ORBIT_MAX_SIZE environment override."""
    env = os.environ.get("ORBIT_MAX_SIZE")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PartitionParseError(f"ORBIT_MAX_SIZE is not an integer: {env!r}")
    return DEFAULT_MAX_SIZE


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; the empty tuple is 0."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        norm = sorted((int(p) for p in parts), reverse=True)
        for p in norm:
            if p <= 0:
                raise ContractError(f"partition parts must be positive, got {p}")
        return super().__new__(cls, norm)

    @property
    def size(self) -> int:
        return sum(self)

    def dual(self) -> "Partition":
        """Column heights of the Young diagram (conjugate partition)."""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def multiplicities(self) -> dict[int, int]:
        """Map part size -> number of occurrences."""
        return dict(Counter(self))

    def erase_first_column(self) -> "Partition":
        """Decrement every part, dropping parts that vanish."""
        return Partition(p - 1 for p in self if p > 1)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"


def parse_partition(text: str) -> Partition:
    """Parse comma- or space-separated positive integers; order irrelevant."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    parts = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError:
            raise PartitionParseError(f"not an integer part: {tok!r}")
        if value <= 0:
            raise PartitionParseError(f"parts must be positive, got {tok!r}")
        parts.append(value)
    return Partition(parts)


def dual(p: Partition) -> Partition:
    return Partition(p).dual()


def multiplicities(p: Partition) -> dict[int, int]:
    return Partition(p).multiplicities()


def erase_first_column(p: Partition) -> Partition:
    return Partition(p).erase_first_column()


def _check_eps(eps: int) -> None:
    if eps not in VALID_EPS:
        raise ContractError(f"eps must be +1 or -1, got {eps}")


def eps_violation(p: Partition, eps: int) -> str | None:
    """Name of the parity rule violated by p for this eps, or None if valid."""
    _check_eps(eps)
    # largest offender first: the message names the most salient violation
    for part, mult in sorted(Counter(p).items(), reverse=True):
        if eps == ORTHOGONAL and part % 2 == 0 and mult % 2 == 1:
            return f"even part {part} has odd multiplicity"
        if eps == SYMPLECTIC and part % 2 == 1 and mult % 2 == 1:
            return f"odd part {part} has odd multiplicity"
    return None


def is_eps_diagram(p: Iterable[int], eps: int) -> bool:
    """True iff p is the Jordan type of a nilpotent element for form type eps."""
    return eps_violation(Partition(p), eps) is None


@dataclass(frozen=True)
class EpsDiagram:
    """A partition that is a valid diagram for its form type."""

    partition: Partition
    eps: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "partition", Partition(self.partition))
        violation = eps_violation(self.partition, self.eps)
        if violation is not None:
            raise ContractError(
                f"{self.partition} is not a valid diagram for eps={self.eps:+d}: {violation}"
            )

    @property
    def size(self) -> int:
        return self.partition.size

    def __str__(self) -> str:
        return f"O({self.eps:+d},{self.partition})"


@lru_cache(maxsize=None)
def _partitions_desc(n: int, cap: int) -> tuple[Partition, ...]:
    """All partitions of n with parts <= cap, in reverse-lexicographic order."""
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_desc(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ContractError(f"n must be nonnegative, got {n}")
    return iter(_partitions_desc(n, n))


def enumerate_eps_diagrams(n: int, eps: int, bound: int | None = None) -> list[EpsDiagram]:
    """Valid eps-diagrams of n, reverse-lexicographic; capacity-bounded."""
    _check_eps(eps)
    if n < 0:
        raise ContractError(f"n must be nonnegative, got {n}")
    limit = max_size() if bound is None else bound
    if n > limit:
        raise CapacityError(f"size {n} exceeds the enumeration bound {limit}")
    return [
        EpsDiagram(p, eps) for p in partitions_of(n) if is_eps_diagram(p, eps)
    ]
