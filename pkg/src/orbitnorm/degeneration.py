"""Degeneration (dominance) order on diagrams and its covering relations.

The orbit labelled sigma lies in the closure of the orbit labelled eta exactly
when every prefix sum of sigma is bounded by the matching prefix sum of eta
(sizes equal).  Minimal degenerations are the covering relations of this
order restricted to valid diagrams of one form type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate

import os

from .errors import ContractError
from .partitions import EpsDiagram, Partition, enumerate_eps_diagrams

#: Full-poset construction is quadratic in the diagram count; cap it lower.
DEFAULT_HASSE_MAX = 26

__all__ = [
    "DegenPair",
    "PosetEdge",
    "PosetGraph",
    "dominates",
    "degenerations",
    "minimal_degenerations",
    "hasse",
]


def dominates(top: Partition, bottom: Partition) -> bool:
    """Prefix-sum dominance at equal size: bottom lies below top."""
    top, bottom = Partition(top), Partition(bottom)
    if top.size != bottom.size:
        raise ContractError(
            f"dominance needs equal sizes, got {top.size} and {bottom.size}"
        )
    tops = list(accumulate(top))
    bots = list(accumulate(bottom))
    # pad with the total: prefix sums are constant past the last part
    n = max(len(tops), len(bots))
    total = top.size
    tops += [total] * (n - len(tops))
    bots += [total] * (n - len(bots))
    return all(b <= t for t, b in zip(tops, bots))


@dataclass(frozen=True)
class DegenPair:
    """An ordered degeneration: bottom <= top, same size, same form type."""

    eps: int
    bottom: Partition
    top: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "bottom", Partition(self.bottom))
        object.__setattr__(self, "top", Partition(self.top))
        # EpsDiagram construction validates the parity condition
        EpsDiagram(self.bottom, self.eps)
        EpsDiagram(self.top, self.eps)
        if not dominates(self.top, self.bottom):
            raise ContractError(f"{self.bottom} is not a degeneration of {self.top}")

    @property
    def size(self) -> int:
        return self.top.size

    @property
    def is_strict(self) -> bool:
        return self.bottom != self.top

    def to_json(self) -> dict:
        return {"eps": self.eps, "top": list(self.top), "bottom": list(self.bottom)}

    def __str__(self) -> str:
        return f"({self.bottom} <= {self.top}, eps={self.eps:+d})"


def degenerations(eta: EpsDiagram, bound: int | None = None) -> list[EpsDiagram]:
    """All strictly smaller valid diagrams below eta, in enumeration order."""
    return [
        d
        for d in enumerate_eps_diagrams(eta.size, eta.eps, bound)
        if d.partition != eta.partition and dominates(eta.partition, d.partition)
    ]


def minimal_degenerations(eta: EpsDiagram, bound: int | None = None) -> list[DegenPair]:
    """Covering relations below eta: maximal elements of degenerations(eta)."""
    below = degenerations(eta, bound)
    pairs = []
    for sigma in below:
        if any(
            nu.partition != sigma.partition and dominates(nu.partition, sigma.partition)
            for nu in below
        ):
            continue
        pairs.append(DegenPair(eta.eps, sigma.partition, eta.partition))
    return pairs


@dataclass
class PosetEdge:
    """A covering pair, optionally annotated by the classification pass."""

    top: Partition
    bottom: Partition
    family: str | None = None
    family_n: int | None = None
    codim: int | None = None

    def to_json(self) -> dict:
        return {
            "top": list(self.top),
            "bottom": list(self.bottom),
            "type": self.family,
            "codim": self.codim,
        }


@dataclass
class PosetGraph:
    """Cover graph of the degeneration order on all diagrams of one size."""

    eps: int
    n: int
    nodes: list[EpsDiagram]
    edges: list[PosetEdge] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "eps": self.eps,
            "n": self.n,
            "nodes": [list(d.partition) for d in self.nodes],
            "edges": [e.to_json() for e in self.edges],
        }


def hasse(n: int, eps: int, bound: int | None = None) -> PosetGraph:
    """Cover graph on all eps-diagrams of n; annotations left to classification."""
    if bound is None and "ORBIT_MAX_SIZE" not in os.environ:
        bound = DEFAULT_HASSE_MAX
    nodes = enumerate_eps_diagrams(n, eps, bound)
    edges = []
    for eta in nodes:
        for pair in minimal_degenerations(eta, bound):
            edges.append(PosetEdge(top=pair.top, bottom=pair.bottom))
    return PosetGraph(eps=eps, n=n, nodes=nodes, edges=edges)
