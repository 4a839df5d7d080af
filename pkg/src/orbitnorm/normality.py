"""Normality decision for nilpotent orbit closures.

A closure is normal when no minimal degeneration reduces to a core of family
d or e; a family-e core certifies non-normality; a family-d core (and no e)
leaves the question open, so Undetermined is a first-class verdict here.
Families a, b, c never obstruct (their closures are full nilpotent cones),
and f, g, h exceed codimension 2, so only d and e enter the decision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classification import DegenType, classify_minimal_degeneration
from .degeneration import minimal_degenerations
from .partitions import EpsDiagram, Partition, enumerate_eps_diagrams
from .reduction import ReductionResult

__all__ = ["NORMAL", "NOT_NORMAL", "UNDETERMINED", "Witness", "NormalityVerdict", "decide", "survey"]

NORMAL = "Normal"
NOT_NORMAL = "NotNormal"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Witness:
    """One classified minimal degeneration below the analyzed orbit."""

    sigma: Partition
    reduction: ReductionResult
    degen_type: DegenType

    @property
    def codim(self) -> int:
        return self.degen_type.codim

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "core": self.reduction.core.to_json(),
            "family": self.degen_type.family,
            "n": self.degen_type.n,
            "codim": self.degen_type.codim,
        }


@dataclass(frozen=True)
class NormalityVerdict:
    eta: EpsDiagram
    verdict: str
    witnesses: tuple[Witness, ...]

    def to_json(self) -> dict:
        return {
            "eps": self.eta.eps,
            "partition": list(self.eta.partition),
            "verdict": self.verdict,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def decide(eta: EpsDiagram, bound: int | None = None) -> NormalityVerdict:
    """Classify every minimal degeneration of eta and apply the verdict rules."""
    witnesses = []
    for pair in minimal_degenerations(eta, bound):
        reduction, degen_type = classify_minimal_degeneration(pair)
        witnesses.append(Witness(pair.bottom, reduction, degen_type))
    families = {w.degen_type.family for w in witnesses}
    if "e" in families:
        verdict = NOT_NORMAL
    elif "d" in families:
        verdict = UNDETERMINED
    else:
        verdict = NORMAL
    return NormalityVerdict(eta=eta, verdict=verdict, witnesses=tuple(witnesses))


def survey(n: int, eps: int, bound: int | None = None) -> list[NormalityVerdict]:
    """decide() over every eps-diagram of n, in enumeration order."""
    return [decide(eta, bound) for eta in enumerate_eps_diagrams(n, eps, bound)]
