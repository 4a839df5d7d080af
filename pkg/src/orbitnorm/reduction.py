"""Cancellation of common leading rows and columns of a degeneration pair.

Erasing a shared leading row removes it from both diagrams; erasing a shared
leading column decrements every part and flips the form type.  Iterating both
to a fixpoint yields the irreducible core, against which the classification
table is matched.  The sign rule used here is eps' = (-1)^s * eps; see the
package README for why the sign carries the original eps along.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degeneration import DegenPair
from .errors import ContractError
from .partitions import Partition

__all__ = [
    "ReductionResult",
    "common_leading_rows",
    "common_leading_columns",
    "erase",
    "is_irreducible",
    "irreducible_core",
    "reconstruct",
]

# Erasure ledger events: ("row", length) or ("col", height), in erasure order.
Step = tuple[str, int]


def common_leading_rows(pair: DegenPair) -> int:
    """Largest r with the first r parts of bottom and top equal."""
    r = 0
    for b, t in zip(pair.bottom, pair.top):
        if b != t:
            break
        r += 1
    return r


def common_leading_columns(pair: DegenPair) -> int:
    """Largest s with the first s column heights of bottom and top equal."""
    s = 0
    for b, t in zip(pair.bottom.dual(), pair.top.dual()):
        if b != t:
            break
        s += 1
    return s


def _drop_rows(p: Partition, r: int) -> Partition:
    return Partition(p[r:])


def _drop_columns(p: Partition, s: int) -> Partition:
    return Partition(x - s for x in p if x > s)


def erase(pair: DegenPair, r: int, s: int) -> DegenPair:
    """Erase the first r common rows, then the first s common columns.

    The form type flips once per erased column.
    """
    if not 0 <= r <= common_leading_rows(pair):
        raise ContractError(f"cannot erase {r} common rows from {pair}")
    rows_gone = DegenPair(pair.eps, _drop_rows(pair.bottom, r), _drop_rows(pair.top, r))
    if not 0 <= s <= common_leading_columns(rows_gone):
        raise ContractError(f"cannot erase {s} common columns from {rows_gone}")
    eps = pair.eps if s % 2 == 0 else -pair.eps
    return DegenPair(
        eps, _drop_columns(rows_gone.bottom, s), _drop_columns(rows_gone.top, s)
    )


def is_irreducible(pair: DegenPair) -> bool:
    """No shared leading row and no shared leading column remain."""
    if not pair.is_strict:
        raise ContractError("irreducibility is undefined for an equal pair")
    return common_leading_rows(pair) == 0 and common_leading_columns(pair) == 0


@dataclass(frozen=True)
class ReductionResult:
    """Irreducible core of a pair together with the full erasure ledger."""

    core: DegenPair
    erased_rows: tuple[int, ...]
    erased_columns: int
    row_count: int
    steps: tuple[Step, ...]

    def to_json(self) -> dict:
        return {
            "core": self.core.to_json(),
            "r": self.row_count,
            "s": self.erased_columns,
            "erased_rows": list(self.erased_rows),
        }


def irreducible_core(pair: DegenPair, columns_first: bool = False) -> ReductionResult:
    """Cancel rows and columns to a fixpoint; records every erasure in order."""
    if not pair.is_strict:
        raise ContractError("cannot reduce an equal pair")
    current = pair
    steps: list[Step] = []
    erased_rows: list[int] = []
    erased_cols = 0

    def take_rows() -> bool:
        nonlocal current
        r = common_leading_rows(current)
        if r == 0:
            return False
        for length in current.top[:r]:
            steps.append(("row", length))
            erased_rows.append(length)
        current = erase(current, r, 0)
        return True

    def take_columns() -> bool:
        nonlocal current, erased_cols
        changed = False
        while common_leading_columns(current) > 0:
            height = current.top.dual()[0]
            steps.append(("col", height))
            erased_cols += 1
            current = erase(current, 0, 1)
            changed = True
        return changed

    order = (take_columns, take_rows) if columns_first else (take_rows, take_columns)
    while True:
        changed = False
        for step in order:
            changed |= step()
        if not changed:
            break

    if not current.bottom and not current.top:
        raise AssertionError("reduction of a strict pair vanished entirely")
    assert is_irreducible(current)
    return ReductionResult(
        core=current,
        erased_rows=tuple(erased_rows),
        erased_columns=erased_cols,
        row_count=len(erased_rows),
        steps=tuple(steps),
    )


def _add_column(p: Partition, height: int) -> Partition:
    parts = list(p) + [0] * max(0, height - len(p))
    if height < len(p):
        raise ContractError(f"column of height {height} too short for {p}")
    return Partition(x + 1 if i < height else x for i, x in enumerate(parts))


def _add_row(p: Partition, length: int) -> Partition:
    if p and length < p[0]:
        raise ContractError(f"row of length {length} too short for {p}")
    return Partition((length,) + tuple(p))


def reconstruct(result: ReductionResult) -> DegenPair:
    """Replay the erasure ledger backwards; must reproduce the input pair."""
    bottom, top = result.core.bottom, result.core.top
    eps = result.core.eps
    for kind, value in reversed(result.steps):
        if kind == "col":
            bottom = _add_column(bottom, value)
            top = _add_column(top, value)
            eps = -eps
        else:
            bottom = _add_row(bottom, value)
            top = _add_row(top, value)
    return DegenPair(eps, bottom, top)
