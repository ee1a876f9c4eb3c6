"""Regularity of binary matroids via excluded Fano minors.

A binary matroid is regular exactly when no corank-3 flat contracts (after
simplification) to the Fano plane and no corank-4 flat contracts to its
dual.  Both recognizers use the column-set shortcut: among simple rank-3
matroids only the Fano plane has all seven nonzero columns, and the dual
case reduces to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .matroid import BinaryMatroid


@dataclass(frozen=True)
class FanoWitness:
    """A flat whose simplified contraction is the named obstruction."""

    flat: frozenset[int]
    kind: Literal["fano", "fano-dual"]


def is_fano(m: BinaryMatroid) -> bool:
    """True iff the columns are exactly the seven nonzero vectors of GF(2)^3."""
    if m.rank != 3 or m.size != 7:
        return False
    return set(m.matrix.columns()) == set(range(1, 8))


def is_fano_dual(m: BinaryMatroid) -> bool:
    """True iff m is the dual of the Fano plane (rank 4 on 7 elements)."""
    if m.rank != 4 or m.size != 7:
        return False
    simplified, _ = m.dual().simplify()
    return is_fano(simplified)


def _greedy_spanning_subset(m: BinaryMatroid, flat: frozenset[int]) -> list[int]:
    """Smallest-label independent subset spanning the flat."""
    basis: list[int] = []
    members: list[int] = []
    for e in sorted(flat):
        col = m.column_of(e)
        for b in basis:
            col = min(col, col ^ b)
        if col:
            basis.append(col)
            basis.sort(reverse=True)
            members.append(e)
    return members


def is_regular(m: BinaryMatroid) -> tuple[bool, FanoWitness | None]:
    """Decide regularity; on failure also return the offending flat.

    Flats are scanned in ascending order of their sorted element tuples, the
    corank-3 family before the corank-4 one, so the witness is deterministic.
    A contraction is only inspected when enough elements survive for a
    seven-point simplification.
    """
    checks: list[tuple[int, Literal["fano", "fano-dual"]]] = [
        (3, "fano"),
        (4, "fano-dual"),
    ]
    for corank, kind in checks:
        if m.rank < corank:
            continue
        for flat in sorted(m.flats_of_corank(corank), key=sorted):
            if m.size - len(flat) < 7:
                continue
            spanning = _greedy_spanning_subset(m, flat)
            contracted = m.contract_independent(spanning)
            simplified, _ = contracted.simplify()
            if simplified.size != 7:
                continue
            hit = is_fano(simplified) if kind == "fano" else is_fano_dual(simplified)
            if hit:
                return False, FanoWitness(flat=flat, kind=kind)
    return True, None
