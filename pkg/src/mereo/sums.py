"""Mereological sum and supremum queries, and the algebraic operations.

x is a sum of S iff every member of S is an ingrediens of x and every
ingrediens of x overlaps some member of S.  x is a supremum of S iff x
is an upper bound of S (under ingrediens) below every upper bound.
Raw structures may give a set several sums, so the query operations
return every candidate instead of assuming uniqueness; product,
difference, complement and binary sum distinguish "absent" (no
candidate, returned as None) from "ambiguous" (several candidates,
raised as UniquenessFault).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    ElementId, ElementLike, MereologyError, ParthoodStructure, SubsetLike,
    _bits,
)


class UniquenessFault(MereologyError):
    """An operation needing a unique sum found several candidates."""

    def __init__(self, operation: str, candidates: tuple[ElementId, ...]):
        self.operation = operation
        self.candidates = candidates
        labels = ", ".join(e.label for e in candidates)
        super().__init__(f"{operation}: several candidates ({labels})")


@dataclass(frozen=True)
class SumQueryResult:
    candidates: tuple[ElementId, ...]
    unique: bool


@dataclass(frozen=True)
class SupQueryResult:
    candidates: tuple[ElementId, ...]
    unique: bool


# -- mask-level kernels (used heavily by the axiom checkers) ---------------

def cover_mask(s: ParthoodStructure, subset_mask: int) -> int:
    """Union of the ingrediens sets of the subset's members."""
    cover = 0
    for i in _bits(subset_mask):
        cover |= s.ing_of[i]
    return cover


def is_sum_mask(s: ParthoodStructure, x: int, subset_mask: int,
                cover: Optional[int] = None) -> bool:
    ing = s.ing_of
    if subset_mask & ~ing[x]:
        return False
    if cover is None:
        cover = cover_mask(s, subset_mask)
    for u in _bits(ing[x]):
        if not ing[u] & cover:
            return False
    return True


def is_sup_mask(s: ParthoodStructure, x: int, subset_mask: int) -> bool:
    ing = s.ing_of
    if subset_mask & ~ing[x]:
        return False
    x_up = s.ing_up[x]
    for u in range(s.n):
        if not subset_mask & ~ing[u] and not x_up >> u & 1:
            return False
    return True


def sum_candidates(s: ParthoodStructure, subset_mask: int) -> list[int]:
    cover = cover_mask(s, subset_mask)
    return [x for x in range(s.n) if is_sum_mask(s, x, subset_mask, cover)]


def sup_candidates(s: ParthoodStructure, subset_mask: int) -> list[int]:
    return [x for x in range(s.n) if is_sup_mask(s, x, subset_mask)]


# -- public query operations ------------------------------------------------

def is_sum(s: ParthoodStructure, x: ElementLike, subset: SubsetLike) -> bool:
    return is_sum_mask(s, s.index(x), s.subset_mask(subset))


def is_sup(s: ParthoodStructure, x: ElementLike, subset: SubsetLike) -> bool:
    return is_sup_mask(s, s.index(x), s.subset_mask(subset))


def sum_of(s: ParthoodStructure, subset: SubsetLike) -> SumQueryResult:
    cands = sum_candidates(s, s.subset_mask(subset))
    elems = tuple(s.universe[i] for i in cands)
    return SumQueryResult(elems, len(elems) == 1)


def sup_of(s: ParthoodStructure, subset: SubsetLike) -> SupQueryResult:
    cands = sup_candidates(s, s.subset_mask(subset))
    elems = tuple(s.universe[i] for i in cands)
    return SupQueryResult(elems, len(elems) == 1)


# -- algebraic operations ----------------------------------------------------

def _unique_sum(s: ParthoodStructure, subset_mask: int,
                operation: str) -> Optional[ElementId]:
    cands = sum_candidates(s, subset_mask)
    if not cands:
        return None
    if len(cands) > 1:
        raise UniquenessFault(operation,
                              tuple(s.universe[i] for i in cands))
    return s.universe[cands[0]]


def product(s: ParthoodStructure, x: ElementLike,
            y: ElementLike) -> Optional[ElementId]:
    """Unique sum of the common ingredienses of x and y, if any."""
    i, j = s.index(x), s.index(y)
    return _unique_sum(s, s.ing_of[i] & s.ing_of[j], "product")


def difference(s: ParthoodStructure, x: ElementLike,
               y: ElementLike) -> Optional[ElementId]:
    """Unique sum of the ingredienses of x exterior to y, if any."""
    i, j = s.index(x), s.index(y)
    ing_y = s.ing_of[j]
    mask = 0
    for u in _bits(s.ing_of[i]):
        if not s.ing_of[u] & ing_y:
            mask |= 1 << u
    return _unique_sum(s, mask, "difference")


def complement(s: ParthoodStructure, x: ElementLike) -> Optional[ElementId]:
    """difference(unity, x); absent without a unity or for x = unity."""
    u = s.unity()
    if u is None or u.index == s.index(x):
        return None
    return difference(s, u, x)


def binary_sum(s: ParthoodStructure, x: ElementLike,
               y: ElementLike) -> Optional[ElementId]:
    """Unique sum of the pair {x, y}, if any."""
    mask = (1 << s.index(x)) | (1 << s.index(y))
    return _unique_sum(s, mask, "binary_sum")


def product_by_cases(s: ParthoodStructure, x: ElementLike,
                     y: ElementLike) -> Optional[ElementId]:
    """Case formula for the product of overlapping objects.

    Returns x when x Ing y, y when y Ing x, and x - (x - y) when the two
    cross.  Exterior pairs have no product.  On structures with the
    super-supplementation axioms this agrees with product() wherever the
    pair overlaps; on raw structures it may not.
    """
    i, j = s.index(x), s.index(y)
    if s.ing(i, j):
        return s.universe[i]
    if s.ing(j, i):
        return s.universe[j]
    if s.pov(i, j):
        inner = difference(s, i, j)
        if inner is None:
            return None
        return difference(s, i, inner)
    return None
