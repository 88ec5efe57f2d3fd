"""Finite parthood structures and their derived relations.

A structure is a finite universe together with an arbitrary binary
"part of" relation.  Nothing is assumed about the relation at
construction time: it may violate irreflexivity, transitivity, or any
other law, because the axiom checkers must be able to exhibit
violations and the model search must range over all relations.

Everything is precomputed as bitmasks at construction (bit i of an
element mask corresponds to universe index i), instances are immutable
afterwards, and all queries are pure, so structures can be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

# Universe size cap keeping 2^n subset scans tractable.
MAX_UNIVERSE_SIZE = 12

DEFAULT_LABELS = "abcdefghijkl"


class MereologyError(Exception):
    """Base class for errors raised by this package."""


class DomainError(MereologyError):
    """An element or label does not belong to the structure's universe."""


@dataclass(frozen=True, order=True)
class ElementId:
    """A universe element: contiguous index plus a unique display label."""

    index: int
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Subset:
    """A set of elements of one structure's universe; may be empty.

    `mask` is the characteristic bit vector (bit i = element of index i),
    `members` the elements in universe order.
    """

    members: tuple[ElementId, ...]
    mask: int

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, e: object) -> bool:
        return e in self.members

    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


ElementLike = Union[ElementId, str, int]
SubsetLike = Union[Subset, int, Iterable[ElementLike]]


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ParthoodStructure:
    """A finite universe with an explicit binary part-of relation.

    Rows of the incidence table are stored as integers: bit j of
    `rows[x]` means "x is a part of y_j".  Derived masks:

      parts_in[x]  -- {z : z P x}, the parts of x
      ing_of[x]    -- {z : z Ing x} = parts_in[x] | {x}
      ing_up[x]    -- {u : x Ing u} = rows[x] | {x}
      ov_of[x]     -- {u : u Ov x}
    """

    __slots__ = (
        "n", "universe", "_label_index",
        "rows", "parts_in", "ing_of", "ing_up", "ov_of", "full",
    )

    def __init__(self, labels: Sequence[str], rows: Sequence[int]):
        n = len(labels)
        if not 1 <= n <= MAX_UNIVERSE_SIZE:
            raise DomainError(
                f"universe size {n} outside 1..{MAX_UNIVERSE_SIZE}")
        if len(set(labels)) != n:
            raise DomainError("labels must be pairwise distinct")
        if len(rows) != n:
            raise DomainError("relation table must have one row per element")
        full = (1 << n) - 1
        for r in rows:
            if r & ~full:
                raise DomainError("relation row mentions foreign elements")
        self.n = n
        self.full = full
        self.universe = tuple(ElementId(i, str(l)) for i, l in enumerate(labels))
        self._label_index = {e.label: e.index for e in self.universe}
        self.rows = tuple(rows)
        parts_in = [0] * n
        for x in range(n):
            for y in _bits(rows[x]):
                parts_in[y] |= 1 << x
        self.parts_in = tuple(parts_in)
        self.ing_of = tuple(parts_in[x] | (1 << x) for x in range(n))
        self.ing_up = tuple(self.rows[x] | (1 << x) for x in range(n))
        ing = self.ing_of
        self.ov_of = tuple(
            sum(1 << u for u in range(n) if ing[u] & ing[x])
            for x in range(n)
        )

    # -- construction -----------------------------------------------------

    @classmethod
    def build(cls, labels: Sequence[str],
              parts: Iterable[tuple[str, str]] = ()) -> "ParthoodStructure":
        """Build from labels and (part, whole) label pairs."""
        index = {str(l): i for i, l in enumerate(labels)}
        if len(index) != len(labels):
            raise DomainError("labels must be pairwise distinct")
        rows = [0] * len(labels)
        for part, whole in parts:
            if part not in index:
                raise DomainError(f"undeclared label {part!r}")
            if whole not in index:
                raise DomainError(f"undeclared label {whole!r}")
            rows[index[part]] |= 1 << index[whole]
        return cls(labels, rows)

    @classmethod
    def from_mask(cls, n: int, mask: int,
                  labels: Optional[Sequence[str]] = None) -> "ParthoodStructure":
        """Build from the row-major relation encoding (bit i*n+j = i P j)."""
        if labels is None:
            labels = DEFAULT_LABELS[:n]
        rows = [(mask >> (i * n)) & ((1 << n) - 1) for i in range(n)]
        return cls(labels, rows)

    @property
    def relation_mask(self) -> int:
        """Row-major encoding of the relation (bit i*n+j = i P j)."""
        n = self.n
        return sum(self.rows[i] << (i * n) for i in range(n))

    # -- element / subset resolution --------------------------------------

    def index(self, x: ElementLike) -> int:
        if isinstance(x, ElementId):
            i = x.index
            if 0 <= i < self.n and self.universe[i] == x:
                return i
            raise DomainError(f"element {x} not in universe")
        if isinstance(x, str):
            try:
                return self._label_index[x]
            except KeyError:
                raise DomainError(f"no element labelled {x!r}") from None
        if isinstance(x, int):
            if 0 <= x < self.n:
                return x
            raise DomainError(f"index {x} out of range")
        raise DomainError(f"cannot resolve element {x!r}")

    def element(self, x: ElementLike) -> ElementId:
        return self.universe[self.index(x)]

    def subset_mask(self, s: SubsetLike) -> int:
        if isinstance(s, Subset):
            if s.mask & ~self.full:
                raise DomainError("subset mentions foreign elements")
            for e in s.members:
                self.index(e)
            return s.mask
        if isinstance(s, int):
            if s & ~self.full:
                raise DomainError("subset mask mentions foreign elements")
            return s
        mask = 0
        for x in s:
            mask |= 1 << self.index(x)
        return mask

    def subset(self, *xs: ElementLike) -> Subset:
        return self.subset_from_mask(self.subset_mask(xs))

    def subset_from_mask(self, mask: int) -> Subset:
        if mask & ~self.full:
            raise DomainError("subset mask mentions foreign elements")
        return Subset(tuple(self.universe[i] for i in _bits(mask)), mask)

    def subsets(self) -> Iterator[Subset]:
        """All subsets in increasing characteristic-vector encoding."""
        for mask in range(1 << self.n):
            yield self.subset_from_mask(mask)

    # -- primitive and derived relations ----------------------------------

    def part(self, x: ElementLike, y: ElementLike) -> bool:
        """x P y: the raw relation."""
        return bool(self.rows[self.index(x)] >> self.index(y) & 1)

    def ing(self, x: ElementLike, y: ElementLike) -> bool:
        """x is an ingrediens of y: x = y or x P y."""
        i, j = self.index(x), self.index(y)
        return i == j or bool(self.rows[i] >> j & 1)

    def ov(self, x: ElementLike, y: ElementLike) -> bool:
        """x and y overlap: some z is an ingrediens of both."""
        return bool(self.ing_of[self.index(x)] & self.ing_of[self.index(y)])

    def ext(self, x: ElementLike, y: ElementLike) -> bool:
        """x and y are exterior to one another: no common ingrediens."""
        return not self.ov(x, y)

    def pov(self, x: ElementLike, y: ElementLike) -> bool:
        """x and y cross: distinct, neither a part of the other, common part."""
        i, j = self.index(x), self.index(y)
        if i == j or self.rows[i] >> j & 1 or self.rows[j] >> i & 1:
            return False
        return bool(self.parts_in[i] & self.parts_in[j])

    def is_zero(self, x: ElementLike) -> bool:
        """x is an ingrediens of everything."""
        return self.ing_up[self.index(x)] == self.full

    def is_unity(self, x: ElementLike) -> bool:
        """everything is an ingrediens of x."""
        return self.ing_of[self.index(x)] == self.full

    def zero(self) -> Optional[ElementId]:
        for i in range(self.n):
            if self.ing_up[i] == self.full:
                return self.universe[i]
        return None

    def unity(self) -> Optional[ElementId]:
        for i in range(self.n):
            if self.ing_of[i] == self.full:
                return self.universe[i]
        return None

    def atoms(self) -> Subset:
        """Elements with no parts."""
        mask = 0
        for i in range(self.n):
            if not self.parts_in[i]:
                mask |= 1 << i
        return self.subset_from_mask(mask)

    def ingredienses(self, x: ElementLike) -> Subset:
        return self.subset_from_mask(self.ing_of[self.index(x)])

    def parts_of(self, x: ElementLike) -> Subset:
        return self.subset_from_mask(self.parts_in[self.index(x)])

    def pairs(self) -> list[tuple[ElementId, ElementId]]:
        """All (part, whole) pairs in universe order."""
        out = []
        for i in range(self.n):
            for j in _bits(self.rows[i]):
                out.append((self.universe[i], self.universe[j]))
        return out

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ParthoodStructure)
                and self.universe == other.universe
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.universe, self.rows))

    def __repr__(self) -> str:
        edges = ", ".join(f"{p}<{w}" for p, w in self.pairs())
        return (f"ParthoodStructure([{', '.join(e.label for e in self.universe)}]"
                + (f"; {edges})" if edges else ")"))
