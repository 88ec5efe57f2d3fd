"""Bounded model enumeration and countermodel search.

Structures are identified with the row-major encoding of their relation
(bit i*n+j set iff element i is a part of element j).  Isomorphism
rejection keeps a structure iff its encoding is minimal over all n!
permutations of the universe: exact, simple, and adequate for the sizes
this package handles.  Output is ordered by increasing universe size,
then increasing canonical encoding, so searches return minimal-size
witnesses and enumeration is deterministic.

Generation prunes by structural constraints where it can: transitivity
violations are cut during the cell-by-cell walk, irreflexivity empties
the diagonal, and for strict partial orders only relations compatible
with the index order are generated (every isomorphism class contains
such a labelling).  Remaining constraint axioms are checked on the
survivors, cheapest first.
"""

from __future__ import annotations

import functools
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .axioms import AxiomId, AxiomLike, axiom_id, satisfies
from .core import ParthoodStructure

# Invariant sweeps default to universes of size at most 5; command-line
# searches cap at 7.
DEFAULT_SWEEP_MAX = 5
SEARCH_MAX = 7


@dataclass(frozen=True)
class SearchSpec:
    max_n: int
    ambient: tuple[AxiomId, ...] = ()     # assumed; drives generation
    require: tuple[AxiomId, ...] = ()     # must hold
    forbid: tuple[AxiomId, ...] = ()      # must fail
    up_to_iso: bool = True

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        object.__setattr__(self, "ambient",
                           tuple(axiom_id(a) for a in self.ambient))
        object.__setattr__(self, "require",
                           tuple(axiom_id(a) for a in self.require))
        object.__setattr__(self, "forbid",
                           tuple(axiom_id(a) for a in self.forbid))
        if set(self.require) & set(self.forbid):
            raise ValueError("require and forbid overlap")


@dataclass(frozen=True)
class SearchResult:
    found: Optional[ParthoodStructure]
    explored: int
    exhausted: bool


# -- canonical forms ----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _perm_cell_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation p of range(n), the map cell -> permuted cell."""
    maps = []
    for p in itertools.permutations(range(n)):
        maps.append(tuple(p[i] * n + p[j] for i in range(n) for j in range(n)))
    return tuple(maps)


def _remap(mask: int, cmap: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << cmap[low.bit_length() - 1]
        mask ^= low
    return out


def canonical_form(n: int, mask: int) -> int:
    """Minimal relation encoding over all universe permutations."""
    return min(_remap(mask, cmap) for cmap in _perm_cell_maps(n))


def is_canonical(n: int, mask: int) -> bool:
    for cmap in _perm_cell_maps(n)[1:]:
        if _remap(mask, cmap) < mask:
            return False
    return True


# -- raw generators -----------------------------------------------------------

def _all_masks(n: int, irreflexive: bool) -> Iterator[int]:
    """Every relation encoding, ascending; diagonal empty if irreflexive."""
    if not irreflexive:
        yield from range(1 << (n * n))
        return
    offdiag = [i * n + j for i in range(n) for j in range(n) if i != j]
    for combo in range(1 << len(offdiag)):
        mask = 0
        c = combo
        while c:
            low = c & -c
            mask |= 1 << offdiag[low.bit_length() - 1]
            c ^= low
        yield mask


def _transitive_masks(n: int, irreflexive: bool) -> list[int]:
    """All transitive relations on n elements, by cell-by-cell search.

    Cells are decided in row-major order; a triple x P y P z lacking
    x P z is pruned as soon as the last of its three cells is decided.
    """
    cells = [(i, j) for i in range(n) for j in range(n)
             if not (irreflexive and i == j)]
    pos = {c: k for k, c in enumerate(cells)}
    rows = [0] * n
    out: list[int] = []

    def val(i: int, j: int) -> int:
        return rows[i] >> j & 1

    def settled(i: int, j: int, k: int) -> bool:
        if irreflexive and i == j:
            return True
        return pos[(i, j)] < k

    def ok(k: int, bit: int) -> bool:
        i, j = cells[k]
        if bit:
            for x in range(n):      # x P i and i P j force x P j
                if val(x, i) and settled(x, j, k) and not val(x, j):
                    return False
            for z in range(n):      # i P j and j P z force i P z
                if val(j, z) and settled(i, z, k) and not val(i, z):
                    return False
            return True
        for m in range(n):          # i P m and m P j forbid missing i P j
            if val(i, m) and val(m, j):
                return False
        return True

    def walk(k: int):
        if k == len(cells):
            out.append(sum(rows[i] << (i * n) for i in range(n)))
            return
        i, j = cells[k]
        if ok(k, 0):
            walk(k + 1)
        rows[i] |= 1 << j
        if ok(k, 1):
            walk(k + 1)
        rows[i] &= ~(1 << j)

    walk(0)
    return out


def _order_compatible_posets(n: int) -> list[int]:
    """Strict partial orders whose parts have higher indices than wholes.

    Every strict partial order is isomorphic to one of these (relabel
    along a linear extension), so they suffice for up-to-isomorphism
    enumeration.  Only strict-lower-triangle cells may hold edges; rows
    below i and row-i cells left of the walk are decided.
    """
    cells = [(i, j) for i in range(1, n) for j in range(i)]
    rows = [0] * n
    out: list[int] = []

    def walk(k: int):
        if k == len(cells):
            out.append(sum(rows[i] << (i * n) for i in range(n)))
            return
        i, j = cells[k]
        # skipping i P j is illegal when a decided m gives i P m P j
        legal0 = True
        m = rows[i]
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] >> j & 1:
                legal0 = False
                break
            m ^= low
        if legal0:
            walk(k + 1)
        # adding i P j forces i P z for every decided j P z
        if not rows[j] & ~rows[i]:
            rows[i] |= 1 << j
            walk(k + 1)
            rows[i] &= ~(1 << j)

    walk(0)
    return out


# -- enumeration ---------------------------------------------------------------

def _split_constraints(constraints: Sequence[AxiomLike]):
    axs = [axiom_id(a) for a in constraints]
    has_t = AxiomId.T in axs
    has_irr = AxiomId.IRR in axs
    residual = [a for a in axs if a not in (AxiomId.T, AxiomId.IRR)]
    return has_t, has_irr, residual


def _filtered(candidates, keep, workers: int) -> list[int]:
    """keep-filter preserving ascending order; worker count cannot change
    the result because chunks are reassembled by sorting."""
    if workers <= 1:
        return [m for m in candidates if keep(m)]
    items = list(candidates)
    chunks = [items[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda ch: [m for m in ch if keep(m)], chunks)
    return sorted(m for part in parts for m in part)


def _model_mask_stream(n: int, constraints: Sequence[AxiomLike],
                       up_to_iso: bool) -> Iterator[int]:
    """Model encodings in ascending order, produced lazily where the
    generation strategy allows it (all-relations and transitive walks);
    the strict-partial-order shortcut canonicalises a finished batch."""
    has_t, has_irr, residual = _split_constraints(constraints)

    def residual_ok(mask: int) -> bool:
        return satisfies(ParthoodStructure.from_mask(n, mask), residual)

    if up_to_iso and has_t and has_irr:
        reps = [m for m in _order_compatible_posets(n) if residual_ok(m)]
        yield from sorted({canonical_form(n, m) for m in reps})
        return

    if has_t:
        candidates: Iterable[int] = sorted(_transitive_masks(n, has_irr))
    else:
        candidates = _all_masks(n, has_irr)
    if up_to_iso:
        for m in candidates:
            if is_canonical(n, m) and residual_ok(m):
                yield m
    else:
        yield from (m for m in candidates if residual_ok(m))


def enumerate_model_masks(n: int, constraints: Sequence[AxiomLike] = (),
                          up_to_iso: bool = True,
                          workers: int = 1) -> list[int]:
    """Relation encodings of every model of the constraints, ascending.

    With up_to_iso, exactly the canonical (minimal-encoding)
    representative of each isomorphism class is kept.
    """
    if workers <= 1:
        return list(_model_mask_stream(n, constraints, up_to_iso))

    has_t, has_irr, residual = _split_constraints(constraints)

    def residual_ok(mask: int) -> bool:
        return satisfies(ParthoodStructure.from_mask(n, mask), residual)

    if up_to_iso and has_t and has_irr:
        reps = _filtered(_order_compatible_posets(n), residual_ok, workers)
        return sorted({canonical_form(n, m) for m in reps})

    if has_t:
        candidates: Iterable[int] = sorted(_transitive_masks(n, has_irr))
    else:
        candidates = _all_masks(n, has_irr)
    if up_to_iso:
        keep = lambda m: is_canonical(n, m) and residual_ok(m)
    else:
        keep = residual_ok
    return _filtered(candidates, keep, workers)


def enumerate_models(n: int, constraints: Sequence[AxiomLike] = (),
                     up_to_iso: bool = True,
                     workers: int = 1) -> Iterator[ParthoodStructure]:
    """Every relation on n elements satisfying the constraints.

    One representative per isomorphism class when up_to_iso; ordered by
    increasing canonical encoding, independent of worker count.
    """
    if workers <= 1:
        masks: Iterable[int] = _model_mask_stream(n, constraints, up_to_iso)
    else:
        masks = enumerate_model_masks(n, constraints, up_to_iso, workers)
    for mask in masks:
        yield ParthoodStructure.from_mask(n, mask)


def count_models(n: int, constraints: Sequence[AxiomLike] = (),
                 up_to_iso: bool = True, workers: int = 1) -> int:
    return len(enumerate_model_masks(n, constraints, up_to_iso, workers))


@functools.lru_cache(maxsize=None)
def _cached_masks(n: int, constraints: tuple[AxiomId, ...]) -> tuple[int, ...]:
    return tuple(enumerate_model_masks(n, constraints, up_to_iso=True))


def models_up_to_iso(n: int, constraints: Iterable[AxiomLike] = ()) \
        -> list[ParthoodStructure]:
    """Cached canonical models of exactly size n."""
    key = tuple(sorted((axiom_id(a) for a in constraints),
                       key=lambda a: a.name))
    return [ParthoodStructure.from_mask(n, m) for m in _cached_masks(n, key)]


# -- search -------------------------------------------------------------------

def find_model(spec: SearchSpec, workers: int = 1) -> SearchResult:
    """First canonical structure satisfying ambient plus require and
    violating every forbid entry; sizes are searched in increasing order.

    `explored` counts the structures that met ambient plus require and
    were tested against the forbid list.
    """
    explored = 0
    constraints = spec.ambient + spec.require
    for n in range(1, spec.max_n + 1):
        for s in enumerate_models(n, constraints, spec.up_to_iso, workers):
            explored += 1
            if all(not satisfies(s, [f]) for f in spec.forbid):
                return SearchResult(s, explored, False)
    return SearchResult(None, explored, True)


def verify_implication(ambient: Sequence[AxiomLike],
                       hypothesis: Sequence[AxiomLike],
                       conclusion: AxiomLike,
                       max_n: int = DEFAULT_SWEEP_MAX,
                       workers: int = 1) -> SearchResult:
    """Search for a model of ambient plus hypothesis violating the conclusion.

    Exhausted with nothing found is a bounded confirmation of the
    implication; a find is a refutation with a concrete witness.
    """
    spec = SearchSpec(
        max_n=max_n,
        ambient=tuple(axiom_id(a) for a in ambient),
        require=tuple(axiom_id(a) for a in hypothesis),
        forbid=(axiom_id(conclusion),),
    )
    return find_model(spec, workers)
