"""Shared helpers: naive definitional oracles and structure strategies.

The oracle functions re-derive every relation from the raw (part, whole)
pair list with plain set logic, independently of the package's bitmask
code paths, so they can stand as expected-value generators in tests.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from mereo import ParthoodStructure

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


# -- naive oracles ------------------------------------------------------------

def o_pairs(s: ParthoodStructure) -> set[tuple[str, str]]:
    return {(p.label, w.label) for p, w in s.pairs()}


def o_labels(s: ParthoodStructure) -> list[str]:
    return [e.label for e in s.universe]


def o_ing(pairs, x, y) -> bool:
    return x == y or (x, y) in pairs


def o_ov(labels, pairs, x, y) -> bool:
    return any(o_ing(pairs, z, x) and o_ing(pairs, z, y) for z in labels)


def o_pov(labels, pairs, x, y) -> bool:
    return (x != y and (x, y) not in pairs and (y, x) not in pairs
            and any((z, x) in pairs and (z, y) in pairs for z in labels))


def o_is_sum(labels, pairs, x, members) -> bool:
    members = list(members)
    if not all(o_ing(pairs, m, x) for m in members):
        return False
    return all(any(o_ov(labels, pairs, u, m) for m in members)
               for u in labels if o_ing(pairs, u, x))


def o_is_sup(labels, pairs, x, members) -> bool:
    members = list(members)
    if not all(o_ing(pairs, m, x) for m in members):
        return False
    bounds = [u for u in labels
              if all(o_ing(pairs, m, u) for m in members)]
    return all(o_ing(pairs, x, u) for u in bounds)


def o_subsets(labels):
    for r in range(len(labels) + 1):
        yield from itertools.combinations(labels, r)


# -- random structures --------------------------------------------------------

def _closure(n: int, mask: int) -> int:
    rows = [(mask >> (i * n)) & ((1 << n) - 1) for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            for j in range(n):
                if rows[i] >> j & 1:
                    acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return sum(rows[i] << (i * n) for i in range(n))


@st.composite
def structures(draw, max_n=5, transitive=False, irreflexive=False):
    n = draw(st.integers(min_value=1, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * n)) - 1))
    if transitive:
        mask = _closure(n, mask)
    if irreflexive:
        for i in range(n):
            mask &= ~(1 << (i * n + i))
        if transitive:
            mask = _closure(n, mask)
            for i in range(n):
                mask &= ~(1 << (i * n + i))          # cycles may re-add loops
            # re-closing an irreflexive projection can leave broken chains;
            # drop to the largest transitive irreflexive sub-relation instead
            rows = [(mask >> (i * n)) & ((1 << n) - 1) for i in range(n)]
            ok = all(not rows[j] & ~rows[i]
                     for i in range(n) for j in range(n) if rows[i] >> j & 1)
            if not ok:
                mask = 0
    return ParthoodStructure.from_mask(n, mask)


@pytest.fixture(scope="session")
def fixture_files():
    return sorted(FIXTURE_DIR.glob("*.txt"))
