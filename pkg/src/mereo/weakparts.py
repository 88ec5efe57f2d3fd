"""Parthood without assumed transitivity: acyclicity plus local transitivity.

In this regime the relation is only required to have no closed part
cycles, and transitivity is demanded just locally: whenever x is a part
of y, the relation restricted to the node set of any part-path from x
to y must be transitive.  Paths are simple directed part-chains; the
direct edge counts as the trivial path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .axioms import _find_cycle
from .core import ElementId, ElementLike, ParthoodStructure, _bits


@dataclass(frozen=True)
class PartPath:
    """A chain x, z1, ..., zn, y with each consecutive pair in the relation."""

    nodes: tuple[ElementId, ...]

    def __str__(self) -> str:
        return " -> ".join(e.label for e in self.nodes)

    def valid_in(self, s: ParthoodStructure) -> bool:
        return all(s.part(a, b) for a, b in zip(self.nodes, self.nodes[1:]))


@dataclass(frozen=True)
class AcyclicityVerdict:
    holds: bool
    cycle: Optional[tuple[ElementId, ...]] = None

    def __str__(self) -> str:
        if self.holds:
            return "acyclic"
        return "cyclic, witness [" + ", ".join(e.label for e in self.cycle) + "]"


@dataclass(frozen=True)
class LocalTransitivityVerdict:
    holds: bool
    path: Optional[PartPath] = None
    triple: Optional[tuple[ElementId, ElementId, ElementId]] = None

    def __str__(self) -> str:
        if self.holds:
            return "locally transitive"
        trip = ", ".join(e.label for e in self.triple)
        return f"not locally transitive on path [{self.path}], triple ({trip})"


def is_acyclic(s: ParthoodStructure) -> AcyclicityVerdict:
    """No directed cycle in the part digraph (self-loops and mutual
    parts are the length-1 and length-2 cases)."""
    cycle = _find_cycle(s)
    if cycle is None:
        return AcyclicityVerdict(True)
    return AcyclicityVerdict(False, tuple(s.universe[i] for i in cycle))


def _simple_paths(s: ParthoodStructure, x: int, y: int,
                  max_len: int) -> list[tuple[int, ...]]:
    """Simple part-paths from x to y with at most max_len nodes, in
    lexicographic node order."""
    out: list[tuple[int, ...]] = []
    path = [x]
    seen = 1 << x

    def walk():
        nonlocal seen
        here = path[-1]
        for nxt in _bits(s.rows[here]):
            if nxt == y:
                out.append(tuple(path) + (y,))
                continue
            if seen >> nxt & 1 or len(path) + 2 > max_len:
                continue
            path.append(nxt)
            seen |= 1 << nxt
            walk()
            path.pop()
            seen &= ~(1 << nxt)

    if x == y:
        return []
    if max_len >= 2:
        walk()
    return out


def paths_between(s: ParthoodStructure, x: ElementLike, y: ElementLike,
                  max_len: Optional[int] = None) -> list[PartPath]:
    """All simple part-paths from x to y up to max_len nodes (default:
    the universe size, the longest a simple path can be)."""
    if max_len is None:
        max_len = s.n
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    i, j = s.index(x), s.index(y)
    return [PartPath(tuple(s.universe[k] for k in nodes))
            for nodes in _simple_paths(s, i, j, max_len)]


def _transitivity_gap(s: ParthoodStructure,
                      nodes: tuple[int, ...]) -> Optional[tuple[int, int, int]]:
    """First triple from the node set on which transitivity fails."""
    members = sorted(set(nodes))
    for a in members:
        ra = s.rows[a]
        for b in members:
            if not ra >> b & 1:
                continue
            for c in members:
                if s.rows[b] >> c & 1 and not ra >> c & 1:
                    return (a, b, c)
    return None


def is_locally_transitive(s: ParthoodStructure) -> LocalTransitivityVerdict:
    """For every pair x P y and every part-path from x to y, the relation
    restricted to the path's node set is transitive."""
    for x in range(s.n):
        for y in _bits(s.rows[x]):
            for nodes in _simple_paths(s, x, y, s.n):
                gap = _transitivity_gap(s, nodes)
                if gap is not None:
                    path = PartPath(tuple(s.universe[k] for k in nodes))
                    triple = tuple(s.universe[k] for k in gap)
                    return LocalTransitivityVerdict(False, path, triple)
    return LocalTransitivityVerdict(True)
