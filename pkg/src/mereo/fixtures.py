"""Small structures used throughout the tests and documentation."""

from __future__ import annotations

import functools

from .core import ParthoodStructure

build = ParthoodStructure.build


@functools.lru_cache(maxsize=None)
def s1() -> ParthoodStructure:
    """One element, empty relation: the degenerate universe."""
    return build(["e"])


@functools.lru_cache(maxsize=None)
def c2() -> ParthoodStructure:
    """Two elements with a single part edge: an object with exactly one part."""
    return build(["x", "y"], [("x", "y")])


@functools.lru_cache(maxsize=None)
def w4() -> ParthoodStructure:
    """Three pairwise disjoint objects lying directly under a top element.

    The top is the supremum of each pair of the three, but no pair has a
    sum, so suprema are not sums here.
    """
    return build(["1", "o1", "o2", "o3"],
                 [("o1", "1"), ("o2", "1"), ("o3", "1")])


@functools.lru_cache(maxsize=None)
def b3() -> ParthoodStructure:
    """Two atoms under their fusion: the 4-element Boolean lattice minus zero."""
    return build(["a", "b", "ab"], [("a", "ab"), ("b", "ab")])


@functools.lru_cache(maxsize=None)
def b7() -> ParthoodStructure:
    """Three atoms and all their fusions: the 8-element Boolean lattice
    minus zero."""
    labels = ["a", "b", "c", "ab", "ac", "bc", "abc"]
    pairs = []
    atom_sets = {"a": {"a"}, "b": {"b"}, "c": {"c"},
                 "ab": {"a", "b"}, "ac": {"a", "c"}, "bc": {"b", "c"},
                 "abc": {"a", "b", "c"}}
    for p in labels:
        for w in labels:
            if p != w and atom_sets[p] < atom_sets[w]:
                pairs.append((p, w))
    return build(labels, pairs)


@functools.lru_cache(maxsize=None)
def x6() -> ParthoodStructure:
    """Two composites crossing on two shared atoms, one private atom each.

    Strongly supplemented, but the shared pair has no fusion, so the
    crossing pair has no product.
    """
    return build(["x", "y", "a", "b", "c", "d"],
                 [("a", "x"), ("b", "x"), ("c", "x"),
                  ("a", "y"), ("b", "y"), ("d", "y")])


@functools.lru_cache(maxsize=None)
def chain4() -> ParthoodStructure:
    """A four-step chain with every composite edge present."""
    return build(["x", "z1", "z2", "y"],
                 [("x", "z1"), ("z1", "z2"), ("z2", "y"),
                  ("x", "y"), ("x", "z2"), ("z1", "y")])


@functools.lru_cache(maxsize=None)
def chain4_gap() -> ParthoodStructure:
    """chain4 with the x-to-z2 shortcut removed: locally non-transitive."""
    return build(["x", "z1", "z2", "y"],
                 [("x", "z1"), ("z1", "z2"), ("z2", "y"),
                  ("x", "y"), ("z1", "y")])


@functools.lru_cache(maxsize=None)
def orch() -> ParthoodStructure:
    """Heart u, part of violinist y, part of orchestra z; the heart is
    not asserted to be part of the orchestra."""
    return build(["u", "y", "z"], [("u", "y"), ("y", "z")])


@functools.lru_cache(maxsize=None)
def triples8() -> ParthoodStructure:
    """Four atoms and their four three-atom fusions.

    Sums and suprema coincide on nonempty sets, yet two fusions sharing
    a pair of atoms have no product: the smallest structure found that
    separates the sum-supremum coincidence from product existence.
    """
    labels = ["a", "b", "c", "d", "abc", "abd", "acd", "bcd"]
    pairs = [(at, top) for top in labels[4:] for at in top]
    return build(labels, pairs)


ALL = {
    "s1": s1, "c2": c2, "w4": w4, "b3": b3, "b7": b7, "x6": x6,
    "chain4": chain4, "chain4_gap": chain4_gap, "orch": orch,
    "triples8": triples8,
}
