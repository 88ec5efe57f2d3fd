import pytest

from mereo import (
    OrderError, ParthoodStructure, adjoin_zero, enumerate_models,
    lattice_report, models_up_to_iso, satisfies, tarski_check, theory_axioms,
)
from mereo import fixtures as F
from mereo.lattice import is_boolean_complete


def test_adjoin_zero_shapes():
    z = adjoin_zero(F.b7())
    assert z.n == 8
    z = adjoin_zero(F.s1())
    assert z.n == 2
    z = adjoin_zero(F.w4())
    assert z.n == 5
    # three coatoms directly beneath the top
    top = z.join_of_set(z.full)
    coatoms = [i for i in range(z.n)
               if i != top and z.leq(i, top)
               and not any(z.leq(i, k) and z.leq(k, top)
                           and k not in (i, top) for k in range(z.n))]
    assert len(coatoms) == 3


def test_adjoin_zero_requires_strict_order():
    bad = ParthoodStructure.build(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(OrderError):
        adjoin_zero(bad)
    chainlike = ParthoodStructure.build(
        ["a", "b", "c"], [("a", "b"), ("b", "c")])   # not transitive
    with pytest.raises(OrderError):
        adjoin_zero(chainlike)


def test_zero_label_avoids_collision():
    s = ParthoodStructure.build(["0", "x"], [("0", "x")])
    z = adjoin_zero(s)
    assert z.elements[-1].label == "0'"


def test_round_trip_base_recovery():
    for fn in (F.w4, F.b7, F.s1, F.x6):
        s = fn()
        z = adjoin_zero(s)
        assert z.base is s
        assert z.elements[:-1] == s.universe
        # restricted to the base, the extended order is the ingrediens order
        for x in range(s.n):
            for y in range(s.n):
                assert z.leq(x, y) == s.ing(x, y)
        zero = z.zero_index
        assert all(z.leq(zero, i) for i in range(z.n))


def test_lattice_report_b7_is_boolean():
    r = lattice_report(adjoin_zero(F.b7()))
    assert r.is_lattice and r.is_distributive and r.is_complemented
    assert r.is_boolean and r.is_complete
    assert r.witness is None


def test_lattice_report_w4_fails_distributivity():
    r = lattice_report(adjoin_zero(F.w4()))
    assert r.is_lattice and not r.is_distributive
    assert not r.is_boolean and r.is_complete
    assert tuple(e.label for e in r.witness) == ("o1", "o2", "o3")


def test_lattice_report_c2_lacks_complements():
    r = lattice_report(adjoin_zero(F.c2()))
    assert r.is_lattice and r.is_distributive and not r.is_complemented
    assert not r.is_boolean
    assert tuple(e.label for e in r.witness) == ("x",)


def test_meets_joins_against_naive_bound_scan():
    for fn in (F.w4, F.b7, F.x6, F.chain4):
        z = adjoin_zero(fn())
        n = z.n
        le = [[z.leq(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                lower = [k for k in range(n) if le[k][i] and le[k][j]]
                glb = [k for k in lower
                       if all(le[m][k] for m in lower)]
                assert z.meet(i, j) == (glb[0] if glb else None)
                upper = [k for k in range(n) if le[i][k] and le[j][k]]
                lub = [k for k in upper
                       if all(le[k][m] for m in upper)]
                assert z.join(i, j) == (lub[0] if lub else None)


def test_boolean_iff_report_components():
    for fn in F.ALL.values():
        s = fn()
        from mereo import holds
        if not (holds(s, "T") and holds(s, "IRR")):
            continue
        r = lattice_report(adjoin_zero(s))
        assert r.is_boolean == (r.is_lattice and r.is_distributive
                                and r.is_complemented)
        assert r.is_complete == r.is_lattice      # finite carrier


def test_tarski_examples():
    assert tarski_check(F.b7())     # both sides hold
    assert tarski_check(F.w4())     # both sides fail
    assert tarski_check(F.c2())     # both sides fail
    # a raw relation is not classical and not an order: both sides fail
    loop = ParthoodStructure.build(["a", "b"], [("a", "b"), ("b", "a")])
    assert tarski_check(loop)


def test_tarski_sweep_to_5():
    for n in range(1, 6):
        for s in models_up_to_iso(n, ["T", "IRR"]):
            assert tarski_check(s), s


def test_gmu_matches_boolean_adjunction_to_5():
    gmu = theory_axioms("GMU")
    for n in range(1, 6):
        for s in models_up_to_iso(n, ["T", "IRR"]):
            assert satisfies(s, gmu) == lattice_report(adjoin_zero(s)).is_boolean, s


def test_cm_cardinality_law_to_6():
    cm = theory_axioms("CM")
    for n in range(1, 7):
        for s in enumerate_models(n, cm):
            assert s.n in (1, 3, 7)
            assert is_boolean_complete(adjoin_zero(s))
