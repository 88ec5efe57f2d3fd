"""Catalog of the named principles, each decidable over a finite structure.

Every axiom is evaluated literally, including vacuous-truth cases on
degenerate universes, and no axiom presupposes another: SSP is checked
even on non-transitive relations, the subset-quantified principles scan
all 2^n subsets, and acyclicity is decided by cycle detection in the
part digraph.

A failed check carries a witness: the first violating assignment under
universe order and subset encoding order, as a tuple of elements
followed by subsets.  Re-evaluating the axiom body on the witness
reproduces the violation.  Principles that fail by the absence of a
required object (a missing exterior pair, a missing unity) report an
empty witness tuple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .core import MereologyError, ParthoodStructure, _bits
from .sums import cover_mask, is_sum_mask, is_sup_mask, sum_candidates, sup_candidates


class CatalogError(MereologyError):
    """Unknown axiom or theory code."""


class AxiomId(enum.Enum):
    IRR = "IRR"                  # nothing is a part of itself
    ANTIS = "ANTIS"              # no two distinct mutual parts
    AS = "AS"                    # no mutual parts at all
    T = "T"                      # parthood is transitive
    AC = "AC"                    # no closed parthood cycles of any length
    NO_ZERO = "NO_ZERO"          # no least element in a non-degenerate universe
    EXISTS_EXT = "EXISTS_EXT"    # non-degenerate universes have an exterior pair
    WSP = "WSP"                  # weak supplementation
    SSP = "SSP"                  # strong supplementation
    SSP_OV = "SSP_OV"            # supplementation via overlap monotonicity
    SSP_EXT = "SSP_EXT"          # supplementation via exteriority monotonicity
    SSP_PLUS = "SSP_PLUS"        # super-strong supplementation (greatest remainder)
    PPP = "PPP"                  # proper-parts principle
    U_SUM = "U_SUM"              # sums are unique
    S_SUM = "S_SUM"              # the only sum of a singleton is its member
    U_SUP = "U_SUP"              # suprema are unique
    EXT_PP = "EXT_PP"            # extensionality of proper parts
    EXT_ING = "EXT_ING"          # extensionality of ingredienses
    EXT_OV = "EXT_OV"            # extensionality of overlap
    EXT_EXT = "EXT_EXT"          # extensionality of exteriority
    DOLLAR_EXT = "DOLLAR_EXT"    # sum characterised by exteriority closure
    DOLLAR_OV = "DOLLAR_OV"      # sum characterised by overlap closure
    DIAMOND = "DIAMOND"          # sum and supremum agree when both exist
    SUM_SUB_SUP = "SUM_SUB_SUP"  # every sum is a supremum
    SUP_SUB_SUM = "SUP_SUB_SUM"  # every supremum is a sum
    DAGGER = "DAGGER"            # every supremum of a nonempty set is its sum
    DDAGGER = "DDAGGER"          # sum coincides with supremum on nonempty sets
    C_PROD = "C_PROD"            # overlapping pairs have a product
    C_BSUM = "C_BSUM"            # pairs under a common bound have a sum
    E_BSUM = "E_BSUM"            # every pair has a sum
    E_SUM = "E_SUM"              # every nonempty subset has a sum
    UNITY = "UNITY"              # a greatest element exists

    def __str__(self) -> str:
        return self.value


AxiomLike = Union[AxiomId, str]


def axiom_id(a: AxiomLike) -> AxiomId:
    if isinstance(a, AxiomId):
        return a
    try:
        return AxiomId[str(a).upper()]
    except KeyError:
        raise CatalogError(f"unknown axiom code {a!r}") from None


@dataclass(frozen=True)
class Verdict:
    axiom: AxiomId
    holds: bool
    witness: Optional[tuple] = None      # ElementId / Subset entries

    def __str__(self) -> str:
        if self.holds:
            return f"{self.axiom}: holds"
        if self.witness == ():
            return f"{self.axiom}: fails"
        parts = ", ".join(str(w) for w in self.witness)
        return f"{self.axiom}: fails, witness ({parts})"


# -- violation finders ------------------------------------------------------
# Each returns None (axiom holds) or the raw witness: a tuple of element
# indices and/or subset masks, converted to ElementId/Subset by check_axiom.
# The trailing tuple marks which entries are subsets.

def _irr(s):
    for x in range(s.n):
        if s.rows[x] >> x & 1:
            return (x,)
    return None


def _antis(s):
    for x in range(s.n):
        for y in range(s.n):
            if x != y and s.rows[x] >> y & 1 and s.rows[y] >> x & 1:
                return (x, y)
    return None


def _as(s):
    for x in range(s.n):
        for y in range(s.n):
            if s.rows[x] >> y & 1 and s.rows[y] >> x & 1:
                return (x, y)
    return None


def _t(s):
    for x in range(s.n):
        rx = s.rows[x]
        for y in _bits(rx):
            missing = s.rows[y] & ~rx
            if missing:
                z = (missing & -missing).bit_length() - 1
                return (x, y, z)
    return None


def _find_cycle(s: ParthoodStructure) -> Optional[tuple[int, ...]]:
    """Shortest part-cycle through the lowest-index element on one, if any."""
    n = s.n
    for start in range(n):
        if s.rows[start] >> start & 1:
            return (start,)
        prev = [-1] * n
        seen = 1 << start
        queue = [start]
        while queue:
            nxt = []
            for u in queue:
                for v in _bits(s.rows[u] & ~seen):
                    seen |= 1 << v
                    prev[v] = u
                    nxt.append(v)
            queue = nxt
        # any reached v with an edge back to start closes a cycle
        best = None
        for v in range(n):
            if v != start and seen >> v & 1 and s.rows[v] >> start & 1:
                path = [v]
                while path[-1] != start:
                    path.append(prev[path[-1]])
                path.reverse()
                if best is None or len(path) < len(best):
                    best = path
        if best is not None:
            return tuple(best)
    return None


def _ac(s):
    return _find_cycle(s)


def _no_zero(s):
    if s.n < 2:
        return None
    for x in range(s.n):
        if s.ing_up[x] == s.full:
            return (x,)
    return None


def _exists_ext(s):
    if s.n < 2:
        return None
    ing = s.ing_of
    for x in range(s.n):
        for y in range(s.n):
            if not ing[x] & ing[y]:
                return None
    return ()


def _wsp(s):
    ing = s.ing_of
    for a in range(s.n):
        for b in _bits(s.rows[a]):
            ia = ing[a]
            if not any(not ing[z] & ia for z in _bits(s.parts_in[b])):
                return (a, b)
    return None


def _ssp(s):
    ing = s.ing_of
    for x in range(s.n):
        for y in range(s.n):
            if s.ing_up[x] >> y & 1:
                continue
            iy = ing[y]
            if not any(not ing[z] & iy for z in _bits(ing[x])):
                return (x, y)
    return None


def _ssp_ov(s):
    for x in range(s.n):
        for y in range(s.n):
            if not s.ov_of[x] & ~s.ov_of[y] and not s.ing_up[x] >> y & 1:
                return (x, y)
    return None


def _ssp_plus(s):
    ing = s.ing_of
    for x in range(s.n):
        for y in range(s.n):
            if s.ing_up[x] >> y & 1:
                continue
            iy = ing[y]
            rest = 0
            for u in _bits(ing[x]):
                if not ing[u] & iy:
                    rest |= 1 << u
            if not any(not rest & ~ing[z] for z in _bits(rest)):
                return (x, y)
    return None


def _ppp(s):
    for x in range(s.n):
        px = s.parts_in[x]
        if not px:
            continue
        for y in range(s.n):
            if not px & ~s.parts_in[y] and not s.ing_up[x] >> y & 1:
                return (x, y)
    return None


def _u_sum(s):
    for mask in range(1, s.full + 1):
        cands = sum_candidates(s, mask)
        if len(cands) > 1:
            return (cands[0], cands[1], ("subset", mask))
    return None


def _s_sum(s):
    for x in range(s.n):
        for y in range(s.n):
            if x != y and is_sum_mask(s, x, 1 << y):
                return (x, y)
    return None


def _u_sup(s):
    for mask in range(1, s.full + 1):
        cands = sup_candidates(s, mask)
        if len(cands) > 1:
            return (cands[0], cands[1], ("subset", mask))
    return None


def _ext_pp(s):
    for x in range(s.n):
        px = s.parts_in[x]
        if not px:
            continue
        for y in range(s.n):
            if x != y and px == s.parts_in[y]:
                return (x, y)
    return None


def _ext_ing(s):
    for x in range(s.n):
        for y in range(s.n):
            if x != y and s.ing_of[x] == s.ing_of[y]:
                return (x, y)
    return None


def _ext_ov(s):
    for x in range(s.n):
        for y in range(s.n):
            if x != y and s.ov_of[x] == s.ov_of[y]:
                return (x, y)
    return None


def _dollar_closure_holds(s, x: int, mask: int) -> bool:
    """u Ov x iff u overlaps some member, for every u."""
    ing = s.ing_of
    ix = ing[x]
    cover = cover_mask(s, mask)
    return all(bool(ing[u] & ix) == bool(ing[u] & cover) for u in range(s.n))


def _dollar(s):
    for x in range(s.n):
        for mask in range(s.full + 1):
            if is_sum_mask(s, x, mask) != _dollar_closure_holds(s, x, mask):
                return (x, ("subset", mask))
    return None


def dollar_converse_holds(s: ParthoodStructure) -> bool:
    """The closure-to-sum halves of the sum characterisations.

    Both the overlap and the exteriority form have the same converse:
    whenever the closure condition holds of x and S, x is a sum of S.
    """
    for x in range(s.n):
        for mask in range(s.full + 1):
            if _dollar_closure_holds(s, x, mask) and not is_sum_mask(s, x, mask):
                return False
    return True


def _diamond(s):
    for mask in range(1, s.full + 1):
        sums = sum_candidates(s, mask)
        if not sums:
            continue
        sups = sup_candidates(s, mask)
        for x in sums:
            for y in sups:
                if x != y:
                    return (x, y, ("subset", mask))
    return None


def _sum_sub_sup(s):
    for x in range(s.n):
        for mask in range(1, s.full + 1):
            if is_sum_mask(s, x, mask) and not is_sup_mask(s, x, mask):
                return (x, ("subset", mask))
    return None


def _sup_sub_sum(s):
    for x in range(s.n):
        for mask in range(s.full + 1):
            if is_sup_mask(s, x, mask) and not is_sum_mask(s, x, mask):
                return (x, ("subset", mask))
    return None


def _dagger(s):
    for x in range(s.n):
        for mask in range(1, s.full + 1):
            if is_sup_mask(s, x, mask) and not is_sum_mask(s, x, mask):
                return (x, ("subset", mask))
    return None


def _ddagger(s):
    for x in range(s.n):
        for mask in range(s.full + 1):
            lhs = is_sum_mask(s, x, mask)
            rhs = mask != 0 and is_sup_mask(s, x, mask)
            if lhs != rhs:
                return (x, ("subset", mask))
    return None


def _c_prod(s):
    ing = s.ing_of
    for x in range(s.n):
        for y in range(s.n):
            common = ing[x] & ing[y]
            if common and not any(ing[z] == common for z in range(s.n)):
                return (x, y)
    return None


def _c_bsum(s):
    for x in range(s.n):
        for y in range(s.n):
            if not s.ing_up[x] & s.ing_up[y]:
                continue
            if not sum_candidates(s, (1 << x) | (1 << y)):
                return (x, y)
    return None


def _e_bsum(s):
    for x in range(s.n):
        for y in range(s.n):
            if not sum_candidates(s, (1 << x) | (1 << y)):
                return (x, y)
    return None


def _e_sum(s):
    for mask in range(1, s.full + 1):
        if not sum_candidates(s, mask):
            return (("subset", mask),)
    return None


def _unity(s):
    for x in range(s.n):
        if s.ing_of[x] == s.full:
            return None
    return ()


# -- catalog ------------------------------------------------------------------

Checker = Callable[[ParthoodStructure], Optional[tuple]]


@dataclass(frozen=True)
class AxiomInfo:
    code: AxiomId
    description: str
    cost: int                    # 0 element scans, 1 cubic scans, 2 subset scans
    find_violation: Checker


_CATALOG: list[AxiomInfo] = [
    AxiomInfo(AxiomId.IRR, "nothing is a part of itself", 0, _irr),
    AxiomInfo(AxiomId.ANTIS, "no two distinct objects are parts of each other", 0, _antis),
    AxiomInfo(AxiomId.AS, "parthood is asymmetric", 0, _as),
    AxiomInfo(AxiomId.T, "parthood is transitive", 1, _t),
    AxiomInfo(AxiomId.AC, "the part digraph has no cycles", 1, _ac),
    AxiomInfo(AxiomId.NO_ZERO, "non-degenerate universes have no zero", 0, _no_zero),
    AxiomInfo(AxiomId.EXISTS_EXT, "non-degenerate universes have an exterior pair", 1, _exists_ext),
    AxiomInfo(AxiomId.WSP, "every proper part is supplemented by an exterior part", 1, _wsp),
    AxiomInfo(AxiomId.SSP, "every non-ingrediens is supplemented by an exterior ingrediens", 1, _ssp),
    AxiomInfo(AxiomId.SSP_OV, "overlap-monotone pairs are ingredienses", 1, _ssp_ov),
    AxiomInfo(AxiomId.SSP_EXT, "exteriority-antitone pairs are ingredienses", 1, _ssp_ov),
    AxiomInfo(AxiomId.SSP_PLUS, "supplementation with a greatest remainder", 1, _ssp_plus),
    AxiomInfo(AxiomId.PPP, "sharing all proper parts of a composite forces ingrediens", 1, _ppp),
    AxiomInfo(AxiomId.U_SUM, "a set has at most one sum", 2, _u_sum),
    AxiomInfo(AxiomId.S_SUM, "the only sum of a singleton is its member", 1, _s_sum),
    AxiomInfo(AxiomId.U_SUP, "a set has at most one supremum", 2, _u_sup),
    AxiomInfo(AxiomId.EXT_PP, "composites with the same proper parts are equal", 0, _ext_pp),
    AxiomInfo(AxiomId.EXT_ING, "objects with the same ingredienses are equal", 0, _ext_ing),
    AxiomInfo(AxiomId.EXT_OV, "objects overlapping the same things are equal", 1, _ext_ov),
    AxiomInfo(AxiomId.EXT_EXT, "objects exterior to the same things are equal", 1, _ext_ov),
    AxiomInfo(AxiomId.DOLLAR_EXT, "x sums S iff exteriority to x is exteriority to all of S", 2, _dollar),
    AxiomInfo(AxiomId.DOLLAR_OV, "x sums S iff overlapping x is overlapping some of S", 2, _dollar),
    AxiomInfo(AxiomId.DIAMOND, "a sum and a supremum of the same set are equal", 2, _diamond),
    AxiomInfo(AxiomId.SUM_SUB_SUP, "every sum is a supremum", 2, _sum_sub_sup),
    AxiomInfo(AxiomId.SUP_SUB_SUM, "every supremum is a sum", 2, _sup_sub_sum),
    AxiomInfo(AxiomId.DAGGER, "every supremum of a nonempty set is its sum", 2, _dagger),
    AxiomInfo(AxiomId.DDAGGER, "sum and supremum coincide on nonempty sets", 2, _ddagger),
    AxiomInfo(AxiomId.C_PROD, "overlapping pairs have a product", 1, _c_prod),
    AxiomInfo(AxiomId.C_BSUM, "pairs below a common object have a sum", 1, _c_bsum),
    AxiomInfo(AxiomId.E_BSUM, "every pair has a sum", 1, _e_bsum),
    AxiomInfo(AxiomId.E_SUM, "every nonempty subset has a sum", 2, _e_sum),
    AxiomInfo(AxiomId.UNITY, "a greatest element exists", 0, _unity),
]

CATALOG: dict[AxiomId, AxiomInfo] = {info.code: info for info in _CATALOG}
CATALOG_ORDER: tuple[AxiomId, ...] = tuple(info.code for info in _CATALOG)

assert len(CATALOG) == 32


def _to_witness(s: ParthoodStructure, raw: tuple) -> tuple:
    out = []
    for entry in raw:
        if isinstance(entry, tuple) and entry and entry[0] == "subset":
            out.append(s.subset_from_mask(entry[1]))
        else:
            out.append(s.universe[entry])
    return tuple(out)


def check_axiom(s: ParthoodStructure, a: AxiomLike) -> Verdict:
    code = axiom_id(a)
    raw = CATALOG[code].find_violation(s)
    if raw is None:
        return Verdict(code, True, None)
    return Verdict(code, False, _to_witness(s, raw))


def check_all(s: ParthoodStructure) -> list[Verdict]:
    return [check_axiom(s, code) for code in CATALOG_ORDER]


def holds(s: ParthoodStructure, a: AxiomLike) -> bool:
    return CATALOG[axiom_id(a)].find_violation(s) is None


def satisfies(s: ParthoodStructure, axioms: Iterable[AxiomLike]) -> bool:
    """All of the given axioms hold; cheap axioms are tried first."""
    infos = sorted((CATALOG[axiom_id(a)] for a in axioms), key=lambda i: i.cost)
    return all(info.find_violation(s) is None for info in infos)
