"""
Separation axiom service.
Weak separation, the eleven separation axioms (fast checkers and literal
definition-level oracles), witness replay, and the implication lattice.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from uclab.core.config import get_settings
from uclab.core.exceptions import GuardExceededError, InputError
from uclab.models.family import SetFamily
from uclab.schemas.axioms import (
    AxiomId,
    AxiomProfile,
    AxiomVerdict,
    HasseViolation,
    ImpliedRelation,
    Witness
)
from uclab.services.family_service import (
    is_union_closed,
    require_supratopology,
    u_tilde
)
from uclab.utils.bitmask import (
    bit,
    elements_of,
    is_subset,
    iter_labels,
    iter_submasks,
    mask_of,
    popcount
)

logger = logging.getLogger(__name__)
settings = get_settings()

Check = Tuple[bool, Optional[Witness]]

HOLDS: Check = (True, None)


# =============================================================================
# WEAK SEPARATION AND DEPENDENCE
# =============================================================================

def _weak_scan(sets: Iterable[int], first: int, second: int) -> bool:
    """Some O contains `first` and misses `second`."""
    return any(is_subset(first, o) and not o & second for o in sets)


def weakly_separated(family: SetFamily, first: int, second: int) -> bool:
    """
    A ↤ B: some open set contains A and is disjoint from B.

    On union-closed families the union of the opens avoiding B is open, so
    the test reduces to A ⊆ U(F_~B); otherwise every member is scanned.

    Raises:
        InputError: If A or B is not inside the universe
    """
    if not is_subset(first | second, family.universe):
        raise InputError("weak separation arguments must lie in the universe")
    if not is_union_closed(family):
        return _weak_scan(family.sets, first, second)
    avoiding = 0
    found = False
    for member in family:
        if not member & second:
            avoiding |= member
            found = True
    return found and is_subset(first, avoiding)


def find_dependence(family: SetFamily) -> Optional[Tuple[int, int]]:
    """
    Smallest dependent element with its maximal witness set.

    a is dependent when F_a = ∪{F_b : b ≠ a, F_b ⊆ F_a}; if any set S of
    other elements witnesses dependence, the set of all admissible b does.

    Returns:
        (a, S mask) or None when the family is independent
    """
    membership = family.membership()
    labels = list(iter_labels(family.span))
    for a in labels:
        own = membership[a]
        witness, covered = 0, 0
        for b in labels:
            if b != a and is_subset(membership[b], own):
                witness |= bit(b)
                covered |= membership[b]
        if covered == own:
            return a, witness
    return None


# =============================================================================
# FAST CHECKERS
# =============================================================================

class _Space:
    """Precomputed data for the fast checkers."""

    def __init__(self, family: SetFamily):
        self.family = family
        self.universe = family.universe
        self.points = family.elements
        self.u = {x: u_tilde(family, x) for x in self.points}

    def shadow(self, x: int) -> int:
        return self.universe & ~self.u[x] & ~bit(x)

    def pairs(self):
        return combinations(self.points, 2)


def _fast_t0(space: _Space) -> Check:
    seen: Dict[int, int] = {}
    membership = space.family.membership()
    for x in space.points:
        row = membership[x]
        if row in seen:
            return False, Witness(x=seen[row], y=x)
        seen[row] = x
    return HOLDS


def _fast_ti(space: _Space) -> Check:
    found = find_dependence(space.family)
    if found is None:
        return HOLDS
    a, subset = found
    return False, Witness(x=a, s=elements_of(subset))


def _exact_cover(target: int, candidates: List[int]) -> bool:
    """Partition `target` into pairwise-disjoint candidates; lowest element first."""
    if not target:
        return True
    lowest = target & -target
    for candidate in candidates:
        if candidate & lowest and is_subset(candidate, target):
            if _exact_cover(target & ~candidate, candidates):
                return True
    return False


def _fast_tud(space: _Space) -> Check:
    closed_sets = [space.universe & ~o for o in space.family]
    for x in space.points:
        target = space.shadow(x)
        candidates = [c for c in closed_sets if c and is_subset(c, target)]
        if not _exact_cover(target, candidates):
            return False, Witness(x=x)
    return HOLDS


def _fast_td(space: _Space) -> Check:
    for x in space.points:
        if space.u[x] | bit(x) not in space.family:
            return False, Witness(x=x)
    return HOLDS


def _fast_tid(space: _Space) -> Check:
    for x, y in space.pairs():
        if bit(x) | bit(y) | space.u[x] | space.u[y] != space.universe:
            return False, Witness(x=x, y=y)
    return HOLDS


def _fast_tdd(space: _Space) -> Check:
    for part, check in ((AxiomId.TD, _fast_td), (AxiomId.TiD, _fast_tid)):
        holds, witness = check(space)
        if not holds:
            witness.via = part
            return False, witness
    return HOLDS


def _fast_tf(space: _Space) -> Check:
    for x in space.points:
        rest = space.universe & ~bit(x)
        if bit(x) not in space.family and space.u[x] != rest:
            return False, Witness(x=x, s=elements_of(rest))
    return HOLDS


def _fast_tff(space: _Space) -> Check:
    universe = space.universe
    covered = set(space.family.sets) | {universe & ~o for o in space.family}
    if len(covered) == 1 << popcount(universe):
        return HOLDS
    for subset in iter_submasks(universe):
        if subset not in covered:
            return False, Witness(s=elements_of(subset), t=elements_of(universe & ~subset))
    return HOLDS


def _fast_ty(space: _Space) -> Check:
    for x, y in space.pairs():
        if popcount(space.universe & ~(space.u[x] | space.u[y])) > 1:
            return False, Witness(x=x, y=y)
    return HOLDS


def _fast_tys(space: _Space) -> Check:
    for x, y in space.pairs():
        common = space.universe & ~(space.u[x] | space.u[y])
        if common not in (0, bit(x), bit(y)):
            return False, Witness(x=x, y=y)
    return HOLDS


def _fast_t1(space: _Space) -> Check:
    for x in space.points:
        missing = space.universe & ~bit(x) & ~space.u[x]
        if missing:
            # every open set containing y also contains x
            y = elements_of(missing)[0]
            return False, Witness(x=y, y=x)
    return HOLDS


_FAST: Dict[AxiomId, Callable[[_Space], Check]] = {
    AxiomId.T0: _fast_t0,
    AxiomId.TI: _fast_ti,
    AxiomId.TUD: _fast_tud,
    AxiomId.TD: _fast_td,
    AxiomId.TiD: _fast_tid,
    AxiomId.TDD: _fast_tdd,
    AxiomId.TF: _fast_tf,
    AxiomId.TFF: _fast_tff,
    AxiomId.TY: _fast_ty,
    AxiomId.TYS: _fast_tys,
    AxiomId.T1: _fast_t1,
}


# =============================================================================
# LITERAL DEFINITIONS
# =============================================================================

class _NaiveSpace:
    """Definition-level evaluation: every test is a scan over the open sets."""

    def __init__(self, family: SetFamily):
        self.family = family
        self.sets = family.sets
        self.universe = family.universe
        self.points = family.elements

    def ws(self, first: int, second: int) -> bool:
        return _weak_scan(self.sets, first, second)

    def bar(self, x: int) -> int:
        return mask_of(y for y in self.points if not self.ws(bit(y), bit(x)))

    def shadow(self, x: int) -> int:
        return self.bar(x) & ~bit(x)

    def is_closed(self, subset: int) -> bool:
        return self.universe & ~subset in self.family

    def shadow_is_disjoint_union(self, x: int) -> bool:
        target = self.shadow(x)
        closed = [c for c in iter_submasks(target) if c and self.is_closed(c)]
        for size in range(len(closed) + 1):
            for chosen in combinations(closed, size):
                union, disjoint = 0, True
                for c in chosen:
                    if union & c:
                        disjoint = False
                        break
                    union |= c
                if disjoint and union == target:
                    return True
        return False

    def dependence_fails(self, a: int, subset: int) -> bool:
        """Neither clause of independence holds for (a, S)."""
        meets = any(not o & bit(a) and o & subset for o in self.sets)
        avoids = any(o & bit(a) and not o & subset for o in self.sets)
        return not meets and not avoids

    def neither_separates(self, first: int, second: int) -> bool:
        return not self.ws(first, second) and not self.ws(second, first)


def _naive_t0(space: _NaiveSpace) -> Check:
    for x, y in combinations(space.points, 2):
        if space.neither_separates(bit(x), bit(y)):
            return False, Witness(x=x, y=y)
    return HOLDS


def _naive_ti(space: _NaiveSpace) -> Check:
    for a in space.points:
        for subset in iter_submasks(space.universe & ~bit(a)):
            if space.dependence_fails(a, subset):
                return False, Witness(x=a, s=elements_of(subset))
    return HOLDS


def _naive_tud(space: _NaiveSpace) -> Check:
    for x in space.points:
        if not space.shadow_is_disjoint_union(x):
            return False, Witness(x=x)
    return HOLDS


def _naive_td(space: _NaiveSpace) -> Check:
    for x in space.points:
        if not space.is_closed(space.shadow(x)):
            return False, Witness(x=x)
    return HOLDS


def _naive_tid(space: _NaiveSpace) -> Check:
    for x, y in combinations(space.points, 2):
        if space.shadow(x) & space.shadow(y):
            return False, Witness(x=x, y=y)
    return HOLDS


def _naive_tdd(space: _NaiveSpace) -> Check:
    for part, check in ((AxiomId.TD, _naive_td), (AxiomId.TiD, _naive_tid)):
        holds, witness = check(space)
        if not holds:
            witness.via = part
            return False, witness
    return HOLDS


def _naive_tf(space: _NaiveSpace) -> Check:
    for x in space.points:
        for subset in iter_submasks(space.universe & ~bit(x)):
            if space.neither_separates(bit(x), subset):
                return False, Witness(x=x, s=elements_of(subset))
    return HOLDS


def _naive_tff(space: _NaiveSpace) -> Check:
    for first in iter_submasks(space.universe):
        for second in iter_submasks(space.universe & ~first):
            if space.neither_separates(first, second):
                return False, Witness(s=elements_of(first), t=elements_of(second))
    return HOLDS


def _naive_ty(space: _NaiveSpace) -> Check:
    for x, y in combinations(space.points, 2):
        if popcount(space.bar(x) & space.bar(y)) > 1:
            return False, Witness(x=x, y=y)
    return HOLDS


def _naive_tys(space: _NaiveSpace) -> Check:
    for x, y in combinations(space.points, 2):
        if space.bar(x) & space.bar(y) not in (0, bit(x), bit(y)):
            return False, Witness(x=x, y=y)
    return HOLDS


def _naive_t1(space: _NaiveSpace) -> Check:
    for x in space.points:
        for y in space.points:
            if x != y and not space.ws(bit(x), bit(y)):
                return False, Witness(x=x, y=y)
    return HOLDS


_NAIVE: Dict[AxiomId, Callable[[_NaiveSpace], Check]] = {
    AxiomId.T0: _naive_t0,
    AxiomId.TI: _naive_ti,
    AxiomId.TUD: _naive_tud,
    AxiomId.TD: _naive_td,
    AxiomId.TiD: _naive_tid,
    AxiomId.TDD: _naive_tdd,
    AxiomId.TF: _naive_tf,
    AxiomId.TFF: _naive_tff,
    AxiomId.TY: _naive_ty,
    AxiomId.TYS: _naive_tys,
    AxiomId.T1: _naive_t1,
}


# =============================================================================
# PUBLIC CHECKS
# =============================================================================

def check_axiom(family: SetFamily, axiom: AxiomId) -> AxiomVerdict:
    """
    Decide one separation axiom with the efficient procedure.

    Args:
        family: A supratopology (union-closed, ∅ and X members)
        axiom: Axiom to decide

    Returns:
        AxiomVerdict with a counter-witness when the axiom fails
    """
    require_supratopology(family, "check_axiom")
    axiom = AxiomId(axiom)
    holds, witness = _FAST[axiom](_Space(family))
    return AxiomVerdict(axiom=axiom, holds=holds, witness=witness, method="fast")


def check_axiom_naive(family: SetFamily, axiom: AxiomId) -> AxiomVerdict:
    """
    Decide one separation axiom by literal quantifier evaluation.

    Raises:
        GuardExceededError: If the universe exceeds NAIVE_MAX elements
    """
    require_supratopology(family, "check_axiom_naive")
    size = popcount(family.universe)
    if size > settings.NAIVE_MAX:
        raise GuardExceededError("universe size", size, settings.NAIVE_MAX)
    axiom = AxiomId(axiom)
    holds, witness = _NAIVE[axiom](_NaiveSpace(family))
    return AxiomVerdict(axiom=axiom, holds=holds, witness=witness, method="naive")


def axiom_profile(family: SetFamily, naive: bool = False) -> AxiomProfile:
    """All eleven verdicts; shared precomputation for the fast path."""
    if naive:
        return AxiomProfile(verdicts=[check_axiom_naive(family, axiom) for axiom in AxiomId])
    require_supratopology(family, "axiom_profile")
    space = _Space(family)
    verdicts = []
    for axiom in AxiomId:
        holds, witness = _FAST[axiom](space)
        verdicts.append(AxiomVerdict(axiom=axiom, holds=holds, witness=witness))
    return AxiomProfile(verdicts=verdicts)


def replay_witness(family: SetFamily, verdict: AxiomVerdict) -> bool:
    """
    Re-evaluate the definition on a counter-witness.

    Returns:
        True when the witness falsifies the axiom's definition
    """
    if verdict.holds or verdict.witness is None:
        return False
    space = _NaiveSpace(family)
    w = verdict.witness
    axiom = verdict.axiom
    if axiom == AxiomId.TDD:
        axiom = w.via
    if axiom == AxiomId.T0:
        return w.x != w.y and space.neither_separates(bit(w.x), bit(w.y))
    if axiom == AxiomId.TI:
        subset = mask_of(w.s or [])
        return not subset & bit(w.x) and space.dependence_fails(w.x, subset)
    if axiom == AxiomId.TUD:
        return not space.shadow_is_disjoint_union(w.x)
    if axiom == AxiomId.TD:
        return not space.is_closed(space.shadow(w.x))
    if axiom == AxiomId.TiD:
        return w.x != w.y and bool(space.shadow(w.x) & space.shadow(w.y))
    if axiom == AxiomId.TF:
        subset = mask_of(w.s or [])
        return not subset & bit(w.x) and space.neither_separates(bit(w.x), subset)
    if axiom == AxiomId.TFF:
        first, second = mask_of(w.s or []), mask_of(w.t or [])
        return not first & second and space.neither_separates(first, second)
    if axiom == AxiomId.TY:
        return w.x != w.y and popcount(space.bar(w.x) & space.bar(w.y)) > 1
    if axiom == AxiomId.TYS:
        return w.x != w.y and space.bar(w.x) & space.bar(w.y) not in (0, bit(w.x), bit(w.y))
    if axiom == AxiomId.T1:
        return w.x != w.y and not space.ws(bit(w.x), bit(w.y))
    return False


# =============================================================================
# IMPLICATION LATTICE
# =============================================================================

A = AxiomId

IMPLICATIONS: List[Tuple[FrozenSet[AxiomId], AxiomId]] = [
    (frozenset({A.TD}), A.TI),
    (frozenset({A.TI}), A.T0),
    (frozenset({A.TD}), A.TUD),
    (frozenset({A.TFF}), A.TF),
    (frozenset({A.TYS}), A.TY),
    (frozenset({A.TYS}), A.TiD),
    (frozenset({A.T1}), A.TYS),
    (frozenset({A.TY}), A.T0),
    (frozenset({A.TDD}), A.TD),
    (frozenset({A.TDD}), A.TiD),
    (frozenset({A.TD, A.TiD}), A.TDD),
    (frozenset({A.TDD}), A.TI),
    (frozenset({A.TiD, A.TI}), A.TDD),
    (frozenset({A.TiD, A.T0}), A.TYS),
    (frozenset({A.T1}), A.TDD),
    (frozenset({A.T1}), A.TF),
    (frozenset({A.TF}), A.TD),
    (frozenset({A.TF}), A.TUD),
]


def verify_hasse(
    families: Iterable[SetFamily],
    profiles: Optional[Iterable[AxiomProfile]] = None
) -> List[HasseViolation]:
    """
    Check every implication of the lattice on every family.

    Args:
        families: Supratopologies
        profiles: Precomputed profiles aligned with `families` (optional)

    Returns:
        One violation per failing (family, implication)
    """
    violations = []
    profile_iter = iter(profiles) if profiles is not None else None
    for family in families:
        profile = next(profile_iter) if profile_iter is not None else axiom_profile(family)
        holding = profile.holding()
        for premises, conclusion in IMPLICATIONS:
            if premises <= holding and conclusion not in holding:
                logger.error("implication %s => %s fails on %s",
                             sorted(p.value for p in premises), conclusion.value, family)
                violations.append(HasseViolation(
                    family=family.to_lists(),
                    premises=sorted(premises, key=lambda p: p.value),
                    conclusion=conclusion
                ))
    return violations


def lattice_closure() -> Set[Tuple[AxiomId, AxiomId]]:
    """Transitive closure of the single-premise implications, reflexive pairs excluded."""
    edges: Dict[AxiomId, Set[AxiomId]] = {axiom: set() for axiom in AxiomId}
    for premises, conclusion in IMPLICATIONS:
        if len(premises) == 1:
            edges[next(iter(premises))].add(conclusion)
    closure = set()
    for start in AxiomId:
        stack, seen = list(edges[start]), set()
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(edges[node])
        closure |= {(start, node) for node in seen if node != start}
    return closure


def discover_relations(profiles: Iterable[AxiomProfile]) -> List[ImpliedRelation]:
    """
    Implications A ⇒ B valid on every profile but not derivable from the lattice.

    Only premises observed at least once are reported.
    """
    profiles = list(profiles)
    known = lattice_closure()
    found = []
    for premise in AxiomId:
        support = [p for p in profiles if p.holds(premise)]
        if not support:
            continue
        for conclusion in AxiomId:
            if conclusion == premise or (premise, conclusion) in known:
                continue
            if all(p.holds(conclusion) for p in support):
                found.append(ImpliedRelation(
                    premise=premise, conclusion=conclusion, support=len(support)
                ))
    return found
