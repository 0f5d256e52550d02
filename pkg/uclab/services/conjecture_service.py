"""
Conjecture service.
Frankl, Salzborn and Poonen checkers, the generalized chain certificate,
a-problematic sets, the binomial inequality and the trivial-parent probe.

CONVENTIONS:
- "half" comparisons are 2·count against the family size, exact integers
- excluded families (∅ and {∅}) count as holding
- counterexamples are logged at ERROR before they are returned or raised
"""

import logging
from math import comb
from typing import List, Optional

from uclab.core.exceptions import (
    ChainFailure,
    ContractViolationError,
    GuardExceededError,
    InputError,
    InvariantBreach
)
from uclab.models.family import SetFamily
from uclab.schemas.axioms import AxiomId
from uclab.schemas.conjectures import (
    ChainCertificate,
    FranklReport,
    FranklVerdict,
    PoonenOutcome,
    PoonenProbe,
    PowerSetDualProfile,
    SalzbornReport,
    SalzbornVerdict
)
from uclab.services.dual_service import dual
from uclab.services.family_service import (
    describe,
    irreducibles,
    is_union_closed,
    max_frequency,
    power_set,
    require_normalized,
    require_union_closed,
    subtract,
    u_tilde
)
from uclab.utils.bitmask import bit, elements_of, is_subset, iter_labels, popcount, set_key

logger = logging.getLogger(__name__)

# dual of P([n]) lives on 2^n − 1 labels
POWER_SET_DUAL_MAX = 6


# =============================================================================
# FRANKL
# =============================================================================

def is_excluded(family: SetFamily) -> bool:
    """F = ∅ or F = {∅}."""
    return not family.span


def frankl_check(family: SetFamily) -> FranklReport:
    """
    Frankl verdict of a family from its most frequent element.

    Returns:
        FranklReport(best, freq, total, verdict); excluded for ∅ and {∅}
    """
    total = len(family)
    if is_excluded(family):
        return FranklReport(total=total, verdict=FranklVerdict.EXCLUDED)
    best, freq = max_frequency(family)
    if 2 * freq > total:
        verdict = FranklVerdict.STRICT
    elif 2 * freq == total:
        verdict = FranklVerdict.SHARP
    else:
        verdict = FranklVerdict.FAILS
        logger.error("Frankl fails on %s", describe(family))
    return FranklReport(best=best, freq=freq, total=total, verdict=verdict)


def is_power_set(family: SetFamily) -> bool:
    """∅ and every singleton of U(F) present, union-closed and |F| = 2^|U(F)|."""
    span = family.span
    return (
        family.has_empty
        and len(family) == 1 << popcount(span)
        and all(bit(label) in family for label in iter_labels(span))
        and is_union_closed(family)
    )


def poonen_sharp_check(family: SetFamily) -> PoonenOutcome:
    """
    Sharp Frankl families should be power sets.

    Raises:
        ContractViolationError: If F is not union-closed or is excluded
    """
    require_union_closed(family, "poonen_sharp_check")
    if is_excluded(family):
        raise ContractViolationError("poonen_sharp_check is undefined on ∅ and {∅}")
    if frankl_check(family).verdict != FranklVerdict.SHARP:
        return PoonenOutcome.NOT_SHARP
    if is_power_set(family):
        return PoonenOutcome.SHARP_AND_POWERSET
    logger.error("sharp family that is not a power set: %s", describe(family))
    return PoonenOutcome.SHARP_NOT_POWERSET


# =============================================================================
# SALZBORN
# =============================================================================

def salzborn_check(family: SetFamily) -> SalzbornReport:
    """
    A normalized family has an irreducible of size at least half its size.

    Args:
        family: Normalized N

    Returns:
        SalzbornReport with the first largest irreducible as witness
    """
    require_normalized(family, "salzborn_check")
    total = len(family)
    generators = irreducibles(family)
    if not generators:
        return SalzbornReport(verdict=SalzbornVerdict.EXCLUDED, total=total)
    size = max(popcount(mask) for mask in generators)
    witness = next(mask for mask in generators if popcount(mask) == size)
    if 2 * size >= total:
        verdict = SalzbornVerdict.HOLDS
    else:
        verdict = SalzbornVerdict.FAILS
        logger.error("Salzborn fails on %s", describe(family))
    return SalzbornReport(
        verdict=verdict,
        witness=elements_of(witness),
        size=size,
        total=total,
        sharp=2 * size == total
    )


def salzborn_transfer_check(family: SetFamily) -> bool:
    """
    Frankl on an independent F agrees with Salzborn on F*, and with Frankl on J(F*)*.

    Raises:
        ContractViolationError: If F is not union-closed and independent
    """
    # Import here to avoid circular imports
    from uclab.services.dual_service import dual_indexed, index_irreducibles
    from uclab.services.family_service import is_independent

    require_union_closed(family, "salzborn_transfer_check")
    if not is_independent(family):
        raise ContractViolationError("salzborn_transfer_check requires an independent family")
    if not family.has_empty:
        family = SetFamily(family.sets + (0,))
        logger.warning("salzborn_transfer_check: ∅ adjoined to the input family")
    dual_family = dual(family)
    salzborn = salzborn_check(dual_family).holds
    frankl = frankl_check(family).holds
    generators = irreducibles(dual_family)
    rebuilt = dual_indexed(index_irreducibles(generators)) if generators else SetFamily([0])
    return frankl == salzborn and frankl_check(rebuilt).holds == salzborn


# =============================================================================
# GENERALIZED CHAIN
# =============================================================================

def generalized_chain(family: SetFamily) -> ChainCertificate:
    """
    Greedy chain S_1 ⊆ ... ⊆ S_n with at least |F|/2^k members containing S_k.

    At each step the members containing S_k are taken, S_k is subtracted and
    the most frequent element of the quotient extends the chain.

    Raises:
        ContractViolationError: If F is not union-closed or is excluded
        ChainFailure: If a quotient has no element in half of its sets
    """
    require_union_closed(family, "generalized_chain")
    if is_excluded(family):
        raise ContractViolationError("generalized_chain is undefined on ∅ and {∅}")
    total = len(family)
    current = 0
    chain: List[List[int]] = []
    counts: List[int] = []
    for step in range(1, popcount(family.span) + 1):
        containing = SetFamily(m for m in family if is_subset(current, m))
        quotient = subtract(containing, current)
        best, freq = max_frequency(quotient)
        if 2 * freq < len(quotient):
            logger.error("chain step %d: quotient %s has no half-frequency element",
                         step, describe(quotient))
            raise ChainFailure(step, quotient.to_lists())
        current |= bit(best)
        chain.append(elements_of(current))
        counts.append(freq)
        if freq << step < total:
            raise InvariantBreach(f"chain count {freq} below |F|/2^{step}", family.to_lists())
    return ChainCertificate(chain=chain, counts=counts, total=total)


def verify_chain(family: SetFamily, certificate: ChainCertificate) -> bool:
    """Recount members containing each S_k and re-check nesting and the bound."""
    if certificate.total != len(family) or len(certificate.chain) != len(certificate.counts):
        return False
    previous = 0
    for step, (labels, count) in enumerate(zip(certificate.chain, certificate.counts), start=1):
        mask = 0
        for label in labels:
            mask |= bit(label)
        if popcount(mask) != step or not is_subset(previous, mask):
            return False
        if sum(1 for m in family if is_subset(mask, m)) != count:
            return False
        if count << step < len(family):
            return False
        previous = mask
    return True


# =============================================================================
# PROBLEMATIC SETS AND COUNTING
# =============================================================================

def problematic_sets(family: SetFamily, a: int) -> SetFamily:
    """
    Π_a = {O ∈ F_~a : O ∪ {a} ∈ F}.

    Raises:
        InputError: If a is not in U(F)
        InvariantBreach: If Π_a is non-empty but misses Ũa
    """
    if not isinstance(a, int) or a < 1 or not family.span & bit(a):
        raise InputError(f"element {a} is not in U(F)")
    mask = bit(a)
    result = SetFamily(
        (m for m in family if not m & mask and m | mask in family),
        family.universe
    )
    if len(result) and u_tilde(family, a) not in result:
        raise InvariantBreach(f"Ũ{a} is not {a}-problematic", family.to_lists())
    return result


def tff_size_bound_holds(family: SetFamily) -> bool:
    """A T_FF space on n points has at least 2^(n−1) open sets."""
    # Import here to avoid circular imports
    from uclab.services.axiom_service import check_axiom

    if not check_axiom(family, AxiomId.TFF).holds:
        return True
    n = popcount(family.universe)
    return n == 0 or len(family) >= 1 << (n - 1)


def binomial_lemma_check(n_lo: int, n_hi: int) -> bool:
    """
    2^(k+1) − 1 ≤ Σ_{s<k} C(n, s) for n_lo ≤ n ≤ n_hi and 2 ≤ k ≤ n/2.

    Raises:
        InputError: Unless 6 ≤ n_lo ≤ n_hi ≤ 64
    """
    if not 6 <= n_lo <= n_hi <= 64:
        raise InputError("binomial_lemma_check needs 6 ≤ n_lo ≤ n_hi ≤ 64")
    for n in range(n_lo, n_hi + 1):
        partial = 1 + n
        for k in range(2, n // 2 + 1):
            if (1 << (k + 1)) - 1 > partial:
                logger.error("binomial inequality fails at n=%d k=%d", n, k)
                return False
            partial += comb(n, k)
    return True


# =============================================================================
# TRIVIAL-PARENT ARITHMETIC AND POWER-SET DUALS
# =============================================================================

def _max_irreducible(family: SetFamily) -> int:
    generators = irreducibles(family)
    return max((popcount(mask) for mask in generators), default=0)


def poonen_equiv_probe(family: SetFamily, steps: Optional[int] = None) -> PoonenProbe:
    """
    Iterate trivial parents and track the largest irreducible.

    Each parent adds one set and one element to every irreducible, so after
    r steps the sizes are λ + r and |N| + r. With r = n − 2λ + 1 the ratio
    reaches exactly one half.

    Args:
        family: Normalized N on n elements
        steps: Number of parents; the balancing count when omitted

    Raises:
        InputError: If steps is negative or no balancing count exists
    """
    # Import here to avoid circular imports
    from uclab.services.reduction_service import trivial_parent_normalized

    require_normalized(family, "poonen_equiv_probe")
    n = popcount(family.span)
    largest = _max_irreducible(family)
    balancing = n - 2 * largest + 1
    if steps is None:
        if balancing < 0:
            raise InputError("the largest irreducible already exceeds half the family")
        steps = balancing
    if steps < 0:
        raise InputError("steps must be non-negative")

    current = family
    for _ in range(steps):
        current = trivial_parent_normalized(current)
    final_size = len(current)
    final_largest = _max_irreducible(current)
    arithmetic = final_size == len(family) + steps and final_largest == largest + steps
    balanced = None
    if steps == balancing:
        balanced = 2 * final_largest == final_size
    return PoonenProbe(
        n=n,
        max_irreducible=largest,
        steps=steps,
        balancing_steps=balancing,
        final_size=final_size,
        final_max_irreducible=final_largest,
        arithmetic_holds=arithmetic,
        balanced=balanced
    )


def power_set_dual_profile(n: int) -> PowerSetDualProfile:
    """
    Size classes of P([n])* against C(n, k) sets of size 2^n − 2^(n−k).

    Raises:
        GuardExceededError: If the dual would need more than 64 labels
    """
    # Import here to avoid circular imports
    from uclab.services.reduction_service import size_class_decomposition

    if n < 1:
        raise InputError("power_set_dual_profile needs n ≥ 1")
    if n > POWER_SET_DUAL_MAX:
        raise GuardExceededError("n", n, POWER_SET_DUAL_MAX)
    dual_family = dual(power_set(n))
    expected = sorted([(1 << n) - (1 << (n - k)), comb(n, k)] for k in range(n + 1))
    generators = sorted(irreducibles(dual_family), key=set_key)
    return PowerSetDualProfile(
        n=n,
        size_classes=[list(item) for item in size_class_decomposition(dual_family)],
        expected_classes=expected,
        irreducible_sizes=[popcount(mask) for mask in generators]
    )
