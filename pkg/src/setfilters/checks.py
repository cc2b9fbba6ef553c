"""Decidable checkers for the filter axioms, with counterexample witnesses.

Each checker returns an :class:`AxiomReport`: either a passing verdict or
the first violated axiom in canonical order together with the subsets that
exhibit the violation.  Witness selection is deterministic, so reports are
reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from .sets import (
    SCAN_CAP,
    CapacityError,
    Subset,
    SubsetFamily,
    Universe,
    intersect_all,
    iter_superset_bits,
    powerset_iter,
    require_width,
)

ORACLE_CAP = 20  # has_fip_oracle enumerates 2**len(family) subfamilies


class Violation(Enum):
    """Which axiom a failed check violated."""

    # Unreachable for width-checked bit-vector families, kept so reports
    # cover the full axiom list of the wire format.
    NOT_SUBSET_FAMILY = "not a family of subsets of the ground set"
    EMPTY_MEMBER = "empty set is a member"
    GROUND_SET_MISSING = "ground set is not a member"
    NOT_INTERSECTION_CLOSED = "not closed under pairwise intersection"
    NOT_UPWARD_CLOSED = "not upward closed"
    EMPTY_FAMILY = "family is empty"
    DICHOTOMY_FAILS = "neither the set nor its complement is a member"
    NOT_MAXIMAL = "a strictly larger filter exists"
    NOT_FILTER = "not a filter"
    FINITE_MEMBER = "a finite set is a member"


@dataclass(frozen=True)
class AxiomReport:
    """Verdict plus, on failure, the violated axiom and its witness."""

    verdict: bool
    failed_axiom: Violation | None = None
    witness: tuple[Any, ...] | None = None

    def __post_init__(self) -> None:
        if self.verdict:
            if self.failed_axiom is not None or self.witness is not None:
                raise ValueError("a passing report carries no violation data")
        else:
            if self.failed_axiom is None or self.witness is None:
                raise ValueError("a failing report names its axiom and witness")

    def __bool__(self) -> bool:
        return self.verdict


_PASS = AxiomReport(True)


def _fail(axiom: Violation, witness: tuple[Any, ...]) -> AxiomReport:
    return AxiomReport(False, axiom, witness)


def _check_scan_cap(universe: Universe) -> None:
    if universe.size > SCAN_CAP:
        raise CapacityError(
            f"checking this predicate walks all subsets and is limited to "
            f"universes of size {SCAN_CAP}, got {universe.size}"
        )


def is_filter(family: SubsetFamily, universe: Universe) -> AxiomReport:
    """Filter check: no empty member, ground set present, closed under
    pairwise intersection, and upward closed within the powerset."""
    require_width(family, universe)
    _check_scan_cap(universe)
    n = universe.size
    full = universe.full_bits
    present = family.member_bits
    if 0 in present:
        return _fail(Violation.EMPTY_MEMBER, (universe.empty_set(),))
    if full not in present:
        return _fail(Violation.GROUND_SET_MISSING, (universe.full_set(),))
    members = family.members
    for i, a in enumerate(members):
        for b in members[i:]:
            if a.bits & b.bits not in present:
                return _fail(Violation.NOT_INTERSECTION_CLOSED, (a, b))
    for a in members:
        for sup in iter_superset_bits(a.bits, full):
            if sup not in present:
                return _fail(Violation.NOT_UPWARD_CLOSED, (a, Subset(sup, n)))
    return _PASS


def is_filter_base(family: SubsetFamily, universe: Universe) -> AxiomReport:
    """Filter-base check: nonempty, no empty member, intersection closed."""
    require_width(family, universe)
    present = family.member_bits
    if not present:
        return _fail(Violation.EMPTY_FAMILY, ())
    if 0 in present:
        return _fail(Violation.EMPTY_MEMBER, (universe.empty_set(),))
    members = family.members
    for i, a in enumerate(members):
        for b in members[i:]:
            if a.bits & b.bits not in present:
                return _fail(Violation.NOT_INTERSECTION_CLOSED, (a, b))
    return _PASS


def has_fip(family: SubsetFamily) -> bool:
    """Finite intersection property.

    Every finite subfamily intersects nonempty.  Adding members only
    shrinks an intersection, so the whole-family intersection decides the
    question; the empty family passes by convention.
    """
    return not family.members or intersect_all(family).bits != 0


def has_fip_oracle(family: SubsetFamily) -> bool:
    """Literal finite-intersection check over every nonempty subfamily.

    Exponential in the family size; exists as an independent oracle for
    :func:`has_fip` and bounded to ``ORACLE_CAP`` members.
    """
    count = len(family.members)
    if count > ORACLE_CAP:
        raise CapacityError(
            f"subfamily enumeration is limited to {ORACLE_CAP} members, got {count}"
        )
    members = family.members
    meets = [0] * (1 << count)
    for mask in range(1, 1 << count):
        low = mask & -mask
        rest = mask ^ low
        bits = members[low.bit_length() - 1].bits
        if rest:
            bits &= meets[rest]
        meets[mask] = bits
        if bits == 0:
            return False
    return True


def is_ultrafilter(family: SubsetFamily, universe: Universe) -> AxiomReport:
    """Ultrafilter check: a filter holding, for each subset, the subset or
    its complement."""
    inner = is_filter(family, universe)
    if not inner:
        return _fail(Violation.NOT_FILTER, inner.witness)
    full = universe.full_bits
    present = family.member_bits
    for subset in powerset_iter(universe):
        if subset.bits not in present and full ^ subset.bits not in present:
            return _fail(Violation.DICHOTOMY_FAILS, (subset,))
    return _PASS


def is_max_filter(family: SubsetFamily, universe: Universe) -> AxiomReport:
    """Maximal-filter check: no strictly larger filter exists.

    A filter extends strictly iff some non-member can be adjoined without
    losing the finite intersection property, so the scan looks for the
    first such subset instead of quantifying over all larger filters.
    """
    inner = is_filter(family, universe)
    if not inner:
        return _fail(Violation.NOT_FILTER, inner.witness)
    core = intersect_all(family).bits
    present = family.member_bits
    for subset in powerset_iter(universe):
        if subset.bits not in present and core & subset.bits:
            return _fail(Violation.NOT_MAXIMAL, (subset,))
    return _PASS


def is_free_ultrafilter(family: SubsetFamily, universe: Universe) -> AxiomReport:
    """Free-ultrafilter check: an ultrafilter with no finite member.

    Every member of a bit-vector family is finite, so over these universes
    the verdict is false for every ultrafilter; the scan still tests each
    member literally rather than short-circuiting.
    """
    inner = is_ultrafilter(family, universe)
    if not inner:
        return inner
    for member in family:
        if member.is_finite:
            return _fail(Violation.FINITE_MEMBER, (member,))
    return _PASS


def is_principal(family: SubsetFamily, universe: Universe) -> int | None:
    """Index of the element whose principal family equals ``family``, if any.

    The principal family at ``e`` holds exactly the ``2**(size-1)`` subsets
    containing ``e``, so cardinality plus a shared element pins it down.
    """
    require_width(family, universe)
    if len(family.members) != 1 << (universe.size - 1):
        return None
    for element in range(universe.size):
        if all(member.bits >> element & 1 for member in family.members):
            return element
    return None
