"""Constructions on subset families: principal ultrafilters, intersection
and superset closures, and deterministic greedy extension to an ultrafilter.

The closures compose into :func:`fep`, which turns any family with the
finite intersection property into an ultrafilter containing it.  The
greedy scan replaces a choice-based existence argument with a fixed
canonical order, so identical inputs always yield identical ultrafilters.
"""

from __future__ import annotations

from typing import Callable

from .sets import (
    SCAN_CAP,
    CapacityError,
    EmptyFamilyError,
    Subset,
    SubsetFamily,
    Universe,
    intersect_all,
    iter_superset_bits,
    powerset_iter,
    require_width,
)
from .checks import has_fip, is_filter

TraceFn = Callable[[Subset, Subset], None]


class PreconditionError(ValueError):
    """An extension was requested on input that fails its hypotheses."""


def _check_scan_cap(universe: Universe) -> None:
    if universe.size > SCAN_CAP:
        raise CapacityError(
            f"materializing this construction walks all subsets and is "
            f"limited to universes of size {SCAN_CAP}, got {universe.size}"
        )


def principal_ultrafilter(universe: Universe, element: int) -> SubsetFamily:
    """All subsets containing the given element; ``2**(size-1)`` members."""
    if not 0 <= element < universe.size:
        raise ValueError(
            f"element index {element} out of range for a universe of size "
            f"{universe.size}"
        )
    _check_scan_cap(universe)
    bit = 1 << element
    return SubsetFamily.from_bits(
        universe.size, iter_superset_bits(bit, universe.full_bits)
    )


def frechet_finite(universe: Universe) -> SubsetFamily:
    """Subsets whose complement is finite: the whole powerset here.

    Over a finite ground set every complement is finite, so the family
    degenerates to the powerset and contains the empty set; the filter
    check on it fails, which is exactly why cofinite-complement filters
    only live over infinite ground sets (see :mod:`setfilters.cofinite`).
    """
    return SubsetFamily(powerset_iter(universe), universe.size)


def base_from_family(family: SubsetFamily) -> SubsetFamily:
    """Close a nonempty family under pairwise intersection.

    The result equals the set of intersections of all nonempty subfamilies.
    Without the finite intersection property the empty set can appear, and
    the filter-base check on the result then fails.
    """
    if not family.members:
        raise EmptyFamilyError("cannot build a base from an empty family")
    closed = set(family.member_bits)
    work = list(closed)
    while work:
        x = work.pop()
        fresh = []
        for y in closed:
            meet = x & y
            if meet not in closed and meet not in fresh:
                fresh.append(meet)
        closed.update(fresh)
        work.extend(fresh)
    return SubsetFamily.from_bits(family.universe_size, closed)


def filter_from_base(base: SubsetFamily, universe: Universe) -> SubsetFamily:
    """Upward closure: every subset of the ground set containing a member."""
    require_width(base, universe)
    _check_scan_cap(universe)
    full = universe.full_bits
    marked = bytearray(1 << universe.size)
    for member in base:
        for sup in iter_superset_bits(member.bits, full):
            marked[sup] = 1
    return SubsetFamily.from_bits(
        universe.size, (bits for bits, hit in enumerate(marked) if hit)
    )


def filter_from_family(family: SubsetFamily, universe: Universe) -> SubsetFamily:
    """Intersection closure followed by upward closure, in one step.

    Member-for-member identical to
    ``filter_from_base(base_from_family(family), universe)``; when the
    input has the finite intersection property the result passes the
    filter check and contains the input.
    """
    if not family.members:
        raise EmptyFamilyError("cannot extend an empty family")
    return filter_from_base(base_from_family(family), universe)


def extend_to_ultrafilter(
    family: SubsetFamily, universe: Universe, trace: TraceFn | None = None
) -> SubsetFamily:
    """Extend a filter to an ultrafilter by a deterministic greedy scan.

    Subsets are considered in ascending bit-vector order; each is adjoined
    when the family so far keeps the finite intersection property with it,
    and its complement is adjoined otherwise.  The accumulated family's
    intersection decides that test, and a final closure yields the
    ultrafilter.  ``trace`` receives ``(considered, adjoined)`` per step.
    """
    report = is_filter(family, universe)
    if not report:
        raise PreconditionError(
            f"input is not a filter: {report.failed_axiom.value}"
        )
    n = universe.size
    full = universe.full_bits
    chosen = set(family.member_bits)
    core = intersect_all(family).bits
    for bits in range(1 << n):
        keep = bits if core & bits else full ^ bits
        chosen.add(keep)
        core &= keep
        if trace is not None:
            trace(Subset(bits, n), Subset(keep, n))
    return filter_from_family(SubsetFamily.from_bits(n, chosen), universe)


def fep(
    family: SubsetFamily, universe: Universe, trace: TraceFn | None = None
) -> SubsetFamily:
    """Filter extension principle, composed and runnable.

    A nonempty family of subsets with the finite intersection property
    extends to an ultrafilter containing it.  Hypotheses are validated
    eagerly and the failed one is named in the raised error.
    """
    require_width(family, universe)
    if not family.members:
        raise PreconditionError("the family is empty")
    if not has_fip(family):
        raise PreconditionError("finite intersection property fails")
    return extend_to_ultrafilter(
        filter_from_family(family, universe), universe, trace=trace
    )
