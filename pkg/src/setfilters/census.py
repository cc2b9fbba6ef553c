"""Exhaustive enumeration of filters and ultrafilters over small universes.

The fast path uses the generated-filter characterization: over a finite
ground set every filter is the superset closure of its (nonempty) overall
intersection, so filters biject with nonempty subsets.  A doubly
exponential brute-force sweep over all subset families exists as the
independent oracle that validates the characterization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sets import CapacityError, SubsetFamily, Universe, iter_superset_bits, powerset_iter
from .checks import is_filter
from .construct import principal_ultrafilter

CENSUS_CAP = 10  # characterized enumeration materializes up to 2**(n-1)-member families
BRUTE_CAP = 3  # brute force sweeps all 2**(2**n) subset families

FILTERS = "filters"
ULTRAFILTERS = "ultrafilters"


@dataclass(frozen=True)
class EnumerationResult:
    """All families of one kind over one universe, canonically ordered."""

    universe_size: int
    kind: str
    families: tuple[SubsetFamily, ...]

    @property
    def count(self) -> int:
        return len(self.families)


def family_key(family: SubsetFamily) -> tuple[int, ...]:
    """Canonical sort key: the ascending member bit vectors."""
    return tuple(member.bits for member in family.members)


def _check_cap(universe: Universe, cap: int) -> None:
    if universe.size > cap:
        raise CapacityError(
            f"enumeration is limited to universes of size {cap}, "
            f"got {universe.size}"
        )


def enumerate_filters(universe: Universe) -> EnumerationResult:
    """All ``2**size - 1`` filters: superset closures of nonempty subsets."""
    _check_cap(universe, CENSUS_CAP)
    n = universe.size
    full = universe.full_bits
    families = [
        SubsetFamily.from_bits(n, iter_superset_bits(bottom, full))
        for bottom in range(1, full + 1)
    ]
    families.sort(key=family_key)
    return EnumerationResult(n, FILTERS, tuple(families))


def enumerate_filters_bruteforce(universe: Universe) -> EnumerationResult:
    """Independent oracle: test the filter axioms on every subset family."""
    _check_cap(universe, BRUTE_CAP)
    n = universe.size
    subsets = list(powerset_iter(universe))
    families = []
    for picks in range(1 << len(subsets)):
        family = SubsetFamily(
            (s for i, s in enumerate(subsets) if picks >> i & 1), n
        )
        if is_filter(family, universe):
            families.append(family)
    families.sort(key=family_key)
    return EnumerationResult(n, FILTERS, tuple(families))


def enumerate_ultrafilters(universe: Universe) -> EnumerationResult:
    """All ultrafilters: exactly the principal family of each element."""
    _check_cap(universe, CENSUS_CAP)
    families = [
        principal_ultrafilter(universe, element)
        for element in range(universe.size)
    ]
    families.sort(key=family_key)
    return EnumerationResult(universe.size, ULTRAFILTERS, tuple(families))
