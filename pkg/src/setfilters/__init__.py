"""Executable filters and ultrafilters over finite ground sets."""

from .sets import (
    SCAN_CAP,
    WORD_CAP,
    CapacityError,
    EmptyFamilyError,
    Subset,
    SubsetFamily,
    Universe,
    WidthMismatchError,
    complement,
    intersect_all,
    powerset_iter,
    set_notation,
)
from .checks import (
    AxiomReport,
    Violation,
    has_fip,
    has_fip_oracle,
    is_filter,
    is_filter_base,
    is_free_ultrafilter,
    is_max_filter,
    is_principal,
    is_ultrafilter,
)
from .construct import (
    PreconditionError,
    base_from_family,
    extend_to_ultrafilter,
    fep,
    filter_from_base,
    filter_from_family,
    frechet_finite,
    principal_ultrafilter,
)
from .census import (
    EnumerationResult,
    enumerate_filters,
    enumerate_filters_bruteforce,
    enumerate_ultrafilters,
)
from .cofinite import (
    EMPTY,
    OMEGA,
    CofiniteSet,
    frechet_axiom_suite,
    frechet_contains,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "CapacityError",
    "CofiniteSet",
    "EMPTY",
    "EmptyFamilyError",
    "EnumerationResult",
    "OMEGA",
    "PreconditionError",
    "SCAN_CAP",
    "Subset",
    "SubsetFamily",
    "Universe",
    "Violation",
    "WORD_CAP",
    "WidthMismatchError",
    "base_from_family",
    "complement",
    "enumerate_filters",
    "enumerate_filters_bruteforce",
    "enumerate_ultrafilters",
    "extend_to_ultrafilter",
    "fep",
    "filter_from_base",
    "filter_from_family",
    "frechet_axiom_suite",
    "frechet_contains",
    "frechet_finite",
    "has_fip",
    "has_fip_oracle",
    "is_filter",
    "is_filter_base",
    "is_free_ultrafilter",
    "is_max_filter",
    "is_principal",
    "is_ultrafilter",
    "powerset_iter",
    "principal_ultrafilter",
    "set_notation",
    "intersect_all",
]
