"""Bit-vector ground sets, subsets, and canonical subset families.

Element ``i`` of a :class:`Universe` is bit ``i`` of a :class:`Subset`, so
all set algebra is machine-word arithmetic.  Every value is immutable and
hashable; families iterate in ascending numeric bit-vector order, which is
the canonical order used for witnesses, serialization, and extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

WORD_CAP = 63  # a Subset must fit one machine word
SCAN_CAP = 20  # operations that walk all 2**n subsets refuse larger universes


class CapacityError(ValueError):
    """A universe or family is too large for the requested operation."""


class WidthMismatchError(ValueError):
    """Values built over universes of different sizes were mixed."""


class EmptyFamilyError(ValueError):
    """An operation that needs at least one member got an empty family."""


@dataclass(frozen=True)
class Universe:
    """Named, ordered finite ground set of at most ``WORD_CAP`` elements."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not 1 <= len(self.labels) <= WORD_CAP:
            raise CapacityError(
                f"universe must have between 1 and {WORD_CAP} elements, "
                f"got {len(self.labels)}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("universe labels must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_bits(self) -> int:
        return (1 << self.size) - 1

    def empty_set(self) -> "Subset":
        return Subset(0, self.size)

    def full_set(self) -> "Subset":
        return Subset(self.full_bits, self.size)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown element name {label!r}") from None

    def subset(self, labels: Iterable[str]) -> "Subset":
        """Build the subset holding exactly the named elements."""
        bits = 0
        for label in labels:
            bits |= 1 << self.index_of(label)
        return Subset(bits, self.size)

    def names(self, subset: "Subset") -> tuple[str, ...]:
        """Element names of ``subset``, in universe order."""
        if subset.universe_size != self.size:
            raise WidthMismatchError(
                f"subset of width {subset.universe_size} does not belong to "
                f"a universe of size {self.size}"
            )
        return tuple(self.labels[i] for i in subset)


@dataclass(frozen=True)
class Subset:
    """Subset of a universe, encoded as a fixed-width bit vector."""

    bits: int
    universe_size: int

    def __post_init__(self) -> None:
        if not 1 <= self.universe_size <= WORD_CAP:
            raise CapacityError(
                f"subset width must be between 1 and {WORD_CAP}, "
                f"got {self.universe_size}"
            )
        if not 0 <= self.bits < (1 << self.universe_size):
            raise ValueError(
                f"bits {self.bits:#b} fall outside a width-{self.universe_size} universe"
            )

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe_size and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        """Element indices in ascending order."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __and__(self, other: "Subset") -> "Subset":
        self._check_width(other)
        return Subset(self.bits & other.bits, self.universe_size)

    def __or__(self, other: "Subset") -> "Subset":
        self._check_width(other)
        return Subset(self.bits | other.bits, self.universe_size)

    def issubset(self, other: "Subset") -> bool:
        self._check_width(other)
        return self.bits & other.bits == self.bits

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_finite(self) -> bool:
        """Always true: a bit-vector subset denotes a finite set."""
        return True

    def _check_width(self, other: "Subset") -> None:
        if self.universe_size != other.universe_size:
            raise WidthMismatchError(
                f"cannot combine subsets of widths {self.universe_size} "
                f"and {other.universe_size}"
            )


class SubsetFamily:
    """Deduplicated collection of same-width subsets in canonical order.

    Treat instances as immutable: growing a family goes through
    :meth:`with_member`, which returns a new value.
    """

    __slots__ = ("members", "universe_size", "member_bits")

    members: tuple[Subset, ...]
    universe_size: int
    member_bits: frozenset[int]

    def __init__(self, members: Iterable[Subset], universe_size: int | None = None):
        pool = list(members)
        if universe_size is None:
            if not pool:
                raise ValueError("an empty family needs an explicit universe_size")
            universe_size = pool[0].universe_size
        for member in pool:
            if member.universe_size != universe_size:
                raise WidthMismatchError(
                    f"family of width {universe_size} cannot hold a subset "
                    f"of width {member.universe_size}"
                )
        bits = sorted({member.bits for member in pool})
        self.members = tuple(Subset(b, universe_size) for b in bits)
        self.universe_size = universe_size
        self.member_bits = frozenset(bits)

    @classmethod
    def from_bits(cls, universe_size: int, bits: Iterable[int]) -> "SubsetFamily":
        return cls((Subset(b, universe_size) for b in bits), universe_size)

    def with_member(self, subset: Subset) -> "SubsetFamily":
        return SubsetFamily((*self.members, subset), self.universe_size)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, subset: Subset) -> bool:
        return (
            subset.universe_size == self.universe_size
            and subset.bits in self.member_bits
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetFamily):
            return NotImplemented
        return (
            self.universe_size == other.universe_size
            and self.member_bits == other.member_bits
        )

    def __hash__(self) -> int:
        return hash((self.universe_size, self.member_bits))

    def __repr__(self) -> str:
        shown = [member.bits for member in self.members]
        return f"SubsetFamily(bits={shown}, universe_size={self.universe_size})"


def require_width(family: SubsetFamily, universe: Universe) -> None:
    """Reject a family whose width differs from the universe's size."""
    if family.universe_size != universe.size:
        raise WidthMismatchError(
            f"family of width {family.universe_size} does not belong to "
            f"a universe of size {universe.size}"
        )


def complement(universe: Universe, subset: Subset) -> Subset:
    """Relative complement of ``subset`` within the ground set."""
    if subset.universe_size != universe.size:
        raise WidthMismatchError(
            f"subset of width {subset.universe_size} does not belong to "
            f"a universe of size {universe.size}"
        )
    return Subset(universe.full_bits ^ subset.bits, universe.size)


def intersect_all(family: SubsetFamily) -> Subset:
    """Intersection of every member of a nonempty family."""
    if not family.members:
        raise EmptyFamilyError(
            "intersection of an empty family is not representable; "
            "callers decide the empty-family convention themselves"
        )
    bits = (1 << family.universe_size) - 1
    for member in family.members:
        bits &= member.bits
    return Subset(bits, family.universe_size)


def powerset_iter(universe: Universe) -> Iterator[Subset]:
    """All ``2**size`` subsets in ascending bit-vector order."""
    if universe.size > SCAN_CAP:
        raise CapacityError(
            f"powerset iteration is limited to universes of size {SCAN_CAP}, "
            f"got {universe.size}"
        )
    for bits in range(1 << universe.size):
        yield Subset(bits, universe.size)


def iter_superset_bits(bits: int, full: int) -> Iterator[int]:
    """Bit vectors of all supersets of ``bits`` within ``full``, ascending."""
    current = bits
    while True:
        yield current
        if current == full:
            return
        current = (current + 1) | bits


def set_notation(universe: Universe, subset: Subset) -> str:
    """Human-readable rendering like ``{x,y}``, ``{}`` for the empty set."""
    return "{" + ",".join(universe.names(subset)) + "}"
