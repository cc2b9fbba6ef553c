"""Finite-cofinite set algebra over the natural numbers.

A value is either a finite set of naturals or the complement of one, so
the algebra is closed under complement, intersection, and union.  The
cofinite values are exactly the members of the cofinite-complement filter
over the naturals, which makes that filter's axioms executable here even
though the ground set is infinite.  Sets that are neither finite nor
cofinite (the even numbers, say) are not representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .checks import AxiomReport, Violation

FINITE = "finite"
COFINITE = "cofinite"

SUPPORT_BOUND = 1 << 32  # support elements are desk-scale naturals


@dataclass(frozen=True)
class CofiniteSet:
    """A finite set of naturals (``mode="finite"``) or the naturals minus
    one (``mode="cofinite"``); ``support`` lists the finite side."""

    support: tuple[int, ...]
    mode: str = FINITE

    def __post_init__(self) -> None:
        if self.mode not in (FINITE, COFINITE):
            raise ValueError(f"mode must be {FINITE!r} or {COFINITE!r}, got {self.mode!r}")
        support = tuple(sorted(set(self.support)))
        for value in support:
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"support elements must be integers, got {value!r}")
            if not 0 <= value < SUPPORT_BOUND:
                raise ValueError(
                    f"support elements must be naturals below {SUPPORT_BOUND}, got {value}"
                )
        object.__setattr__(self, "support", support)

    @classmethod
    def finite(cls, elements: Iterable[int] = ()) -> "CofiniteSet":
        return cls(tuple(elements), FINITE)

    @classmethod
    def cofinite(cls, excluded: Iterable[int] = ()) -> "CofiniteSet":
        return cls(tuple(excluded), COFINITE)

    @property
    def is_cofinite(self) -> bool:
        return self.mode == COFINITE

    @property
    def is_empty(self) -> bool:
        return self.mode == FINITE and not self.support

    def __contains__(self, value: int) -> bool:
        return (value in self.support) != self.is_cofinite

    def complement(self) -> "CofiniteSet":
        """Mode flips, support stays; an involution."""
        return CofiniteSet(self.support, COFINITE if self.mode == FINITE else FINITE)

    def intersect(self, other: "CofiniteSet") -> "CofiniteSet":
        mine, theirs = set(self.support), set(other.support)
        if not self.is_cofinite and not other.is_cofinite:
            return CofiniteSet.finite(mine & theirs)
        if not self.is_cofinite:
            return CofiniteSet.finite(mine - theirs)
        if not other.is_cofinite:
            return CofiniteSet.finite(theirs - mine)
        return CofiniteSet.cofinite(mine | theirs)

    def union(self, other: "CofiniteSet") -> "CofiniteSet":
        return self.complement().intersect(other.complement()).complement()

    def issubset(self, other: "CofiniteSet") -> bool:
        return self.intersect(other) == self

    __and__ = intersect
    __or__ = union
    __invert__ = complement

    def __repr__(self) -> str:
        return f"CofiniteSet({list(self.support)!r}, {self.mode!r})"


EMPTY = CofiniteSet.finite()
OMEGA = CofiniteSet.cofinite()


def frechet_contains(subset: CofiniteSet) -> bool:
    """Membership in the cofinite-complement filter: is the complement finite?"""
    return subset.is_cofinite


def _canonical(sets: Iterable[CofiniteSet]) -> list[CofiniteSet]:
    return sorted(set(sets), key=lambda s: (s.mode != FINITE, s.support))


def frechet_axiom_suite(samples: Iterable[CofiniteSet]) -> AxiomReport:
    """Run the filter axioms for the cofinite-complement filter on a sample.

    The sample is closed under pairwise intersection first, then checked:
    the empty set is excluded, the whole ground set included, membership is
    closed under intersection and supersets, and no finite set is a member.
    None of these can fail in this algebra; the suite exists to exercise
    them on concrete values and report the first violation if one ever
    appeared.
    """
    pool = _canonical(samples)
    closed = _canonical(
        pool + [s.intersect(t) for i, s in enumerate(pool) for t in pool[i:]]
    )
    if frechet_contains(EMPTY):
        return AxiomReport(False, Violation.EMPTY_MEMBER, (EMPTY,))
    if not frechet_contains(OMEGA):
        return AxiomReport(False, Violation.GROUND_SET_MISSING, (OMEGA,))
    members = [s for s in closed if frechet_contains(s)]
    for i, s in enumerate(members):
        for t in members[i:]:
            if not frechet_contains(s.intersect(t)):
                return AxiomReport(False, Violation.NOT_INTERSECTION_CLOSED, (s, t))
    for s in members:
        for t in closed:
            if s.issubset(t) and not frechet_contains(t):
                return AxiomReport(False, Violation.NOT_UPWARD_CLOSED, (s, t))
    for s in closed:
        if not s.is_cofinite and frechet_contains(s):
            return AxiomReport(False, Violation.FINITE_MEMBER, (s,))
    return AxiomReport(True)
