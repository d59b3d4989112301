"""Generalized fuzzy sets: semiring-valued membership functions on a
finite universe.

With the fuzzy segment [0, 1] as the value semiring these are classical
fuzzy sets with max-union and min-intersection; membership confined to
{zero, one} recovers crisp sets with the classical operations; a lattice
semiring (fuzzy segment, max-min) gives L-fuzzy sets; interval-valued
membership over I(S) gives interval fuzzy sets.  Possibility of a set
against a density is the weighted idempotent integral of its membership.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .analysis import IdempotentMeasure, SemiringFunction, integrate_against
from .intervals import Interval, interval_extension
from .semirings import FUZZY_SEGMENT, Semiring, UnsupportedOperationError

__all__ = ["FuzzySet", "interval_fuzzy", "fuzzy_semiring", "possibility"]


class FuzzySet:
    """A membership function from a fixed finite universe into a semiring.

    The universe is the declared support of the underlying function;
    points with zero membership still belong to the universe.  Set
    operations require both operands to live on the same ring and
    universe.
    """

    __slots__ = ("membership",)

    def __init__(self, membership: SemiringFunction):
        if not isinstance(membership, SemiringFunction):
            raise TypeError(f"expected a semiring function, got {membership!r}")
        self.membership = membership

    @classmethod
    def from_values(cls, ring: Semiring, values: Mapping[str, object]) -> "FuzzySet":
        return cls(SemiringFunction(ring, values))

    @classmethod
    def crisp(cls, ring: Semiring, universe: Iterable[str], members: Iterable[str]) -> "FuzzySet":
        """Crisp set: membership one on ``members``, zero elsewhere."""
        universe = set(universe)
        members = set(members)
        stray = members - universe
        if stray:
            raise ValueError(f"members outside the universe: {', '.join(sorted(stray))}")
        return cls(SemiringFunction(
            ring, {p: (ring.one if p in members else ring.zero) for p in universe}))

    @property
    def ring(self) -> Semiring:
        return self.membership.ring

    @property
    def universe(self) -> tuple[str, ...]:
        return self.membership.support

    def grade(self, point: str):
        """Membership grade of ``point``."""
        return self.membership.value(point)

    def _compatible(self, other: "FuzzySet"):
        if not isinstance(other, FuzzySet):
            raise TypeError(f"expected a fuzzy set, got {other!r}")
        if other.ring is not self.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")
        if other.universe != self.universe:
            raise ValueError(f"universe mismatch: {self.universe} vs {other.universe}")

    def union(self, other: "FuzzySet") -> "FuzzySet":
        """Pointwise semiring addition (Zadeh's max-union over [0, 1])."""
        self._compatible(other)
        ring = self.ring
        return FuzzySet(SemiringFunction(
            ring, {p: ring.add(self.grade(p), other.grade(p)) for p in self.universe}))

    __or__ = union

    def intersection(self, other: "FuzzySet") -> "FuzzySet":
        """Pointwise semiring multiplication (Zadeh's min-intersection over [0, 1])."""
        self._compatible(other)
        ring = self.ring
        return FuzzySet(SemiringFunction(
            ring, {p: ring.mul(self.grade(p), other.grade(p)) for p in self.universe}))

    __and__ = intersection

    def is_crisp(self) -> bool:
        """Whether every grade is the ring's zero or one."""
        return all(v == self.ring.zero or v == self.ring.one
                   for _, v in self.membership.items())

    def members(self) -> frozenset[str]:
        """Points with full membership; the classical set a crisp set encodes."""
        return frozenset(p for p, v in self.membership.items() if v == self.ring.one)

    def complement(self) -> "FuzzySet":
        """Grade-reversing complement ``1 - v``.

        A convenience for the classical fuzzy segment only: a general
        idempotent semiring carries no negation, so no other ring gets a
        complement.
        """
        if self.ring is not FUZZY_SEGMENT:
            raise UnsupportedOperationError(
                f"complement is only defined over the fuzzy segment, not {self.ring.name}")
        return FuzzySet(SemiringFunction(
            self.ring, {p: 1.0 - v for p, v in self.membership.items()}))

    def possibility(self, distribution: IdempotentMeasure):
        """Possibility of this set under a possibility distribution.

        The weighted integral of the membership against the distribution's
        density; for a crisp set over [0, 1] this is the supremum of the
        density over the set's members.
        """
        if distribution.ring is not self.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {distribution.ring.name}")
        if distribution.density.support != self.universe:
            raise ValueError("the distribution must be defined on the set's universe")
        return integrate_against(self.membership, distribution)

    def __eq__(self, other):
        return (isinstance(other, FuzzySet) and other.ring is self.ring
                and other.universe == self.universe
                and other.membership == self.membership)

    def __hash__(self):
        return hash(self.membership)

    def __repr__(self):
        return f"<fuzzy set over {self.ring.name}: {self.membership.to_literal() or '(empty)'}>"


def possibility(a: FuzzySet, distribution: IdempotentMeasure):
    """Module-level alias for :meth:`FuzzySet.possibility`."""
    return a.possibility(distribution)


def interval_fuzzy(lower: FuzzySet, upper: FuzzySet) -> FuzzySet:
    """Bundle two ordered membership functions into an interval fuzzy set.

    ``lower`` must precede ``upper`` pointwise in the standard order; the
    result lives over the interval extension of their common ring, with
    membership ``[lower(p), upper(p)]`` at each point.
    """
    lower._compatible(upper)
    base = lower.ring
    ext = interval_extension(base)
    values = {}
    for p in lower.universe:
        lo, hi = lower.grade(p), upper.grade(p)
        if not base.leq(lo, hi):
            raise ValueError(
                f"membership bounds out of order at point {p!r}: {lo!r} does not precede {hi!r}")
        values[p] = Interval(lo, hi, base)
    return FuzzySet(SemiringFunction(ext, values))


def fuzzy_semiring(base: Semiring, universe: Iterable[str]) -> Semiring:
    """The semiring of all fuzzy sets on a fixed universe, with union as
    addition and intersection as multiplication.

    Zero is the empty set, one the whole universe at full grade.  Mostly
    useful for property checks: the pointwise laws inherit from the base.
    """
    if not base.idempotent:
        raise UnsupportedOperationError(
            f"fuzzy sets over a non-idempotent ring ({base.name}) do not form an idempotent semiring")
    universe = tuple(sorted(set(universe)))
    if not universe:
        raise ValueError("the universe must not be empty")

    def sample(rng):
        return FuzzySet(SemiringFunction(base, {p: base.sample(rng) for p in universe}))

    return Semiring(
        name=f"fuzzy-sets({base.name})",
        carrier=f"functions from a {len(universe)}-point universe into {base.name}",
        add=FuzzySet.union,
        mul=FuzzySet.intersection,
        zero=FuzzySet.from_values(base, {p: base.zero for p in universe}),
        one=FuzzySet.from_values(base, {p: base.one for p in universe}),
        contains=lambda x: (isinstance(x, FuzzySet) and x.ring is base
                            and x.universe == universe),
        idempotent=True,
        semifield=False,
        sample=sample,
    )
