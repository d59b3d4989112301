"""Idempotent integration on finite point sets.

A :class:`SemiringFunction` is a finitely supported map from labelled
points into a semiring; points off the declared support read as the zero.
Functions over a common ring form a semimodule: they can be added
pointwise and scaled by ring elements.  The integral of a function is the
semiring sum of its values, which over max-plus is the supremum and over
min-plus the conventional infimum.  A density function induces an
idempotent measure (sum of the density over a subset) and a weighted
integral, which doubles as the idempotent scalar product of two
functions.

Supports are kept finite and ordered lexicographically so that every
result is exactly computable and serialization is deterministic; sums are
order-independent anyway because addition is commutative.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .semirings import Semiring

__all__ = ["SemiringFunction", "IdempotentMeasure", "integrate", "integrate_against"]


class SemiringFunction:
    """Finitely supported function from point labels into a semiring.

    ``values`` maps each declared point to its value; storing a zero is
    allowed and keeps the point in the support (useful when the support
    doubles as a universe of discourse).
    """

    __slots__ = ("ring", "_values")

    def __init__(self, ring: Semiring, values: Mapping[str, object]):
        checked = {}
        for point in sorted(values):
            if not isinstance(point, str):
                raise TypeError(f"point labels must be strings, got {point!r}")
            checked[point] = ring.require(values[point])
        self.ring = ring
        self._values = checked

    @property
    def support(self) -> tuple[str, ...]:
        """Declared points, in lexicographic order."""
        return tuple(self._values)

    def value(self, point: str):
        """Value at ``point``; zero for undeclared points."""
        return self._values.get(point, self.ring.zero)

    def items(self):
        return self._values.items()

    def _same_ring(self, other):
        if not isinstance(other, SemiringFunction):
            raise TypeError(f"expected a semiring function, got {other!r}")
        if other.ring is not self.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def add(self, other: "SemiringFunction") -> "SemiringFunction":
        """Pointwise addition; supports are unioned, absentees count as zero."""
        self._same_ring(other)
        points = set(self._values) | set(other._values)
        return SemiringFunction(
            self.ring, {p: self.ring.add(self.value(p), other.value(p)) for p in points})

    __add__ = add

    def scale(self, c) -> "SemiringFunction":
        """Multiply every value by the ring element ``c`` on the left."""
        return SemiringFunction(
            self.ring, {p: self.ring.mul(c, v) for p, v in self._values.items()})

    def __eq__(self, other):
        if not isinstance(other, SemiringFunction) or other.ring is not self.ring:
            return False
        points = set(self._values) | set(other._values)
        return all(self.value(p) == other.value(p) for p in points)

    def __hash__(self):
        return hash((id(self.ring), tuple(self._values.items())))

    def __repr__(self):
        body = " ".join(f"{p}:{v!r}" for p, v in self._values.items())
        return f"<{self.ring.name} function {body or '(empty)'}>"

    @classmethod
    def parse(cls, ring: Semiring, text: str) -> "SemiringFunction":
        """Parse the literal form ``"a:1 b:5 c:inf"``."""
        values = {}
        for token in text.split():
            point, sep, raw = token.rpartition(":")
            if not sep or not point:
                raise ValueError(f"bad point:value token {token!r}")
            try:
                values[point] = float(raw)
            except ValueError:
                raise ValueError(f"bad value in token {token!r}") from None
        return cls(ring, values)

    def to_literal(self) -> str:
        return " ".join(f"{p}:{_scalar_text(v)}" for p, v in self._values.items())


def _scalar_text(v) -> str:
    return format(v, "g") if isinstance(v, float) else repr(v)


class IdempotentMeasure:
    """Measure induced by a density: the sum of the density over a subset.

    Over max-plus this is the supremum of the density, the fuzzy-segment
    case is the possibility measure.  The empty set measures zero, and
    measure grows with the subset in the standard order.
    """

    __slots__ = ("density",)

    def __init__(self, density: SemiringFunction):
        if not isinstance(density, SemiringFunction):
            raise TypeError(f"expected a semiring function density, got {density!r}")
        self.density = density

    @property
    def ring(self) -> Semiring:
        return self.density.ring

    def of(self, points: Iterable[str]):
        """Measure of a subset of the density's support."""
        points = list(points)
        unknown = sorted(p for p in points if p not in self.density._values)
        if unknown:
            raise ValueError(f"points outside the support: {', '.join(unknown)}")
        return self.ring.sum(self.density.value(p) for p in points)

    def __repr__(self):
        return f"<measure with density {self.density!r}>"


def integrate(phi: SemiringFunction):
    """Semiring sum of the function's values (zero on an empty support)."""
    return phi.ring.sum(v for _, v in phi.items())


def integrate_against(phi: SemiringFunction, measure: IdempotentMeasure):
    """Integral of ``phi`` against the measure's density: the sum over all
    points of ``phi(x) * density(x)``, i.e. the idempotent scalar product
    of the two functions."""
    psi = measure.density
    phi._same_ring(psi)
    ring = phi.ring
    points = sorted(set(phi.support) | set(psi.support))
    return ring.sum(ring.mul(phi.value(p), psi.value(p)) for p in points)
