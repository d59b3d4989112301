"""Closed intervals in a semiring's standard order, and the weak interval
extension I(S).

An interval ``[lo, hi]`` collects the elements between its bounds in the
standard order of the base semiring, which is not the conventional order
of numbers: a valid min-plus interval stores the numerically larger value
as ``lo``.  Componentwise addition and multiplication of bounds make the
set of intervals a new idempotent semiring, returned by
:func:`interval_extension` as an ordinary :class:`~idemalg.semirings.Semiring`
usable anywhere a semiring is expected (matrices, fuzzy sets, the CLI).

Both operations of every built-in base are monotone for the standard
order, which is what keeps the componentwise bounds ordered and gives
inclusion isotonicity: results of operating on members of two intervals
land inside the interval of the results.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .semirings import Semiring, UnsupportedOperationError

__all__ = ["Interval", "interval_add", "interval_mul", "interval_extension",
           "is_interval_semiring"]


class Interval:
    """Closed interval ``[lo, hi]`` in the standard order of ``base``."""

    __slots__ = ("lo", "hi", "base")

    def __init__(self, lo, hi, base: Semiring):
        base.require(lo)
        base.require(hi)
        if not base.leq(lo, hi):
            raise ValueError(
                f"invalid interval over {base.name}: {lo!r} does not precede {hi!r} "
                f"in the standard order")
        self.lo = lo
        self.hi = hi
        self.base = base

    @classmethod
    def degenerate(cls, value, base: Semiring) -> "Interval":
        """The one-point interval ``[value, value]``."""
        return cls(value, value, base)

    def contains(self, element) -> bool:
        """Whether ``element`` lies between the bounds in the standard order."""
        return self.base.leq(self.lo, element) and self.base.leq(element, self.hi)

    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def __eq__(self, other):
        return (isinstance(other, Interval) and other.base is self.base
                and other.lo == self.lo and other.hi == self.hi)

    def __hash__(self):
        return hash((id(self.base), self.lo, self.hi))

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def _same_base(x: Interval, y: Interval) -> Semiring:
    if not isinstance(x, Interval) or not isinstance(y, Interval):
        raise TypeError(f"expected intervals, got {x!r} and {y!r}")
    if x.base is not y.base:
        raise ValueError(f"interval base mismatch: {x.base.name} vs {y.base.name}")
    return x.base


def interval_add(x: Interval, y: Interval) -> Interval:
    """Componentwise addition of bounds."""
    base = _same_base(x, y)
    return Interval(base.add(x.lo, y.lo), base.add(x.hi, y.hi), base)


def interval_mul(x: Interval, y: Interval) -> Interval:
    """Componentwise multiplication of bounds."""
    base = _same_base(x, y)
    return Interval(base.mul(x.lo, y.lo), base.mul(x.hi, y.hi), base)


def _sample_interval(base: Semiring, rng: random.Random) -> Interval:
    a = base.sample(rng)
    b = base.sample(rng)
    return Interval(a, b, base) if base.leq(a, b) else Interval(b, a, base)


@lru_cache(maxsize=None)
def interval_extension(base: Semiring) -> Semiring:
    """The weak interval extension I(S) of an idempotent semiring.

    Elements are :class:`Interval` values over ``base``; the zero and one
    are the degenerate intervals on the base's zero and one.  The result
    is cached, so repeated calls return the identical semiring object.
    """
    if not base.idempotent:
        raise UnsupportedOperationError(
            f"interval extension needs an idempotent base, {base.name} is not")
    return Semiring(
        name=f"interval({base.name})",
        carrier=f"closed intervals over {base.name}",
        add=interval_add,
        mul=interval_mul,
        zero=Interval(base.zero, base.zero, base),
        one=Interval(base.one, base.one, base),
        contains=lambda x: isinstance(x, Interval) and x.base is base,
        idempotent=True,
        semifield=False,
        sample=lambda rng: _sample_interval(base, rng),
    )


def is_interval_semiring(ring: Semiring) -> bool:
    """Whether ``ring`` is an interval extension of some base semiring."""
    return isinstance(ring.zero, Interval)
