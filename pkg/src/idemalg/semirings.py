"""Idempotent semirings and Maslov dequantization.

A :class:`Semiring` bundles a carrier with two operations, addition and
multiplication, together with their neutral elements.  All built-in
semirings except plain nonnegative arithmetic have idempotent addition
(``x + x = x``), which induces the standard partial order used throughout
the library: ``a`` precedes ``b`` exactly when ``a + b = b``.

Elements are plain Python floats; the infinities are IEEE infinities, so
absorption laws like ``max(-inf, x) = x`` hold bit-exactly.  Semirings and
their elements are immutable values, safe to share across threads.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Iterable

__all__ = [
    "Semiring",
    "CarrierError",
    "UnsupportedOperationError",
    "MAX_PLUS",
    "MIN_PLUS",
    "BOOLE",
    "FUZZY_SEGMENT",
    "MAX_MIN",
    "NONNEG_ARITH",
    "SEMIRINGS",
    "lookup",
    "dequantized_add",
    "dequantize",
    "check_axioms",
    "AxiomCheck",
    "AxiomReport",
]


class CarrierError(ValueError):
    """An element does not belong to a semiring's carrier."""


class UnsupportedOperationError(TypeError):
    """An operation was requested that the semiring does not support,
    e.g. the standard order on a non-idempotent semiring."""


class Semiring:
    """A semiring (S, +, *, zero, one) described by its operations.

    ``add`` and ``mul`` are the raw binary operations on carrier elements;
    ``contains`` decides carrier membership; ``invert`` (optional) maps a
    nonzero element to its multiplicative inverse when the semiring is a
    semifield; ``sample`` (optional) draws a random carrier element from a
    ``random.Random``.

    The public :meth:`add` / :meth:`mul` methods validate their operands
    and, for multiplication, branch on the zero before the raw operation
    runs, so ``zero * x = zero`` holds unconditionally (in max-plus this is
    what keeps ``-inf + inf`` from ever being evaluated).
    """

    __slots__ = ("name", "carrier", "zero", "one", "idempotent", "semifield",
                 "_add", "_mul", "_contains", "_invert", "_sample")

    def __init__(self, name, carrier, add, mul, zero, one, contains,
                 idempotent, semifield=False, invert=None, sample=None):
        self.name = name
        self.carrier = carrier
        self.zero = zero
        self.one = one
        self.idempotent = idempotent
        self.semifield = semifield
        self._add = add
        self._mul = mul
        self._contains = contains
        self._invert = invert
        self._sample = sample

    def __repr__(self):
        return f"<Semiring {self.name}>"

    def contains(self, x) -> bool:
        """Whether ``x`` is a carrier element."""
        return self._contains(x)

    __contains__ = contains

    def require(self, x):
        """Return ``x`` unchanged, raising :class:`CarrierError` if it is
        not a carrier element."""
        if not self._contains(x):
            raise CarrierError(f"{x!r} is not an element of {self.name} ({self.carrier})")
        return x

    def add(self, a, b):
        """Semiring addition ``a + b``."""
        self.require(a)
        self.require(b)
        return self._add(a, b)

    def mul(self, a, b):
        """Semiring multiplication ``a * b``; the zero absorbs."""
        self.require(a)
        self.require(b)
        if a == self.zero or b == self.zero:
            return self.zero
        return self._mul(a, b)

    def sum(self, items: Iterable):
        """Fold ``items`` with addition, starting from the zero."""
        return reduce(self.add, items, self.zero)

    def leq(self, a, b) -> bool:
        """Standard partial order: ``a`` precedes ``b`` iff ``a + b = b``.

        Only defined for idempotent semirings; under it the zero precedes
        everything.  Note that for min-plus this order is the reverse of
        the conventional order on numbers.
        """
        if not self.idempotent:
            raise UnsupportedOperationError(
                f"the standard order requires idempotent addition; {self.name} is not idempotent")
        return self.add(a, b) == b

    def invert(self, x):
        """Multiplicative inverse of a nonzero element (semifields only)."""
        if self._invert is None:
            raise UnsupportedOperationError(f"{self.name} has no multiplicative inverses")
        self.require(x)
        if x == self.zero:
            raise CarrierError(f"the zero of {self.name} has no inverse")
        return self._invert(x)

    def sample(self, rng: random.Random):
        """Draw a random carrier element."""
        if self._sample is None:
            raise UnsupportedOperationError(f"{self.name} has no sampler")
        return self._sample(rng)


# Random elements are drawn from the dyadic grid k/2**16: sums and products
# of a few grid values stay exactly representable in double precision, so
# algebraic laws can be checked bitwise instead of with tolerances.
_GRID = 1 << 16


def _grid(rng, lo, hi):
    return rng.randint(lo * _GRID, hi * _GRID) / _GRID


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not math.isnan(x)


def _sample_max_plus(rng):
    return -math.inf if rng.random() < 0.1 else _grid(rng, -100, 100)


def _sample_min_plus(rng):
    return math.inf if rng.random() < 0.1 else _grid(rng, -100, 100)


def _sample_max_min(rng):
    r = rng.random()
    if r < 0.05:
        return -math.inf
    if r < 0.1:
        return math.inf
    return _grid(rng, -100, 100)


MAX_PLUS = Semiring(
    name="max-plus",
    carrier="reals extended with -inf",
    add=max,
    mul=lambda a, b: a + b,
    zero=-math.inf,
    one=0.0,
    contains=lambda x: _is_number(x) and x != math.inf,
    idempotent=True,
    semifield=True,
    invert=lambda x: -x,
    sample=_sample_max_plus,
)

MIN_PLUS = Semiring(
    name="min-plus",
    carrier="reals extended with +inf",
    add=min,
    mul=lambda a, b: a + b,
    zero=math.inf,
    one=0.0,
    contains=lambda x: _is_number(x) and x != -math.inf,
    idempotent=True,
    semifield=True,
    invert=lambda x: -x,
    sample=_sample_min_plus,
)

BOOLE = Semiring(
    name="boolean",
    carrier="{0, 1} with disjunction and conjunction",
    add=max,
    mul=min,
    zero=0.0,
    one=1.0,
    contains=lambda x: _is_number(x) and (x == 0 or x == 1),
    idempotent=True,
    semifield=True,
    invert=lambda x: 1.0,
    sample=lambda rng: rng.choice((0.0, 1.0)),
)

FUZZY_SEGMENT = Semiring(
    name="fuzzy",
    carrier="the unit segment [0, 1] with max and min",
    add=max,
    mul=min,
    zero=0.0,
    one=1.0,
    contains=lambda x: _is_number(x) and 0 <= x <= 1,
    idempotent=True,
    semifield=False,
    sample=lambda rng: rng.randint(0, _GRID) / _GRID,
)

MAX_MIN = Semiring(
    name="max-min",
    carrier="reals extended with both infinities, max and min",
    add=max,
    mul=min,
    zero=-math.inf,
    one=math.inf,
    contains=_is_number,
    idempotent=True,
    semifield=False,
    sample=_sample_max_min,
)

NONNEG_ARITH = Semiring(
    name="arith",
    carrier="nonnegative reals with ordinary + and *",
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    zero=0.0,
    one=1.0,
    contains=lambda x: _is_number(x) and 0 <= x < math.inf,
    idempotent=False,
    semifield=False,
    sample=lambda rng: _grid(rng, 0, 100),
)

SEMIRINGS = {
    "max-plus": MAX_PLUS,
    "min-plus": MIN_PLUS,
    "boolean": BOOLE,
    "fuzzy": FUZZY_SEGMENT,
    "max-min": MAX_MIN,
    "arith": NONNEG_ARITH,
}


def lookup(name: str) -> Semiring:
    """Find a built-in semiring by its case-insensitive name."""
    try:
        return SEMIRINGS[name.strip().lower()]
    except KeyError:
        known = ", ".join(sorted(SEMIRINGS))
        raise ValueError(f"unknown semiring {name!r}; expected one of: {known}") from None


def dequantized_add(u: float, v: float, h: float) -> float:
    """Smoothed maximum ``h*ln(exp(u/h) + exp(v/h))``.

    This is the image of ordinary addition under the log-coordinate map
    with scale ``h``; it tends to ``max(u, v)`` as ``h`` goes to 0 and
    always exceeds the max by at most ``h*ln 2`` (exactly ``h*ln 2`` when
    ``u = v``).  Evaluated as ``max + h*log1p(exp(-|u-v|/h))``, which never
    overflows; when the correction underflows the plain max is returned.
    """
    if h <= 0:
        raise ValueError(f"dequantization scale must be positive, got {h}")
    if not (math.isfinite(u) and math.isfinite(v)):
        raise ValueError("dequantized addition is defined for finite reals")
    hi, lo = (u, v) if u >= v else (v, u)
    return hi + h * math.log1p(math.exp((lo - hi) / h))


def dequantize(x: float, h: float) -> float:
    """Log-coordinate map into max-plus: ``x -> h*ln x``, with ``0 -> -inf``.

    Carries ordinary multiplication to max-plus multiplication: the image
    of a product is the sum of the images.
    """
    if h <= 0:
        raise ValueError(f"dequantization scale must be positive, got {h}")
    if x < 0 or math.isnan(x):
        raise ValueError(f"cannot dequantize {x!r}: not a nonnegative real")
    if x == 0:
        return -math.inf
    return h * math.log(x)


@dataclass
class AxiomCheck:
    """Outcome of one law in an axiom report."""

    law: str
    status: str  # "pass" | "fail" | "skipped"
    counterexample: tuple | None = None
    note: str = ""


@dataclass
class AxiomReport:
    """Results of sampling-based semiring axiom checks.

    Failures are data, not exceptions: each law carries a status and, on
    failure, the first counterexample found as ``(inputs, lhs, rhs)``.
    """

    ring: str
    trials: int
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def __getitem__(self, law: str) -> AxiomCheck:
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(law)

    def __str__(self) -> str:
        lines = [f"axioms for {self.ring} ({self.trials} trials): {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            line = f"  {c.law:<24} {c.status}"
            if c.note:
                line += f" ({c.note})"
            if c.counterexample is not None:
                inputs, lhs, rhs = c.counterexample
                line += f"  inputs={inputs!r} lhs={lhs!r} rhs={rhs!r}"
            lines.append(line)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        checks = []
        for c in self.checks:
            entry: dict[str, Any] = {"law": c.law, "status": c.status}
            if c.note:
                entry["note"] = c.note
            if c.counterexample is not None:
                inputs, lhs, rhs = c.counterexample
                entry["counterexample"] = {
                    "inputs": [repr(x) for x in inputs],
                    "lhs": repr(lhs),
                    "rhs": repr(rhs),
                }
            checks.append(entry)
        return {"ring": self.ring, "trials": self.trials, "ok": self.ok, "checks": checks}


def _binary_laws(ring) -> list[tuple[str, Callable]]:
    add, mul, zero, one = ring.add, ring.mul, ring.zero, ring.one
    return [
        ("add-associative", lambda a, b, c: (add(add(a, b), c), add(a, add(b, c)))),
        ("mul-associative", lambda a, b, c: (mul(mul(a, b), c), mul(a, mul(b, c)))),
        ("add-commutative", lambda a, b, c: (add(a, b), add(b, a))),
        ("distributive-left", lambda a, b, c: (mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
        ("distributive-right", lambda a, b, c: (mul(add(a, b), c), add(mul(a, c), mul(b, c)))),
        ("zero-add-neutral", lambda a, b, c: (add(zero, a), a)),
        ("zero-mul-absorbs", lambda a, b, c: ((mul(zero, a), mul(a, zero)), (zero, zero))),
        ("one-mul-neutral", lambda a, b, c: ((mul(one, a), mul(a, one)), (a, a))),
    ]


def check_axioms(ring: Semiring, sampler=None, trials: int = 1000,
                 rng=None, rel_tol: float | None = None) -> AxiomReport:
    """Check the semiring axioms on random samples and report per law.

    ``sampler`` defaults to the ring's own; ``rng`` may be a seed or a
    ``random.Random``.  Comparison is bitwise for idempotent semirings
    (their operations are exact on exact inputs) and uses a relative
    tolerance of 1e-9 otherwise, where ordinary arithmetic really rounds.
    Idempotency and invertibility are only tested when the ring claims
    them; otherwise they are reported as skipped, not failed.
    """
    if rng is None:
        rng = random.Random()
    elif not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if sampler is None:
        sampler = ring.sample
    if rel_tol is None:
        rel_tol = 0.0 if ring.idempotent else 1e-9

    if rel_tol:
        def eq(x, y):
            if isinstance(x, tuple):
                return all(eq(p, q) for p, q in zip(x, y))
            return math.isclose(x, y, rel_tol=rel_tol, abs_tol=rel_tol)
    else:
        def eq(x, y):
            return x == y

    report = AxiomReport(ring=ring.name, trials=trials)
    failures: dict[str, tuple] = {}
    laws = _binary_laws(ring)
    if ring.idempotent:
        laws.append(("add-idempotent", lambda a, b, c: (ring.add(a, a), a)))
    can_invert = ring.semifield and ring._invert is not None
    if can_invert:
        laws.append(("mul-invertible",
                     lambda a, b, c: (ring.mul(a, ring.invert(a)), ring.one)
                     if a != ring.zero else (ring.one, ring.one)))

    for _ in range(trials):
        triple = (sampler(rng), sampler(rng), sampler(rng))
        for law, fn in laws:
            if law in failures:
                continue
            lhs, rhs = fn(*triple)
            if not eq(lhs, rhs):
                failures[law] = (triple, lhs, rhs)

    for law, _ in laws:
        if law in failures:
            report.checks.append(AxiomCheck(law, "fail", failures[law]))
        else:
            report.checks.append(AxiomCheck(law, "pass"))
    report.checks.append(AxiomCheck(
        "zero-is-not-one",
        "fail" if ring.zero == ring.one else "pass",
        ((), ring.zero, ring.one) if ring.zero == ring.one else None))
    if not ring.idempotent:
        report.checks.append(AxiomCheck("add-idempotent", "skipped", note="not claimed"))
    if not ring.semifield:
        report.checks.append(AxiomCheck("mul-invertible", "skipped", note="not claimed"))
    elif not can_invert:
        report.checks.append(AxiomCheck("mul-invertible", "skipped", note="no inverse function provided"))
    return report
