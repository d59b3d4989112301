import math
import random

import pytest

from idemalg import (BOOLE, FUZZY_SEGMENT, MAX_MIN, MAX_PLUS, MIN_PLUS,
                     NONNEG_ARITH, Interval, UnsupportedOperationError,
                     check_axioms, interval_add, interval_extension,
                     interval_mul)

BASES = [MAX_PLUS, MIN_PLUS, BOOLE, FUZZY_SEGMENT, MAX_MIN]


def hull(base, a, b):
    return Interval(a, b, base) if base.leq(a, b) else Interval(b, a, base)


class TestConstruction:
    def test_bounds_must_be_ordered(self):
        Interval(1.0, 3.0, MAX_PLUS)
        with pytest.raises(ValueError, match="does not precede"):
            Interval(3.0, 1.0, MAX_PLUS)

    def test_min_plus_stores_larger_value_as_lower_bound(self):
        # the standard order of min-plus reverses numbers
        iv = Interval(5.0, 2.0, MIN_PLUS)
        assert iv.lo == 5.0 and iv.hi == 2.0
        with pytest.raises(ValueError):
            Interval(2.0, 5.0, MIN_PLUS)

    def test_bounds_must_lie_in_carrier(self):
        with pytest.raises(Exception):
            Interval(-math.inf, 3.0, MIN_PLUS)

    def test_contains(self):
        iv = Interval(1.0, 3.0, MAX_PLUS)
        assert iv.contains(2.0)
        assert iv.contains(1.0) and iv.contains(3.0)
        assert not iv.contains(0.0)
        assert Interval.degenerate(4.0, MAX_PLUS).contains(4.0)

    def test_equality_and_repr(self):
        assert Interval(1.0, 2.0, MAX_PLUS) == Interval(1.0, 2.0, MAX_PLUS)
        assert Interval(1.0, 2.0, MAX_PLUS) != Interval(1.0, 2.0, MAX_MIN)
        assert repr(Interval(1.0, 2.0, MAX_PLUS)) == "[1.0, 2.0]"


class TestArithmetic:
    def test_add_examples(self):
        assert interval_add(Interval(1, 2, MAX_PLUS), Interval(0, 3, MAX_PLUS)) \
            == Interval(1, 3, MAX_PLUS)
        zero = Interval.degenerate(-math.inf, MAX_PLUS)
        x = Interval(1, 2, MAX_PLUS)
        assert interval_add(zero, x) == x
        assert interval_add(Interval(5, 2, MIN_PLUS), Interval(4, 3, MIN_PLUS)) \
            == Interval(4, 2, MIN_PLUS)

    def test_mul_examples(self):
        assert interval_mul(Interval(1, 3, MAX_PLUS), Interval(2, 4, MAX_PLUS)) \
            == Interval(3, 7, MAX_PLUS)
        assert interval_mul(Interval(0.2, 0.5, FUZZY_SEGMENT), Interval(0.3, 0.9, FUZZY_SEGMENT)) \
            == Interval(0.2, 0.5, FUZZY_SEGMENT)
        one = Interval.degenerate(0.0, MAX_PLUS)
        x = Interval(1, 3, MAX_PLUS)
        assert interval_mul(one, x) == x

    def test_base_mismatch(self):
        with pytest.raises(ValueError, match="base mismatch"):
            interval_add(Interval(1, 2, MAX_PLUS), Interval(1, 2, MAX_MIN))


class TestExtensionSemiring:
    def test_extension_is_cached(self):
        assert interval_extension(MIN_PLUS) is interval_extension(MIN_PLUS)

    def test_requires_idempotent_base(self):
        with pytest.raises(UnsupportedOperationError):
            interval_extension(NONNEG_ARITH)

    def test_neutral_elements_are_degenerate(self):
        ext = interval_extension(MAX_PLUS)
        assert ext.zero == Interval.degenerate(MAX_PLUS.zero, MAX_PLUS)
        assert ext.one == Interval.degenerate(MAX_PLUS.one, MAX_PLUS)

    @pytest.mark.parametrize("base", BASES, ids=lambda r: r.name)
    def test_axioms_hold(self, base):
        report = check_axioms(interval_extension(base), trials=250, rng=11)
        assert report.ok, str(report)

    @pytest.mark.parametrize("base", BASES, ids=lambda r: r.name)
    def test_degenerate_embedding_is_a_homomorphism(self, base):
        ext = interval_extension(base)
        rng = random.Random(42)
        for _ in range(200):
            a, b = base.sample(rng), base.sample(rng)
            pa, pb = Interval.degenerate(a, base), Interval.degenerate(b, base)
            assert ext.add(pa, pb) == Interval.degenerate(base.add(a, b), base)
            assert ext.mul(pa, pb) == Interval.degenerate(base.mul(a, b), base)

    @pytest.mark.parametrize("base", BASES, ids=lambda r: r.name)
    def test_standard_order_is_componentwise(self, base):
        ext = interval_extension(base)
        rng = random.Random(7)
        for _ in range(300):
            x = ext.sample(rng)
            y = ext.sample(rng)
            componentwise = base.leq(x.lo, y.lo) and base.leq(x.hi, y.hi)
            assert ext.leq(x, y) == componentwise


class TestInclusionIsotonicity:
    @pytest.mark.parametrize("base", BASES, ids=lambda r: r.name)
    def test_operations_respect_membership(self, base):
        ext = interval_extension(base)
        rng = random.Random(20240810)
        for _ in range(1000):
            a, spread_a = base.sample(rng), base.sample(rng)
            b, spread_b = base.sample(rng), base.sample(rng)
            x = hull(base, a, spread_a)
            y = hull(base, b, spread_b)
            assert x.contains(a) and y.contains(b)
            assert ext.add(x, y).contains(base.add(a, b))
            assert ext.mul(x, y).contains(base.mul(a, b))
