import random
from fractions import Fraction

import pytest

from cantorshift import (
    OutOfIntervalError,
    ShiftVariant,
    affine_on_cylinder,
    base_interval,
    continuity_at,
    cycle_tail,
    evaluate,
    generalized_shift,
    graph_samples,
    numeric_derivative,
    point_image,
    segment_table,
)
from cantorshift.sampling import rand_cantor_system
from helpers import ALT, DEC, NEG, QT, mk

POSITION = ShiftVariant.POSITION


class TestAffineOnCylinder:
    def test_decimal(self):
        affine = affine_on_cylinder(DEC, (1, 2))
        assert (affine.slope, affine.intercept) == (10, Fraction(-11, 10))
        assert affine.apply(Fraction(123, 1000)) == Fraction(13, 100)

    def test_alternating_position_signed(self):
        affine = affine_on_cylinder(ALT, (1,), POSITION)
        assert (affine.slope, affine.intercept) == (-2, -1)

    def test_column_system(self):
        affine = affine_on_cylinder(QT, (1,))
        assert (affine.slope, affine.intercept) == (Fraction(4, 3), Fraction(-1, 3))


class TestSegmentTable:
    def test_decimal_rank_one(self):
        table = segment_table(DEC, 1)
        assert len(table) == 10
        assert all(affine.slope == 10 for _, affine in table)
        assert all(interval.width == Fraction(1, 10) for interval, _ in table)

    def test_alternating_reversed_digit_order(self):
        table = segment_table(ALT, 1, POSITION)
        assert len(table) == 2
        assert all(affine.slope == -2 for _, affine in table)
        # digit 1 owns the left segment under the negative leading sign
        left, right = table[0][0], table[1][0]
        assert left.hi == right.lo
        one = affine_on_cylinder(ALT, (1,), POSITION)
        assert table[0][1] == one

    def test_column_widths_and_slopes(self):
        table = segment_table(QT, 1)
        assert [interval.width for interval, _ in table] == [Fraction(1, 4), Fraction(3, 4)]
        assert [affine.slope for _, affine in table] == [4, Fraction(4, 3)]

    def test_tiling_and_collinearity_random_cantor(self):
        rng = random.Random(31)
        for _ in range(10):
            system = rand_cantor_system(rng, max_q=6, signs="any")
            m = rng.randrange(1, 4)
            table = segment_table(system, m)
            expected = 1
            for j in range(1, m + 1):
                expected *= system.base_at(j)
            assert len(table) == expected
            interval = base_interval(system)
            assert table[0][0].lo == interval.lo
            assert table[-1][0].hi == interval.hi
            for (a, _), (b, _) in zip(table, table[1:]):
                assert a.hi == b.lo
            for interval_m, affine in table[:: max(1, len(table) // 7)]:
                xs = [interval_m.lo + interval_m.width * Fraction(j, 4) for j in (1, 2, 3)]
                ys = [point_image(system, x, m) for x in xs]
                assert all(y == affine.apply(x) for x, y in zip(xs, ys))


class TestContinuity:
    def test_jump_at_matching_rank(self):
        report = continuity_at(DEC, 2, mk(DEC, (2, 5)))
        assert report.kind == "jump"
        assert report.right_limit == Fraction(1, 5)
        assert report.left_limit == Fraction(3, 10)
        assert report.jump == Fraction(-1, 10)

    def test_continuous_at_other_ranks(self):
        report = continuity_at(DEC, 3, mk(DEC, (2, 5)))
        assert report.kind == "continuous"
        assert report.jump == 0
        assert report.left_limit == report.right_limit

    def test_continuous_at_single_representation_points(self):
        report = continuity_at(DEC, 2, mk(DEC, (1, 2, 3), cycle_tail((5,))))
        assert report.kind == "continuous"

    def test_signed_jump_magnitude(self):
        beta_side = mk(NEG, (6, 0), cycle_tail((9, 0)))
        report = continuity_at(NEG, 1, beta_side)
        assert report.kind == "jump"
        assert abs(report.jump) == 1  # 1/(empty product)


class TestNumericDerivative:
    def test_decimal_slope(self):
        got = numeric_derivative(DEC, 2, mk(DEC, (1, 2, 3)), Fraction(1, 10**4))
        assert got == 10

    def test_alternating_slope(self):
        num = mk(ALT, (1, 2))
        got = numeric_derivative(ALT, 1, num, Fraction(1, 10**4), POSITION)
        assert got == -2

    def test_column_slope(self):
        got = numeric_derivative(QT, 1, mk(QT, (1, 1)), Fraction(1, 2**10))
        assert got == Fraction(4, 3)

    def test_step_crossing_boundary_rejected(self):
        with pytest.raises(OutOfIntervalError):
            numeric_derivative(DEC, 2, mk(DEC, (1, 2, 3)), Fraction(1, 100))


class TestGraphSamples:
    def test_decimal_counts_and_lines(self):
        points = graph_samples(DEC, 1, 2)
        assert len(points) == 20
        xs = [x for x, _ in points]
        assert xs == sorted(xs)
        # each point sits on the affine piece of its own cylinder
        for interval, affine in segment_table(DEC, 1):
            for x, y in points:
                if interval.lo < x < interval.hi:
                    assert y == affine.apply(x)

    def test_alternating_sample_count(self):
        points = graph_samples(ALT, 1, 3, POSITION)
        assert len(points) == 6
        for interval, affine in segment_table(ALT, 1, POSITION):
            for x, y in points:
                if interval.lo < x < interval.hi:
                    assert y == affine.apply(x)

    def test_column_sample_count(self):
        points = graph_samples(QT, 1, 2)
        assert len(points) == 4

    def test_agreement_with_digit_surgery(self):
        # the point function equals deletion surgery through decode
        from cantorshift import decode

        for x, y in graph_samples(DEC, 2, 2):
            assert y == evaluate(generalized_shift(decode(DEC, x, 24), 2))
