from fractions import Fraction

import pytest

from cantorshift import (
    CantorSystem,
    EventuallyPeriodicSeq,
    Interval,
    QTildeColumn,
    SignPattern,
    base_interval,
    column_cumulative,
    remove_index,
    rho,
    shift_system,
    sign_factor,
    validate,
)
from helpers import ALT, DEC, FACT, NEG, QT, cantor, qtilde


class TestSignPattern:
    def test_rho_on_odd_pattern(self):
        odd = SignPattern.odd()
        assert rho(odd, 3) == 1
        assert rho(odd, 4) == 2

    def test_rho_on_empty_pattern(self):
        none = SignPattern.none()
        assert all(rho(none, n) == 2 for n in range(1, 20))

    def test_sign_factor_matches_membership(self):
        pattern = SignPattern.explicit((True, False), (False, True, True))
        for n in range(1, 25):
            member = pattern.member(n)
            assert (sign_factor(pattern, n) == -1) == member
            assert (rho(pattern, n) == 1) == member


class TestValidate:
    def test_valid_column_system(self):
        assert validate(QT).ok

    def test_column_sum_violation(self):
        bad = qtilde((), [(Fraction(1, 2), Fraction(1, 3))])
        report = validate(bad)
        assert not report.ok
        assert any("column sum != 1" in p.message for p in report.problems)
        assert any(p.path == "columns.cycle[0]" for p in report.problems)

    def test_base_below_two_violation(self):
        bad = cantor((3, 1), (10,))
        report = validate(bad)
        assert not report.ok
        assert ">= 2" in report.problems[0].message

    def test_entry_outside_unit_interval(self):
        # bypass the column invariant checks deliberately
        col = QTildeColumn.__new__(QTildeColumn)
        object.__setattr__(col, "entries", (Fraction(3, 2), Fraction(-1, 2)))
        bad = qtilde((), [(Fraction(1, 2), Fraction(1, 2))])
        object.__setattr__(bad.columns, "cycle", (col,))
        report = validate(bad)
        assert any("not in (0, 1)" in p.message for p in report.problems)


class TestColumnCumulative:
    def test_zero_digit(self):
        col = QTildeColumn((Fraction(1, 4), Fraction(3, 4)))
        assert column_cumulative(col, 0) == 0

    def test_partial_sums(self):
        col = QTildeColumn((Fraction(1, 4), Fraction(3, 4)))
        assert column_cumulative(col, 1) == Fraction(1, 4)
        thirds = QTildeColumn((Fraction(1, 3),) * 3)
        assert column_cumulative(thirds, 2) == Fraction(2, 3)

    def test_out_of_alphabet(self):
        from cantorshift import DigitRangeError

        col = QTildeColumn((Fraction(1, 4), Fraction(3, 4)))
        with pytest.raises(DigitRangeError):
            column_cumulative(col, 2)


class TestBaseInterval:
    def test_decimal(self):
        assert base_interval(DEC) == Interval(0, 1)

    def test_nega_decimal(self):
        assert base_interval(NEG) == Interval(Fraction(-10, 11), Fraction(1, 11))

    def test_positive_column_system(self):
        assert base_interval(QT) == Interval(0, 1)

    def test_positive_systems_span_unit_interval(self):
        F = Fraction
        for system in (FACT, cantor((5,), (2, 3)),
                       qtilde([[F(1, 2), F(1, 2)]], [[F(1, 8), F(7, 8)]])):
            assert base_interval(system) == Interval(0, 1)

    def test_random_positive_systems_span_unit_interval(self):
        import random

        from cantorshift.sampling import rand_cantor_system, rand_qtilde_system

        rng = random.Random(61)
        for _ in range(25):
            system = (rand_cantor_system(rng, signs="none") if rng.random() < 0.5
                      else rand_qtilde_system(rng, signs="none"))
            assert base_interval(system) == Interval(0, 1)


class TestRemoveIndex:
    def test_prefix_deletion(self):
        assert remove_index(FACT, 2) == cantor((2, 4), (4,))

    def test_constant_system_unchanged(self):
        assert remove_index(DEC, 5) == DEC

    def test_nega_decimal_parity_flip(self):
        assert remove_index(NEG, 1) == cantor((), (10,), SignPattern.even())

    def test_positionwise_agreement(self):
        system = cantor((2, 3, 4), (5, 6), SignPattern.explicit((True,), (False, True)))
        horizon = 3 + 3 * 2
        for m in range(1, horizon + 1):
            out = remove_index(system, m)
            for n in range(1, horizon + 1):
                src = n if n < m else n + 1
                assert out.base_at(n) == system.base_at(src)
                assert out.signs.member(n) == system.signs.member(src)

    def test_constant_alphabet_invariance(self):
        const = cantor((), (7,), SignPattern.explicit((), (True,)))
        for m in range(1, 9):
            assert remove_index(const, m) == const


class TestShiftSystem:
    def test_prefix_drop(self):
        assert shift_system(FACT, 1) == cantor((3, 4), (4,))

    def test_constant_invariance(self):
        assert shift_system(DEC, 7) == DEC

    def test_sign_parity(self):
        assert shift_system(NEG, 1) == cantor((), (10,), SignPattern.even())

    def test_shift_zero_is_identity(self):
        assert shift_system(ALT, 0) == ALT
