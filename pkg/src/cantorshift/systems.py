"""Numeral systems: Cantor bases, column-stochastic weight matrices, and
sign patterns, with validation and index surgery (remove/shift).

A system assigns to every position n a finite digit alphabet
A_n = {0, ..., max_digit(n)}, a per-digit term value and weight, and a
sign factor -1/+1.  Cantor systems use an integer base q_n >= 2 at each
position (digit d contributes d/q_n, weight 1/q_n); column systems carry
an explicit weight column summing to 1 (digit d contributes the
cumulative sum of the entries below it, weight entries[d]).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import DigitRangeError
from .series import EventuallyPeriodicSeq, weighted_periodic_value

__all__ = [
    "SignPattern",
    "CantorSystem",
    "QTildeColumn",
    "QTildeSystem",
    "Interval",
    "Violation",
    "ValidationReport",
    "rho",
    "sign_factor",
    "column_cumulative",
    "validate",
    "base_interval",
    "remove_index",
    "shift_system",
    "combined_prefix_len",
    "combined_cycle_len",
    "periodic_from",
]


@dataclass(frozen=True)
class SignPattern:
    """Membership of positions in the negative-sign set.

    Member positions carry sign factor -1, non-members +1.
    """

    membership: EventuallyPeriodicSeq

    def __post_init__(self):
        seq = self.membership
        if not isinstance(seq, EventuallyPeriodicSeq):
            seq = EventuallyPeriodicSeq(tuple(seq[0]), tuple(seq[1]))
            object.__setattr__(self, "membership", seq)

    @classmethod
    def none(cls):
        return cls(EventuallyPeriodicSeq((), (False,)))

    @classmethod
    def odd(cls):
        return cls(EventuallyPeriodicSeq((), (True, False)))

    @classmethod
    def even(cls):
        return cls(EventuallyPeriodicSeq((), (False, True)))

    @classmethod
    def explicit(cls, prefix, cycle):
        return cls(EventuallyPeriodicSeq(tuple(bool(b) for b in prefix),
                                         tuple(bool(b) for b in cycle)))

    def member(self, n):
        return bool(self.membership.at(n))

    def has_members(self):
        return any(self.membership.prefix) or any(self.membership.cycle)


def rho(signs, n):
    """1 at member positions, 2 elsewhere."""
    return 1 if signs.member(n) else 2


def sign_factor(signs, n):
    """(-1)**rho(n): -1 at member positions, +1 elsewhere."""
    return -1 if signs.member(n) else 1


@dataclass(frozen=True)
class CantorSystem:
    base: EventuallyPeriodicSeq
    signs: SignPattern

    kind = "cantor"

    def base_at(self, n):
        return self.base.at(n)

    def max_digit(self, n):
        return self.base.at(n) - 1

    def term_value(self, n, d):
        return Fraction(d, self.base.at(n))

    def digit_weight(self, n, d):
        return Fraction(1, self.base.at(n))


@dataclass(frozen=True)
class QTildeColumn:
    """One weight column: entries in (0,1) that sum to 1.

    Digit i against this column contributes the cumulative sum of the
    entries strictly below i and scales the remaining tail by entries[i].
    """

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))
        if not self.entries:
            raise ValueError("column must have at least one entry")

    @property
    def max_digit(self):
        return len(self.entries) - 1

    def cumulative(self, i):
        if not 0 <= i <= self.max_digit:
            raise DigitRangeError(f"digit {i} outside column alphabet 0..{self.max_digit}")
        return sum(self.entries[:i], Fraction(0))


def column_cumulative(column, i):
    """Cumulative coefficient of digit i: sum of entries below i (0 at i=0)."""
    return column.cumulative(i)


@dataclass(frozen=True)
class QTildeSystem:
    columns: EventuallyPeriodicSeq
    signs: SignPattern

    kind = "qtilde"

    def column_at(self, n):
        return self.columns.at(n)

    def max_digit(self, n):
        return self.columns.at(n).max_digit

    def term_value(self, n, d):
        return self.columns.at(n).cumulative(d)

    def digit_weight(self, n, d):
        col = self.columns.at(n)
        if not 0 <= d <= col.max_digit:
            raise DigitRangeError(f"digit {d} outside column alphabet 0..{col.max_digit}")
        return col.entries[d]


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self):
        return f"{self.message} at $.{self.path}"


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple

    @property
    def ok(self):
        return not self.problems

    def __str__(self):
        return "OK" if self.ok else "; ".join(str(p) for p in self.problems)


def _positions_seq(system):
    return system.base if isinstance(system, CantorSystem) else system.columns


def combined_prefix_len(system):
    return max(_positions_seq(system).prefix_len, system.signs.membership.prefix_len)


def combined_cycle_len(system):
    return lcm(_positions_seq(system).cycle_len, system.signs.membership.cycle_len)


def periodic_from(system, start, period):
    """True when the system (alphabets, weights, signs) is `period`-periodic
    at every position >= start."""
    if start < 1 or period < 1:
        return False
    seq = _positions_seq(system)
    end = max(combined_prefix_len(system), start - 1) + combined_cycle_len(system)
    for n in range(start, end + 1):
        if seq.at(n) != seq.at(n + period):
            return False
        if system.signs.member(n) != system.signs.member(n + period):
            return False
    return True


def validate(system):
    """Structural validation; violations are reported, never raised."""
    problems = []
    if isinstance(system, CantorSystem):
        for region, items in (("base.prefix", system.base.prefix),
                              ("base.cycle", system.base.cycle)):
            for i, q in enumerate(items):
                if not isinstance(q, int) or q < 2:
                    problems.append(Violation(f"{region}[{i}]",
                                              f"base entry must be an integer >= 2, got {q!r}"))
    elif isinstance(system, QTildeSystem):
        for region, items in (("columns.prefix", system.columns.prefix),
                              ("columns.cycle", system.columns.cycle)):
            for i, col in enumerate(items):
                for j, v in enumerate(col.entries):
                    if not 0 < v < 1:
                        problems.append(Violation(f"{region}[{i}][{j}]",
                                                  f"column entry not in (0, 1): {v}"))
                if sum(col.entries, Fraction(0)) != 1:
                    problems.append(Violation(f"{region}[{i}]", "column sum != 1"))
        product = Fraction(1)
        for col in system.columns.cycle:
            product *= max(col.entries)
        if product >= 1:
            problems.append(Violation("columns.cycle",
                                      "cycle max-entry product must be < 1"))
    else:
        problems.append(Violation("", f"unknown system type {type(system).__name__}"))
    return ValidationReport(tuple(problems))


def _extreme_value(system, digit_fn):
    split = combined_prefix_len(system)
    period = combined_cycle_len(system)
    terms, weights, signs = [], [], []
    for n in range(1, split + period + 1):
        d = digit_fn(n)
        terms.append(system.term_value(n, d))
        weights.append(system.digit_weight(n, d))
        signs.append(sign_factor(system.signs, n))
    return weighted_periodic_value(terms, weights, signs, split)


@lru_cache(maxsize=4096)
def base_interval(system):
    """Exact infimum/supremum of the greedy extreme digit streams: the
    most negative stream takes the max digit at member positions and 0
    elsewhere; the most positive stream is the mirror image."""
    lo = _extreme_value(system, lambda n: system.max_digit(n) if system.signs.member(n) else 0)
    hi = _extreme_value(system, lambda n: 0 if system.signs.member(n) else system.max_digit(n))
    return Interval(lo, hi)


def shift_system(system, m):
    """System seen by the digit tail after dropping the first m positions."""
    if m < 0:
        raise ValueError("shift must be >= 0")
    if m == 0:
        return system
    signs = SignPattern(system.signs.membership.shifted(m))
    if isinstance(system, CantorSystem):
        return CantorSystem(system.base.shifted(m), signs)
    return QTildeSystem(system.columns.shifted(m), signs)


def remove_index(system, m):
    """System with position m deleted from both the base/column sequence
    and the sign membership."""
    if m < 1:
        raise ValueError("positions are 1-based")
    signs = SignPattern(system.signs.membership.removed(m))
    if isinstance(system, CantorSystem):
        return CantorSystem(system.base.removed(m), signs)
    return QTildeSystem(system.columns.removed(m), signs)
