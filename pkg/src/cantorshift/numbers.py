"""Represented numbers: digit streams over a numeral system, exact
evaluation, canonical decoding, cylinders, and dual representations.

A digit stream is a finite prefix plus a tail specification: all zeros,
all max digits, or a repeating digit cycle whose period the system must
share from the cycle's start position.  Evaluation is exact rational
arithmetic through the summation kernel.

Decoding extracts digits by the half-open cylinder convention (each
cylinder contains its spatially lowest point; the representable
supremum belongs to its topmost cylinder) and closes the stream when a
residual value recurs at an aligned position, which yields the periodic
tail exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional

from .errors import (
    AlignmentError,
    DigitRangeError,
    InexactDecodeError,
    OutOfIntervalError,
)
from .systems import (
    CantorSystem,
    Interval,
    QTildeSystem,
    base_interval,
    combined_cycle_len,
    combined_prefix_len,
    periodic_from,
    shift_system,
    sign_factor,
)
from .series import weighted_periodic_value, weighted_value

__all__ = [
    "Tail",
    "TAIL_ZEROS",
    "TAIL_MAX",
    "cycle_tail",
    "DigitStream",
    "RepresentedNumber",
    "Interval",
    "validate_number",
    "digit_at",
    "evaluate",
    "decode",
    "partial_digits",
    "cylinder",
    "DualInfo",
    "dual_representation",
    "quasi_partner",
    "is_quasi_rational",
    "canonicalize",
    "normalize_stream",
    "make_stream",
    "digits_equal",
    "same_number",
]


@dataclass(frozen=True)
class Tail:
    kind: str
    cycle: tuple = ()

    def __post_init__(self):
        if self.kind not in ("zeros", "max", "cycle"):
            raise ValueError(f"unknown tail kind {self.kind!r}")
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if self.kind == "cycle" and not self.cycle:
            raise ValueError("cycle tail needs at least one digit")
        if self.kind != "cycle" and self.cycle:
            raise ValueError(f"{self.kind} tail carries no cycle digits")


TAIL_ZEROS = Tail("zeros")
TAIL_MAX = Tail("max")


def cycle_tail(digits):
    return Tail("cycle", tuple(digits))


@dataclass(frozen=True)
class DigitStream:
    prefix: tuple
    tail: Tail

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))


@dataclass(frozen=True)
class RepresentedNumber:
    system: object
    digits: DigitStream


def digit_at(num, n):
    """Digit at 1-based position n."""
    if n < 1:
        raise ValueError("positions are 1-based")
    stream = num.digits
    if n <= len(stream.prefix):
        return stream.prefix[n - 1]
    tail = stream.tail
    if tail.kind == "zeros":
        return 0
    if tail.kind == "max":
        return num.system.max_digit(n)
    return tail.cycle[(n - len(stream.prefix) - 1) % len(tail.cycle)]


def _check_digit(system, n, d):
    if not isinstance(d, int) or not 0 <= d <= system.max_digit(n):
        raise DigitRangeError(
            f"digit {d!r} outside alphabet 0..{system.max_digit(n)} at position {n}"
        )


def validate_number(num):
    """Raise DigitRangeError / AlignmentError when the stream does not fit
    the system; valid numbers pass silently."""
    system, stream = num.system, num.digits
    for i, d in enumerate(stream.prefix):
        _check_digit(system, i + 1, d)
    tail = stream.tail
    if tail.kind == "cycle":
        start = len(stream.prefix) + 1
        p = len(tail.cycle)
        if not periodic_from(system, start, p):
            raise AlignmentError(
                f"digit cycle of length {p} starting at position {start} "
                "is not a period of the numeral system there"
            )
        for j, d in enumerate(tail.cycle):
            _check_digit(system, start + j, d)


def _term_arrays(num):
    system, stream = num.system, num.digits
    dpl = len(stream.prefix)
    tail = stream.tail
    if tail.kind == "zeros":
        split = dpl
        total = dpl
    elif tail.kind == "max":
        split = max(dpl, combined_prefix_len(system))
        total = split + combined_cycle_len(system)
    else:
        split = dpl
        total = dpl + len(tail.cycle)
    terms, weights, signs = [], [], []
    for n in range(1, total + 1):
        d = digit_at(num, n)
        terms.append(system.term_value(n, d))
        weights.append(system.digit_weight(n, d))
        signs.append(sign_factor(system.signs, n))
    return terms, weights, signs, split


@lru_cache(maxsize=8192)
def _evaluate_cached(num):
    validate_number(num)
    return weighted_periodic_value(*_term_arrays(num))


def evaluate(num):
    """Exact value of the represented number."""
    return _evaluate_cached(num)


def _tail_interval(system, n):
    """Interval of residual values available after position n."""
    return base_interval(shift_system(system, n))


def _digit_step(system, n, y):
    """Extract the digit at position n from residual y, returning
    (digit, next residual).  y must lie in the representable interval of
    the system shifted by n-1 positions."""
    nxt = _tail_interval(system, n)
    lo, hi = nxt.lo, nxt.hi
    s = sign_factor(system.signs, n)
    if isinstance(system, CantorSystem):
        q = system.base_at(n)
        if s > 0:
            d = math.floor(q * y - lo)
        else:
            d = math.ceil(lo - q * y)
        d = min(max(d, 0), q - 1)
        y2 = q * y - s * d
        if not lo <= y2 <= hi:
            raise OutOfIntervalError(f"value has no digit at position {n}")
        return d, y2
    col = system.column_at(n)
    pieces = []
    for d in range(col.max_digit + 1):
        a = col.cumulative(d)
        w = col.entries[d]
        pieces.append((s * a + w * lo, s * a + w * hi, d, a, w))
    pieces.sort(key=lambda item: (item[0], item[1], item[2]))
    chosen = None
    for plo, phi, d, a, w in pieces:
        if plo <= y < phi:
            chosen = (d, a, w)
            break
    if chosen is None:
        top = max(pieces, key=lambda item: (item[1], -item[2]))
        if y == top[1]:
            chosen = (top[2], top[3], top[4])
        else:
            raise OutOfIntervalError(f"value has no digit at position {n}")
    d, a, w = chosen
    y2 = (y - s * a) / w
    if not lo <= y2 <= hi:
        raise OutOfIntervalError(f"value has no digit at position {n}")
    return d, y2


def partial_digits(system, value, count):
    """First `count` digits of the canonical expansion of `value`."""
    iv = base_interval(system)
    if not iv.contains(value):
        raise OutOfIntervalError(f"{value} outside representable interval [{iv.lo}, {iv.hi}]")
    y = Fraction(value)
    digits = []
    for n in range(1, count + 1):
        d, y = _digit_step(system, n, y)
        digits.append(d)
    return tuple(digits)


def decode(system, value, depth):
    """Canonical representation of an in-interval rational.

    Digits are extracted stepwise; the stream closes exactly when a
    residual recurs at a position aligned with the system's period
    (periodic tail) within `depth` extracted digits, else
    InexactDecodeError is raised.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    iv = base_interval(system)
    if not iv.contains(value):
        raise OutOfIntervalError(f"{value} outside representable interval [{iv.lo}, {iv.hi}]")
    pre = combined_prefix_len(system)
    period = combined_cycle_len(system)
    y = Fraction(value)
    digits = []
    seen = {}
    while True:
        k = len(digits)
        if k >= pre and (k - pre) % period == 0:
            if y in seen:
                cut = seen[y]
                return RepresentedNumber(
                    system, normalize_stream(system, digits[:cut], cycle_tail(digits[cut:]))
                )
            seen[y] = k
        if k >= depth:
            raise InexactDecodeError(
                f"no exact tail found within depth {depth} for value {value}"
            )
        d, y = _digit_step(system, k + 1, y)
        digits.append(d)


def normalize_stream(system, prefix, tail):
    """Canonical structural form of a digit stream: cycles reduced to the
    shortest system-compatible period and absorbed into named zeros/max
    tails when they match, trailing redundant prefix digits trimmed."""
    prefix = list(prefix)
    if tail.kind == "cycle":
        cyc = list(tail.cycle)
        start = len(prefix) + 1
        # shortest period compatible with the system at the start position
        p = len(cyc)
        for d in range(1, p + 1):
            if p % d == 0 and cyc[:d] * (p // d) == cyc and periodic_from(system, start, d):
                cyc = cyc[:d]
                p = d
                break
        # absorb whole periods sitting at the end of the prefix
        while (
            len(prefix) >= p
            and prefix[-p:] == cyc
            and periodic_from(system, start - p, p)
        ):
            del prefix[-p:]
            start -= p
        if all(d == 0 for d in cyc):
            tail = TAIL_ZEROS
        elif periodic_from(system, start, p) and all(
            d == system.max_digit(start + j) for j, d in enumerate(cyc)
        ):
            tail = TAIL_MAX
        else:
            return DigitStream(tuple(prefix), cycle_tail(cyc))
    if tail.kind == "zeros":
        while prefix and prefix[-1] == 0:
            prefix.pop()
    else:
        while prefix and prefix[-1] == system.max_digit(len(prefix)):
            prefix.pop()
    return DigitStream(tuple(prefix), tail)


def make_stream(system, fn, preperiod, period):
    """Digit stream for a position function that is `period`-periodic
    beyond `preperiod`; the result is normalized."""
    prefix = [fn(n) for n in range(1, preperiod + 1)]
    cyc = [fn(preperiod + j) for j in range(1, period + 1)]
    return normalize_stream(system, prefix, cycle_tail(cyc))


def cylinder(system, prefix_digits):
    """Exact interval of all numbers whose expansion starts with the given
    digits: fixed prefix value plus the scaled representable interval of
    the shifted system."""
    prefix_digits = tuple(prefix_digits)
    value = Fraction(0)
    weight = Fraction(1)
    terms, weights, signs = [], [], []
    for i, d in enumerate(prefix_digits):
        n = i + 1
        _check_digit(system, n, d)
        terms.append(system.term_value(n, d))
        weights.append(system.digit_weight(n, d))
        signs.append(sign_factor(system.signs, n))
    if prefix_digits:
        value = weighted_value(terms, weights, signs)
        for w in weights:
            weight *= w
    tail = _tail_interval(system, len(prefix_digits))
    return Interval(value + weight * tail.lo, value + weight * tail.hi)


def _beta_digit(system, n):
    # tail digits of the most negative continuation
    return system.max_digit(n) if system.signs.member(n) else 0


def _gamma_digit(system, n):
    # tail digits of the most positive continuation
    return 0 if system.signs.member(n) else system.max_digit(n)


@dataclass(frozen=True)
class DualInfo:
    partner: RepresentedNumber
    position: int
    side: str  # "beta" when the number carries the most-negative tail


def _stream_period(system, stream):
    if stream.tail.kind == "cycle":
        return len(stream.tail.cycle)
    return combined_cycle_len(system)


def dual_representation(num) -> Optional[DualInfo]:
    """Detect the two-representation structure: a number has a dual
    exactly when its digits beyond some position n follow the extreme
    beta tail (max at member positions, 0 elsewhere) or the mirror gamma
    tail.  The partner flips the digit at n toward the adjacent cylinder
    and carries the opposite extreme tail; both evaluate equal.

    Sign-variable column systems are excluded: their cylinders may
    overlap or leave gaps, so adjacent-cylinder duality is not available.
    """
    system = num.system
    if isinstance(system, QTildeSystem) and system.signs.has_members():
        return None
    validate_number(num)
    pre = max(len(num.digits.prefix), combined_prefix_len(system))
    window = lcm(_stream_period(system, num.digits), combined_cycle_len(system))
    for side, tail_fn, other_fn in (
        ("beta", _beta_digit, _gamma_digit),
        ("gamma", _gamma_digit, _beta_digit),
    ):
        if any(digit_at(num, n) != tail_fn(system, n) for n in range(pre + 1, pre + window + 1)):
            continue
        flip = next(
            (n for n in range(pre, 0, -1) if digit_at(num, n) != tail_fn(system, n)),
            None,
        )
        if flip is None:
            # the stream is the extreme tail from position 1: an interval
            # endpoint with a unique representation
            return None
        step = 1 if system.signs.member(flip) else -1
        if side == "gamma":
            step = -step
        flipped = digit_at(num, flip) + step

        def partner_digit(n, flip=flip, flipped=flipped, other_fn=other_fn):
            if n < flip:
                return digit_at(num, n)
            if n == flip:
                return flipped
            return other_fn(system, n)

        stream = make_stream(
            system,
            partner_digit,
            max(flip, combined_prefix_len(system)),
            combined_cycle_len(system),
        )
        return DualInfo(RepresentedNumber(system, stream), flip, side)
    return None


def quasi_partner(num):
    """The other exact representation of the same value, when one exists."""
    info = dual_representation(num)
    return info.partner if info is not None else None


def is_quasi_rational(num):
    return dual_representation(num) is not None


def canonicalize(num):
    """The representative decode() would produce for the number's value."""
    validate_number(num)
    system = num.system
    depth = (
        len(num.digits.prefix)
        + combined_prefix_len(system)
        + 3 * max(_stream_period(system, num.digits), combined_cycle_len(system))
        + 8
    )
    return decode(system, evaluate(num), depth)


def digits_equal(a, b):
    """Semantic equality of two digit streams over their systems: same
    digit at every position."""
    pa = max(len(a.digits.prefix), combined_prefix_len(a.system))
    pb = max(len(b.digits.prefix), combined_prefix_len(b.system))
    horizon = max(pa, pb) + lcm(
        _stream_period(a.system, a.digits), _stream_period(b.system, b.digits)
    )
    return all(digit_at(a, n) == digit_at(b, n) for n in range(1, horizon + 1))


def same_number(a, b):
    """Same system (structurally) and the same digit function."""
    return a.system == b.system and digits_equal(a, b)
