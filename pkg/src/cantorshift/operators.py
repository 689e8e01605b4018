"""Shift operators on represented numbers.

Three operators act on digit streams:

* shift / iterate_shift drop the leading position(s), digits and system
  together;
* generalized_shift deletes one interior position m, which maps the
  number into the system with index m removed.

The digit-deletion route and the closed-form route (an affine expression
in the number's value) are implemented independently and must agree
exactly; that equality is the package's central verifiable identity.

Two sign conventions exist for deletion over signed systems:

* DIGIT: every surviving digit keeps its own sign factor (membership is
  deleted along with the position);
* POSITION: signs are recomputed from the new positions; admissible only
  for alternating Cantor systems (members exactly at odd positions),
  where it matches the original alternating-series definition.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .errors import ExpansionError, VariantError
from .numbers import (
    DigitStream,
    RepresentedNumber,
    cycle_tail,
    digit_at,
    digits_equal,
    evaluate,
    make_stream,
    normalize_stream,
)
from .systems import (
    CantorSystem,
    QTildeSystem,
    SignPattern,
    combined_cycle_len,
    combined_prefix_len,
    remove_index,
    shift_system,
    sign_factor,
)

__all__ = [
    "ShiftVariant",
    "PrefixSums",
    "shift",
    "iterate_shift",
    "generalized_shift",
    "closed_form_value",
    "prefix_sums",
    "compose_removals",
    "TheoremReport",
    "verify_theorem_identities",
]


class ShiftVariant(str, Enum):
    DIGIT = "digit"
    POSITION = "position"


def _is_alternating(system):
    return isinstance(system, CantorSystem) and system.signs == SignPattern.odd()


def _require_admissible(system, variant):
    if variant == ShiftVariant.POSITION and not _is_alternating(system):
        raise VariantError(
            "position-signed deletion is only defined for alternating "
            "Cantor systems (members exactly at odd positions)"
        )


def shift(num):
    """Drop the first digit and the first system position."""
    return iterate_shift(num, 1)


def iterate_shift(num, m):
    """Drop the first m digits and system positions.

    The value satisfies the exact decomposition
    x = (prefix digits, zero tail) + value(shifted) * prod_{j<=m} w_j.
    """
    if m < 0:
        raise ValueError("shift count must be >= 0")
    if m == 0:
        return num
    system2 = shift_system(num.system, m)
    stream = num.digits
    dpl = len(stream.prefix)
    if m <= dpl:
        prefix2 = stream.prefix[m:]
        tail2 = stream.tail
    else:
        prefix2 = ()
        tail2 = stream.tail
        if tail2.kind == "cycle":
            r = (m - dpl) % len(tail2.cycle)
            tail2 = cycle_tail(tail2.cycle[r:] + tail2.cycle[:r])
    return RepresentedNumber(system2, normalize_stream(system2, prefix2, tail2))


def generalized_shift(num, m, variant=ShiftVariant.DIGIT):
    """Delete digit and position m, re-aligning the tail against the new
    system's period."""
    if m < 1:
        raise ValueError("positions are 1-based")
    system = num.system
    _require_admissible(system, variant)
    if variant == ShiftVariant.POSITION:
        # base loses position m; signs stay attached to positions
        system2 = CantorSystem(system.base.removed(m), SignPattern.odd())
    else:
        system2 = remove_index(system, m)

    def moved(n):
        return digit_at(num, n) if n < m else digit_at(num, n + 1)

    stream = num.digits
    dpl = len(stream.prefix)
    if stream.tail.kind == "cycle":
        period = lcm(len(stream.tail.cycle), combined_cycle_len(system2))
        preperiod = max(m - 1, dpl, combined_prefix_len(system2))
        stream2 = make_stream(system2, moved, preperiod, period)
    else:
        bound = max(m - 1, dpl - 1, 0)
        prefix2 = [moved(n) for n in range(1, bound + 1)]
        stream2 = normalize_stream(system2, prefix2, stream.tail)
    return RepresentedNumber(system2, stream2)


def _cantor_prefix_sum(num, m):
    # sum over k < m of sign_k * i_k / (q_1 ... q_k), plus q_1 ... q_{m-1}
    total = Fraction(0)
    weight = Fraction(1)
    for k in range(1, m):
        q = num.system.base_at(k)
        weight /= q
        total += sign_factor(num.system.signs, k) * digit_at(num, k) * weight
    return total, weight


def _closed_form(system, x, digits, m, variant):
    """Affine image of x under deletion of position m, given the first m
    digits of x.  This never touches the tail digits."""
    if isinstance(system, CantorSystem):
        q_m = system.base_at(m)
        g = Fraction(0)
        inv = Fraction(1)
        for k in range(1, m):
            inv /= system.base_at(k)
            g += sign_factor(system.signs, k) * digits[k - 1] * inv
        lead = Fraction(digits[m - 1], 1) * inv  # i_m / (q_1 ... q_{m-1})
        s_m = sign_factor(system.signs, m)
        if variant == ShiftVariant.POSITION:
            return -q_m * x + (1 + q_m) * g + s_m * lead
        return q_m * x + (1 - q_m) * g - s_m * lead
    if variant == ShiftVariant.POSITION:
        raise VariantError("position-signed deletion is not defined for column systems")
    value_prefix = Fraction(0)
    weight = Fraction(1)
    for k in range(1, m):
        d = digits[k - 1]
        value_prefix += sign_factor(system.signs, k) * system.term_value(k, d) * weight
        weight *= system.digit_weight(k, d)
    w_m = system.digit_weight(m, digits[m - 1])
    a_m = system.term_value(m, digits[m - 1])
    s_m = sign_factor(system.signs, m)
    return x / w_m - s_m * a_m * weight / w_m + (1 - 1 / w_m) * value_prefix


def closed_form_value(num, m, variant=ShiftVariant.DIGIT):
    """Value of the deletion image computed from x and the first m digits
    alone, without digit surgery."""
    if m < 1:
        raise ValueError("positions are 1-based")
    _require_admissible(num.system, variant)
    x = evaluate(num)
    digits = [digit_at(num, k) for k in range(1, m + 1)]
    return _closed_form(num.system, x, digits, m, variant)


@dataclass(frozen=True)
class PrefixSums:
    """Signed prefix sum below position m and the re-weighted tail whose
    denominators skip q_m; over Cantor systems
    x = g + sign_m * i_m / (q_1...q_m) + zeta / q_m holds exactly."""

    g: Fraction
    zeta: Fraction


def prefix_sums(num, m):
    if m < 1:
        raise ValueError("positions are 1-based")
    if not isinstance(num.system, CantorSystem):
        raise ExpansionError("prefix sums are defined for Cantor systems")
    x = evaluate(num)
    g, inv = _cantor_prefix_sum(num, m)
    q_m = num.system.base_at(m)
    s_m = sign_factor(num.system.signs, m)
    zeta = q_m * (x - g - s_m * digit_at(num, m) * inv / q_m)
    return PrefixSums(g, zeta)


def compose_removals(num, indices, variant=ShiftVariant.DIGIT):
    """Delete the digits with the given original labels.

    Removals are applied at the indices in decreasing order so that each
    deletion targets the intended original position.
    """
    indices = tuple(indices)
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError("indices must be strictly increasing")
    out = num
    for m in reversed(indices):
        out = generalized_shift(out, m, variant)
    return out


@dataclass(frozen=True)
class TheoremReport:
    """Pass/fail record for the composition identities of the deletion
    operator over positive Cantor systems."""

    shift_compose: bool          # shift after m-fold deletion at 2 equals m+1 shifts
    subsequence: bool            # k_n - n shifts after deleting labels k_1..k_n equals k_n shifts
    consecutive_adjusted: bool   # consecutive run: k_1 - 1 shifts close the gap
    consecutive_printed: bool    # the k_1 + 1 exponent (recorded, expected to fail)
    residual: bool               # x - sigma_m(x) decomposition

    @property
    def expected_ok(self):
        return (
            self.shift_compose
            and self.subsequence
            and self.consecutive_adjusted
            and self.residual
        )


def _same_rep(a, b):
    return a.system == b.system and digits_equal(a, b) and evaluate(a) == evaluate(b)


def verify_theorem_identities(num, m=2, indices=(2, 5)):
    """Check the composition identities by exact value and digit
    comparison.  `num` must live over a positive Cantor system."""
    system = num.system
    if not isinstance(system, CantorSystem) or system.signs.has_members():
        raise ExpansionError("the composition identities assume a positive Cantor system")
    indices = tuple(indices)

    # (a) shift o (delete at 2)^m = iterate_shift(m + 1)
    probe = num
    for _ in range(m):
        probe = generalized_shift(probe, 2)
    shift_compose = _same_rep(shift(probe), iterate_shift(num, m + 1))

    # (b) iterate_shift(k_n - n) o compose_removals(k_1..k_n) = iterate_shift(k_n)
    k_n = indices[-1]
    lhs = iterate_shift(compose_removals(num, indices), k_n - len(indices))
    subsequence = _same_rep(lhs, iterate_shift(num, k_n))

    # (c) consecutive run k_1, k_1+1, ..., k_1+n-1
    k1 = indices[0]
    run = tuple(range(k1, k1 + len(indices)))
    composed = compose_removals(num, run)
    target = iterate_shift(num, run[-1])
    consecutive_adjusted = _same_rep(iterate_shift(composed, k1 - 1), target)
    consecutive_printed = _same_rep(iterate_shift(composed, k1 + 1), target)

    # (d) x - sigma_m(x) = i_m/(q_1..q_m) + iterate_shift(x, m)(1 - q_m)/(q_1..q_m)
    x = evaluate(num)
    q_m = system.base_at(m)
    _, inv = _cantor_prefix_sum(num, m)
    weight_m = inv / q_m
    lhs_d = x - closed_form_value(num, m)
    rhs_d = digit_at(num, m) * weight_m + evaluate(iterate_shift(num, m)) * (1 - q_m) * weight_m
    residual = lhs_d == rhs_d

    return TheoremReport(
        shift_compose, subsequence, consecutive_adjusted, consecutive_printed, residual
    )
