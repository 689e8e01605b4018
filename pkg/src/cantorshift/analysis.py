"""The deletion operator as a point function on the representable
interval: piecewise-affine structure, continuity classification, and
exact derivative checks.

On every rank-m cylinder the operator agrees with an affine map whose
slope is q_m (Cantor, digit-signed), -q_m (position-signed alternating)
or 1/w(c_m) (column systems).  Discontinuities occur exactly at the
two-representation points whose dual pair flips at position m.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import OutOfIntervalError
from .numbers import (
    cylinder,
    digit_at,
    dual_representation,
    evaluate,
    partial_digits,
    validate_number,
)
from .operators import ShiftVariant, _closed_form, _require_admissible, closed_form_value
from .systems import CantorSystem, base_interval, sign_factor

__all__ = [
    "AffineMap",
    "ContinuityReport",
    "affine_on_cylinder",
    "segment_table",
    "continuity_at",
    "numeric_derivative",
    "graph_samples",
    "point_image",
]


@dataclass(frozen=True)
class AffineMap:
    slope: Fraction
    intercept: Fraction

    def apply(self, x):
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class ContinuityReport:
    kind: str  # "continuous" | "jump"
    left_limit: Fraction
    right_limit: Fraction
    jump: Fraction  # right - left; 0 when continuous


def point_image(system, x, m, variant=ShiftVariant.DIGIT):
    """Deletion image of the point x: digits are extracted canonically up
    to rank m, then the closed form applies."""
    _require_admissible(system, variant)
    digits = partial_digits(system, x, m)
    return _closed_form(system, Fraction(x), list(digits), m, variant)


def affine_on_cylinder(system, prefix_digits, variant=ShiftVariant.DIGIT):
    """Affine map agreeing with the deletion image on the rank-m cylinder
    of the given m digits."""
    digits = list(prefix_digits)
    m = len(digits)
    if m < 1:
        raise ValueError("prefix must contain at least one digit")
    _require_admissible(system, variant)
    if isinstance(system, CantorSystem):
        q_m = Fraction(system.base_at(m))
        slope = -q_m if variant == ShiftVariant.POSITION else q_m
    else:
        slope = 1 / system.digit_weight(m, digits[m - 1])
    intercept = _closed_form(system, Fraction(0), digits, m, variant)
    return AffineMap(slope, intercept)


def segment_table(system, m, variant=ShiftVariant.DIGIT):
    """One (cylinder interval, affine map) entry per rank-m digit prefix,
    sorted by interval position."""
    _require_admissible(system, variant)
    alphabets = [range(system.max_digit(n) + 1) for n in range(1, m + 1)]
    entries = []
    for digits in product(*alphabets):
        entries.append((cylinder(system, digits), affine_on_cylinder(system, digits, variant)))
    entries.sort(key=lambda e: (e[0].lo, e[0].hi))
    return entries


def continuity_at(system, m, num, variant=ShiftVariant.DIGIT):
    """One-sided limits of the deletion image at the point represented by
    `num`.  Points with a single representation are continuity points;
    at a dual pair the two representations supply the one-sided limits
    (the most-negative-tail side is the limit from above)."""
    if num.system != system:
        raise ValueError("number does not live over the given system")
    validate_number(num)
    info = dual_representation(num)
    if info is None:
        v = closed_form_value(num, m, variant)
        return ContinuityReport("continuous", v, v, Fraction(0))
    beta_side = num if info.side == "beta" else info.partner
    gamma_side = info.partner if info.side == "beta" else num
    right = closed_form_value(beta_side, m, variant)
    left = closed_form_value(gamma_side, m, variant)
    jump = right - left
    return ContinuityReport("jump" if jump != 0 else "continuous", left, right, jump)


def numeric_derivative(system, m, num, step, variant=ShiftVariant.DIGIT):
    """Central difference (f(x+h) - f(x-h)) / 2h, exact.  Both sample
    points must stay strictly inside the rank-m cylinder of `num`, where
    the image is affine, so the result equals the cylinder slope."""
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    validate_number(num)
    digits = [digit_at(num, n) for n in range(1, m + 1)]
    cyl = cylinder(system, digits)
    x = evaluate(num)
    if not (cyl.lo < x - step and x + step < cyl.hi):
        raise OutOfIntervalError(
            f"step {step} crosses the rank-{m} cylinder [{cyl.lo}, {cyl.hi}] around {x}"
        )
    upper = point_image(system, x + step, m, variant)
    lower = point_image(system, x - step, m, variant)
    return (upper - lower) / (2 * step)


def graph_samples(system, m, samples_per_cylinder, variant=ShiftVariant.DIGIT):
    """Exact (x, image) pairs: equally spaced interior samples of every
    rank-m cylinder, sorted by x."""
    if samples_per_cylinder < 2:
        raise ValueError("need at least 2 samples per cylinder")
    points = []
    for interval, _ in segment_table(system, m, variant):
        width = interval.width
        for j in range(1, samples_per_cylinder + 1):
            x = interval.lo + width * Fraction(j, samples_per_cylinder + 1)
            points.append((x, point_image(system, x, m, variant)))
    points.sort(key=lambda p: p[0])
    return points
