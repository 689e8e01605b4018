"""Exact summation of eventually periodic weighted series.

All values handled by the package are rationals (`fractions.Fraction`),
and every infinite sum in scope reduces to a finite explicit part plus a
geometrically contracting periodic tail, so exact closed forms exist.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _kernel
from .errors import DivergentSeriesError

Rational = Fraction

__all__ = [
    "Rational",
    "EventuallyPeriodicSeq",
    "term_at",
    "geometric_block_sum",
    "periodic_tail_sum",
    "weighted_value",
    "weighted_periodic_value",
    "kernel_backend",
]


def kernel_backend():
    """Name of the active summation kernel ('compiled' or 'pure-python')."""
    return _kernel.BACKEND


def _normalize(prefix, cycle):
    prefix = tuple(prefix)
    cycle = tuple(cycle)
    if not cycle:
        raise ValueError("cycle must be nonempty")
    # Reduce the cycle to its primitive period.
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle[:d] * (n // d) == cycle:
            cycle = cycle[:d]
            break
    # Absorb prefix items that the cycle already produces.  Dropping the
    # last prefix item shifts the cycle phase by one, hence the rotation.
    while prefix and prefix[-1] == cycle[-1]:
        prefix = prefix[:-1]
        cycle = cycle[-1:] + cycle[:-1]
    return prefix, cycle


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    """A sequence with a finite prefix followed by a repeating cycle.

    Instances are normalized on construction (primitive cycle, minimal
    prefix), so two sequences are equal as dataclasses exactly when they
    are equal as functions of the position.
    """

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        prefix, cycle = _normalize(self.prefix, self.cycle)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    @property
    def prefix_len(self):
        return len(self.prefix)

    @property
    def cycle_len(self):
        return len(self.cycle)

    def at(self, n):
        """Item at 1-based position n."""
        if n < 1:
            raise ValueError("positions are 1-based")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.cycle[(n - len(self.prefix) - 1) % len(self.cycle)]

    @classmethod
    def from_fn(cls, fn, preperiod, period):
        """Materialize a sequence from a position function that is
        periodic with `period` for positions beyond `preperiod`."""
        prefix = tuple(fn(i) for i in range(1, preperiod + 1))
        cycle = tuple(fn(preperiod + j) for j in range(1, period + 1))
        return cls(prefix, cycle)

    def shifted(self, m):
        """Sequence whose position n holds this sequence's position n+m."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        if m == 0:
            return self
        return EventuallyPeriodicSeq.from_fn(
            lambda n: self.at(n + m), max(len(self.prefix) - m, 0), len(self.cycle)
        )

    def removed(self, m):
        """Sequence with position m deleted (later positions move down)."""
        if m < 1:
            raise ValueError("positions are 1-based")
        preperiod = max(m - 1, len(self.prefix))
        return EventuallyPeriodicSeq.from_fn(
            lambda n: self.at(n) if n < m else self.at(n + 1),
            preperiod,
            len(self.cycle),
        )


def term_at(seq, n):
    """Item of an eventually periodic sequence at 1-based position n."""
    return seq.at(n)


def geometric_block_sum(block_sum, ratio):
    """Exact value of block_sum * (1 + ratio + ratio^2 + ...)."""
    if ratio < 0 or ratio >= 1:
        raise DivergentSeriesError(f"ratio {ratio} outside [0, 1)")
    return block_sum / (1 - ratio)


def periodic_tail_sum(term_fn, start, period):
    """Exact sum of term_fn(start) + term_fn(start+1) + ... where one
    aligned period repeats with a fixed contraction ratio.

    The caller guarantees term_fn(start + k*period + j) equals
    term_fn(start + j) * r^k for some r in [0, 1); the ratio is probed
    from the first nonzero term of the leading period.
    """
    if start < 1:
        raise ValueError("start must be >= 1")
    if period < 1:
        raise ValueError("period must be >= 1")
    terms = [Fraction(term_fn(start + j)) for j in range(period)]
    block = sum(terms, Fraction(0))
    probe = next((j for j, t in enumerate(terms) if t != 0), None)
    if probe is None:
        return Fraction(0)
    ratio = Fraction(term_fn(start + period + probe)) / terms[probe]
    return geometric_block_sum(block, ratio)


def _int_arrays(terms, weights, signs):
    t_num = [t.numerator for t in terms]
    t_den = [t.denominator for t in terms]
    w_num = [w.numerator for w in weights]
    w_den = [w.denominator for w in weights]
    return t_num, t_den, w_num, w_den, list(signs)


def weighted_value(terms, weights, signs):
    """Finite sum of sign_k * term_k * prod_{j<k} weight_j."""
    n, d = _kernel.weighted_sum(*_int_arrays(terms, weights, signs))
    return Fraction(n, d)


def weighted_periodic_value(terms, weights, signs, split):
    """Like weighted_value, but positions beyond `split` form one full
    period that repeats forever (scaled by the product of its weights)."""
    try:
        n, d = _kernel.periodic_sum(*_int_arrays(terms, weights, signs), split)
    except ValueError as exc:
        raise DivergentSeriesError(str(exc)) from exc
    return Fraction(n, d)


def combined_cycle(*lengths):
    """lcm helper for aligning several cycle lengths."""
    return lcm(*lengths) if lengths else 1
