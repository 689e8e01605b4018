"""Seeded random generation of systems, digit streams, and paired
two-representation points for the property suites.

Every generator takes an explicit random.Random so that a (seed, trial)
pair determines the case exactly.
"""

from fractions import Fraction

from .numbers import (
    RepresentedNumber,
    TAIL_MAX,
    TAIL_ZEROS,
    DigitStream,
    cycle_tail,
    make_stream,
)
from .series import EventuallyPeriodicSeq
from .systems import (
    CantorSystem,
    QTildeColumn,
    QTildeSystem,
    SignPattern,
    combined_cycle_len,
    combined_prefix_len,
)

__all__ = [
    "rand_sign_pattern",
    "sign_case_pattern",
    "rand_cantor_system",
    "rand_qtilde_system",
    "rand_stream",
    "rand_number",
    "dual_pair",
]

SIGN_CASES = ((False, False), (False, True), (True, False), (True, True))


def rand_sign_pattern(rng, mode="any"):
    if mode == "any":
        mode = rng.choice(("none", "none", "odd", "even", "explicit"))
    if mode == "none":
        return SignPattern.none()
    if mode == "odd":
        return SignPattern.odd()
    if mode == "even":
        return SignPattern.even()
    prefix = [rng.random() < 0.5 for _ in range(rng.randrange(0, 3))]
    cycle = [rng.random() < 0.5 for _ in range(rng.randrange(1, 5))]
    return SignPattern.explicit(prefix, cycle)


def sign_case_pattern(rng, n, case):
    """Sign pattern whose membership at positions (n, n+1) equals `case`,
    random elsewhere."""
    member_n, member_next = case
    prefix = [rng.random() < 0.5 for _ in range(n + 1)]
    prefix[n - 1] = member_n
    prefix[n] = member_next
    cycle = [rng.random() < 0.5 for _ in range(rng.randrange(1, 3))]
    return SignPattern.explicit(prefix, cycle)


def rand_cantor_system(rng, max_q=12, signs="any", sign_pattern=None):
    prefix = tuple(rng.randrange(2, max_q + 1) for _ in range(rng.randrange(0, 4)))
    cycle = tuple(rng.randrange(2, max_q + 1) for _ in range(rng.randrange(1, 5)))
    pattern = sign_pattern if sign_pattern is not None else rand_sign_pattern(rng, signs)
    return CantorSystem(EventuallyPeriodicSeq(prefix, cycle), pattern)


def rand_column(rng, max_den=16):
    k = rng.randrange(2, 4)
    den = rng.randrange(max(k, 4), max_den + 1)
    cuts = sorted(rng.sample(range(1, den), k - 1))
    bounds = [0] + cuts + [den]
    return QTildeColumn(tuple(Fraction(b - a, den) for a, b in zip(bounds, bounds[1:])))


def rand_qtilde_system(rng, max_den=16, signs="any", sign_pattern=None):
    prefix = tuple(rand_column(rng, max_den) for _ in range(rng.randrange(0, 3)))
    cycle = tuple(rand_column(rng, max_den) for _ in range(rng.randrange(1, 3)))
    pattern = sign_pattern if sign_pattern is not None else rand_sign_pattern(rng, signs)
    return QTildeSystem(EventuallyPeriodicSeq(prefix, cycle), pattern)


def rand_stream(rng, system, max_prefix=12, tail_kinds=("zeros", "max", "cycle")):
    kind = rng.choice(tail_kinds)
    dpl = rng.randrange(0, max_prefix + 1)
    if kind == "cycle":
        # the cycle must start past the system prefix and repeat with the
        # system's combined period
        dpl = max(dpl, combined_prefix_len(system))
        period = combined_cycle_len(system) * rng.randrange(1, 3)
        cyc = tuple(
            rng.randrange(0, system.max_digit(dpl + 1 + j) + 1) for j in range(period)
        )
        tail = cycle_tail(cyc)
    elif kind == "max":
        tail = TAIL_MAX
    else:
        tail = TAIL_ZEROS
    prefix = tuple(rng.randrange(0, system.max_digit(n) + 1) for n in range(1, dpl + 1))
    return DigitStream(prefix, tail)


def rand_number(rng, system, max_prefix=12, tail_kinds=("zeros", "max", "cycle")):
    return RepresentedNumber(system, rand_stream(rng, system, max_prefix, tail_kinds))


def dual_pair(rng, system, n):
    """Construct both representations of a two-representation point whose
    dual flip sits at position n, directly from the adjacent-cylinder
    rule (digit step toward the neighbor; extreme tails swapped).

    Returns (most-negative-tail side, most-positive-tail side).
    """
    member = system.signs.member(n)
    lead = [rng.randrange(0, system.max_digit(k) + 1) for k in range(1, n)]
    if member:
        low = rng.randrange(0, system.max_digit(n))  # partner digit is low+1
        beta_digit, gamma_digit = low, low + 1
    else:
        high = rng.randrange(1, system.max_digit(n) + 1)  # partner digit is high-1
        beta_digit, gamma_digit = high, high - 1

    def beta_fn(k):
        if k < n:
            return lead[k - 1]
        if k == n:
            return beta_digit
        return system.max_digit(k) if system.signs.member(k) else 0

    def gamma_fn(k):
        if k < n:
            return lead[k - 1]
        if k == n:
            return gamma_digit
        return 0 if system.signs.member(k) else system.max_digit(k)

    pre = max(n, combined_prefix_len(system))
    period = combined_cycle_len(system)
    beta_side = RepresentedNumber(system, make_stream(system, beta_fn, pre, period))
    gamma_side = RepresentedNumber(system, make_stream(system, gamma_fn, pre, period))
    return beta_side, gamma_side
