"""Integer-pair kernels for exact series evaluation (pure-Python backend).

Every value evaluated by the package reduces to a signed weighted sum

    sum_k  s_k * t_k * w_1 * w_2 * ... * w_{k-1}

with rational t_k (term values), rational positive w_k (per-position
weights) and s_k in {-1, +1}, optionally followed by a geometrically
contracting periodic tail.  These functions operate on parallel lists of
integer numerators/denominators and return a reduced (num, den) pair.

The compiled twin `_ckernel` implements the same functions with identical
semantics; `cantorshift._kernel` picks one at import time.
"""

from math import gcd

__all__ = ["weighted_sum", "periodic_sum", "geometric"]


def _fold(t_num, t_den, w_num, w_den, sign, lo, hi, acc_n, acc_d):
    # Backward Horner: acc <- s_k t_k + w_k * acc, reduced each step.
    for k in range(hi - 1, lo - 1, -1):
        num = sign[k] * t_num[k] * w_den[k] * acc_d + w_num[k] * acc_n * t_den[k]
        den = t_den[k] * w_den[k] * acc_d
        g = gcd(num, den)
        acc_n = num // g
        acc_d = den // g
    return acc_n, acc_d


def weighted_sum(t_num, t_den, w_num, w_den, sign):
    """Finite sum over all positions; returns reduced (num, den)."""
    return _fold(t_num, t_den, w_num, w_den, sign, 0, len(t_num), 0, 1)


def periodic_sum(t_num, t_den, w_num, w_den, sign, split):
    """Sum with positions [0, split) explicit and [split, n) one full period
    that repeats forever, each repetition scaled by the product of the
    period's weights.  Raises ValueError when that ratio falls outside
    [0, 1) while the period contributes a nonzero block.
    """
    n = len(t_num)
    if not 0 <= split <= n:
        raise ValueError("split out of range")
    if split == n:
        tail_n, tail_d = 0, 1
    else:
        rn = 1
        rd = 1
        for k in range(split, n):
            rn *= w_num[k]
            rd *= w_den[k]
        block_n, block_d = _fold(t_num, t_den, w_num, w_den, sign, split, n, 0, 1)
        if block_n == 0:
            tail_n, tail_d = 0, 1
        else:
            if rn < 0 or rn >= rd:
                raise ValueError("tail ratio outside [0, 1)")
            num = block_n * rd
            den = block_d * (rd - rn)
            g = gcd(num, den)
            tail_n, tail_d = num // g, den // g
    return _fold(t_num, t_den, w_num, w_den, sign, 0, split, tail_n, tail_d)


def geometric(b_num, b_den, r_num, r_den):
    """Closed form block/(1 - ratio); ratio must lie in [0, 1)."""
    if b_den <= 0 or r_den <= 0:
        raise ValueError("denominators must be positive")
    if r_num < 0 or r_num >= r_den:
        raise ValueError("ratio outside [0, 1)")
    num = b_num * r_den
    den = b_den * (r_den - r_num)
    g = gcd(num, den)
    return num // g, den // g
