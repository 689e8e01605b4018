# cython: language_level=3
"""Compiled twin of `_pykernel`; same functions, same semantics.

The integers stay arbitrary-precision Python ints; the win comes from
compiling the loop and call structure of the inner folds.
"""

from math import gcd

__all__ = ["weighted_sum", "periodic_sum", "geometric"]


cdef _fold(list t_num, list t_den, list w_num, list w_den, list sign,
           Py_ssize_t lo, Py_ssize_t hi, acc_n, acc_d):
    cdef Py_ssize_t k
    for k in range(hi - 1, lo - 1, -1):
        num = sign[k] * t_num[k] * w_den[k] * acc_d + w_num[k] * acc_n * t_den[k]
        den = t_den[k] * w_den[k] * acc_d
        g = gcd(num, den)
        acc_n = num // g
        acc_d = den // g
    return acc_n, acc_d


def weighted_sum(list t_num, list t_den, list w_num, list w_den, list sign):
    """Finite sum over all positions; returns reduced (num, den)."""
    return _fold(t_num, t_den, w_num, w_den, sign, 0, len(t_num), 0, 1)


def periodic_sum(list t_num, list t_den, list w_num, list w_den, list sign,
                 Py_ssize_t split):
    """Explicit prefix [0, split) plus an infinitely repeating period."""
    cdef Py_ssize_t n = len(t_num)
    cdef Py_ssize_t k
    if split < 0 or split > n:
        raise ValueError("split out of range")
    if split == n:
        tail_n, tail_d = 0, 1
    else:
        rn = 1
        rd = 1
        for k in range(split, n):
            rn = rn * w_num[k]
            rd = rd * w_den[k]
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
