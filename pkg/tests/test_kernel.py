"""The two kernel backends must agree with each other and with a plain
Fraction reference on random workloads."""

import random
from fractions import Fraction

import pytest

from cantorshift._kernel import _pykernel

try:
    from cantorshift._kernel import _ckernel
except ImportError:
    _ckernel = None


def _random_workload(rng, n):
    t_num = [rng.randrange(-20, 21) for _ in range(n)]
    t_den = [rng.randrange(1, 20) for _ in range(n)]
    w_num = [rng.randrange(1, 10) for _ in range(n)]
    w_den = []
    for wn in w_num:
        w_den.append(rng.randrange(wn + 1, wn + 12))  # weights in (0, 1)
    sign = [rng.choice((-1, 1)) for _ in range(n)]
    return t_num, t_den, w_num, w_den, sign


def _reference_periodic(t_num, t_den, w_num, w_den, sign, split):
    terms = [Fraction(a, b) for a, b in zip(t_num, t_den)]
    weights = [Fraction(a, b) for a, b in zip(w_num, w_den)]
    total = Fraction(0)
    lead = Fraction(1)
    for k in range(split):
        total += sign[k] * terms[k] * lead
        lead *= weights[k]
    if split < len(terms):
        block = Fraction(0)
        w = Fraction(1)
        ratio = Fraction(1)
        for k in range(split, len(terms)):
            block += sign[k] * terms[k] * w
            w *= weights[k]
            ratio *= weights[k]
        total += lead * block / (1 - ratio)
    return total


@pytest.mark.parametrize("split_kind", ["finite", "tail", "pure_tail"])
def test_pykernel_matches_fraction_reference(split_kind):
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 12)
        work = _random_workload(rng, n)
        split = {"finite": n, "tail": rng.randrange(0, n), "pure_tail": 0}[split_kind]
        got = Fraction(*_pykernel.periodic_sum(*work, split))
        assert got == _reference_periodic(*work, split)


@pytest.mark.skipif(_ckernel is None, reason="compiled kernel not built")
def test_compiled_kernel_matches_pure_kernel():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(1, 15)
        work = _random_workload(rng, n)
        split = rng.randrange(0, n + 1)
        assert _ckernel.periodic_sum(*work, split) == _pykernel.periodic_sum(*work, split)
        assert _ckernel.weighted_sum(*work) == _pykernel.weighted_sum(*work)


def test_geometric_agreement_and_domain():
    for kernel in filter(None, (_pykernel, _ckernel)):
        assert kernel.geometric(1, 2, 1, 2) == (1, 1)
        assert kernel.geometric(3, 8, 1, 4) == (1, 2)
        with pytest.raises(ValueError):
            kernel.geometric(1, 1, 5, 4)
        with pytest.raises(ValueError):
            kernel.geometric(1, 1, -1, 4)


def test_divergent_tail_rejected():
    # weights >= 1 with a nonzero block must not be summed
    with pytest.raises(ValueError):
        _pykernel.periodic_sum([1], [1], [3], [2], [1], 0)
