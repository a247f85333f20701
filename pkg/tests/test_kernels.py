"""The two kernel backends must agree with each other and with the
transposition-counting oracle."""

import itertools
import random

import pytest

import cliffsig._kernels_py as py_kernels
from cliffsig import blade_indices
from oracles import naive_blade_product

try:
    import cliffsig._kernels as cy_kernels

    BACKENDS = [py_kernels, cy_kernels]
except ImportError:
    cy_kernels = None
    BACKENDS = [py_kernels]


@pytest.mark.parametrize("kern", BACKENDS)
def test_against_naive_oracle_exhaustive(kern):
    for p, q in [(4, 0), (2, 2), (0, 4), (1, 2)]:
        n = p + q
        neg = ((1 << q) - 1) << p
        for a, b in itertools.product(range(1 << n), repeat=2):
            sign, mask = kern.blade_mul(a, b, neg)
            want_sign, want_idx = naive_blade_product(
                blade_indices(a), blade_indices(b), p, q
            )
            assert (sign, blade_indices(mask)) == (want_sign, want_idx)


@pytest.mark.parametrize("kern", BACKENDS)
def test_wedge_and_contract_consistency(kern):
    neg = 0b111000  # (3,3)
    for a, b in itertools.product(range(64), repeat=2):
        ws, wm = kern.blade_wedge(a, b)
        if a & b:
            assert ws == 0
        else:
            assert (ws, wm) == kern.blade_mul(a, b, 0)  # no contraction happens
        ls, lm = kern.blade_left_contract(a, b, neg)
        if a & ~b:
            assert ls == 0
        else:
            assert (ls, lm) == kern.blade_mul(a, b, neg)
        rs, rm = kern.blade_right_contract(a, b, neg)
        if b & ~a:
            assert rs == 0
        else:
            assert (rs, rm) == kern.blade_mul(a, b, neg)


@pytest.mark.skipif(cy_kernels is None, reason="compiled kernels not built")
def test_backends_agree_randomized():
    rng = random.Random(7)
    for _ in range(20_000):
        a = rng.randrange(1 << 12)
        b = rng.randrange(1 << 12)
        neg = rng.randrange(1 << 12)
        assert py_kernels.blade_mul(a, b, neg) == cy_kernels.blade_mul(a, b, neg)
        assert py_kernels.blade_wedge(a, b) == cy_kernels.blade_wedge(a, b)
        assert py_kernels.reorder_sign(a, b) == cy_kernels.reorder_sign(a, b)
        assert py_kernels.grade(a) == cy_kernels.grade(a)
        assert py_kernels.blade_metric_sign(a, neg) == cy_kernels.blade_metric_sign(a, neg)


def test_selected_backend_exposed():
    from cliffsig import KERNEL_BACKEND

    assert KERNEL_BACKEND in ("python", "cython")
