from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from hamming_eigen.linalg import (
    PRIMES,
    integer_kernel,
    nullspace,
    rank,
    rational_reconstruct,
    rref,
    rref_mod,
)


def _mat_vec(rows, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in rows]


def test_rref_small():
    reduced, pivots = rref([[2, 4, 6], [1, 2, 4]])
    assert pivots == [0, 2]
    assert reduced == [[1, 2, 0], [0, 0, 1]]
    assert rank([[1, 2], [2, 4]]) == 1


def test_nullspace_spans_kernel():
    rows = [[1, 1, 0, 0], [0, 0, 1, -1]]
    ker = nullspace(rows)
    assert len(ker) == 2
    for v in ker:
        assert _mat_vec(rows, v) == [0, 0]
    assert nullspace([[1, 0], [0, 1]]) == []
    assert len(nullspace([], 3)) == 3


def test_rational_reconstruct():
    p = PRIMES[0]
    x = Fraction(-17, 23)
    a = x.numerator * pow(x.denominator, -1, p) % p
    assert rational_reconstruct(a, p) == x


def test_rref_mod_matches_exact_rank():
    rng = random.Random(5)
    for _ in range(20):
        m = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(4)]
        _, piv = rref_mod(np.array(m, dtype=object), PRIMES[1])
        assert len(piv) == rank(m)


@pytest.mark.parametrize("seed", range(8))
def test_modular_kernel_agrees_with_fraction_elimination(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(2, 6), rng.randint(4, 9)
    m = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
    if seed % 2:
        m.append([a + b for a, b in zip(m[0], m[1])])
    ker = integer_kernel(np.array(m, dtype=object))
    exact = nullspace(m, cols)
    assert len(ker) == len(exact)
    for v in ker:
        assert _mat_vec(m, v) == [0] * len(m)
    # same span: stacking adds no rank
    assert rank([list(v) for v in ker] + exact) == len(exact)
