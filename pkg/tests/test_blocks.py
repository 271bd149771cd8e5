from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hamming_eigen.blocks import (
    BlockSpec,
    enumerate_B,
    make_a,
    make_c,
    make_d,
    make_e,
    make_phi,
    make_phi1,
    symmetry_apply,
    tensor_all,
    tensor_product,
)
from hamming_eigen.core import HammingFunction
from hamming_eigen.spectra import apply_adjacency, decompose, is_eigenfunction, is_member


def test_one_dimensional_blocks():
    assert make_c(3, 0, 1).values() == [1, -1, 0]
    assert make_d(3, 0).values() == [1, 0, 0]
    assert make_e(3).values() == [1, 1, 1]
    c = make_c(3, 0, 1)
    assert apply_adjacency(c) == -c


def test_a_block():
    a = make_a(3, 1, 1)
    assert a.support_size() == 4
    assert is_eigenfunction(a, 1)
    assert a((1, 0)) == 1 and a((0, 1)) == -1 and a((1, 1)) == 0


def test_phi():
    phi = make_phi()
    assert phi.support_size() == 6
    assert apply_adjacency(phi).is_zero()
    parts = decompose(phi)
    assert [p.is_zero() for p in parts] == [True, True, False, True]
    assert make_phi1().support_size() == 2


def test_d_is_not_pure():
    d = make_d(3, 0)
    assert is_member(d, (0, 1)) and not is_member(d, (1, 1))
    p0, p1 = decompose(d)
    assert p0 == HammingFunction.constant(1, 3, Fraction(1, 3))
    assert p1 == d - p0


def test_eigenfunction_rejects_zero_and_wrong_level():
    assert not is_eigenfunction(HammingFunction.zeros(2, 3), 1)
    assert not is_eigenfunction(make_e(3), 1)


def test_block_errors():
    with pytest.raises(ValueError):
        make_c(3, 1, 1)
    with pytest.raises(ValueError):
        make_a(3, 3, 0)
    with pytest.raises(ValueError):
        BlockSpec("B", 4).build()
    with pytest.raises(ValueError):
        BlockSpec("Z", 3)


def test_tensor_product_values():
    f = tensor_product(make_c(3, 0, 1), make_d(3, 2))
    assert f.n == 2
    assert f((0, 2)) == 1 and f((1, 2)) == -1 and f.support_size() == 2
    with pytest.raises(ValueError):
        tensor_product(make_e(2), make_e(3))


def test_symmetry_action():
    f = HammingFunction(2, 3, list(range(9)))
    g = symmetry_apply(f, [2, 1], [[0, 1, 2], [1, 2, 0]])
    # g(x1, x2) = f(x2, sigma2(x1))
    for x1 in range(3):
        for x2 in range(3):
            assert g((x1, x2)) == f((x2, (x1 + 1) % 3))
    with pytest.raises(ValueError):
        symmetry_apply(f, [1, 1], [[0, 1, 2]] * 2)


def test_b_set():
    bs = enumerate_B()
    assert bs[0] == make_phi()
    assert len(set(bs)) == len(bs)
    assert all(b.support_size() == 6 and is_member(b, (2, 2)) for b in bs)


def test_symmetries_preserve_eigenspaces():
    rng = random.Random(3)
    f = tensor_all([make_a(3, 0, 2), make_d(3, 1)])
    for _ in range(10):
        pi = rng.sample([1, 2, 3], 3)
        sig = [rng.sample(range(3), 3) for _ in range(3)]
        g = symmetry_apply(f, pi, sig)
        assert g.support_size() == f.support_size()
        assert is_member(g, (1, 2))
