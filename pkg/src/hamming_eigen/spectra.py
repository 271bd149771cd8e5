"""Adjacency operator, eigenvalues and eigenspace membership for H(n, q).

The adjacency operator is never materialised: along coordinate r, the sum
over the q-1 neighbours of x equals the sum over the whole fibre through x
minus f(x), so ``A f = sum_r fibre_sum_r(f) - n f``.

A function lies in U_[i,j](n,q) exactly when the product of
``(A - lambda_k Id)`` over the levels k = i..j annihilates it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Iterable, Sequence

import numpy as np

from .core import HammingFunction
from .linalg import integer_kernel

DEFAULT_BASIS_CAP = int(os.environ.get("HAMMING_MAX_VERTICES", 729))


def eigenvalue(n: int, q: int, i: int) -> int:
    if not 0 <= i <= n:
        raise ValueError(f"level {i} outside 0..{n}")
    return n * (q - 1) - q * i


def eigenspace_dimension(n: int, q: int, i: int) -> int:
    """C(n, i) (q-1)^i, the textbook multiplicity of lambda_i."""
    return comb(n, i) * (q - 1) ** i


@dataclass(frozen=True)
class SpectrumInterval:
    """Names the space U_[lo,hi](n, q)."""

    n: int
    q: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.n < 1 or self.q < 2:
            raise ValueError(f"need n >= 1 and q >= 2, got n={self.n}, q={self.q}")
        if not 0 <= self.lo <= self.hi <= self.n:
            raise ValueError(f"need 0 <= i <= j <= n, got i={self.lo}, j={self.hi}, n={self.n}")

    @property
    def levels(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def dimension(self) -> int:
        return sum(eigenspace_dimension(self.n, self.q, k) for k in self.levels)

    def __str__(self) -> str:
        return f"U[{self.lo},{self.hi}]({self.n},{self.q})"


def adjacency_array(arr: np.ndarray, n: int, q: int) -> np.ndarray:
    """Apply A along axis 0 of ``arr`` (shape (q**n, ...)); trailing axes are a batch."""
    batch = arr.shape[1:]
    cube = arr.reshape((q,) * n + batch)
    out = cube * (-n)
    for axis in range(n):
        out = out + cube.sum(axis=axis, keepdims=True)
    return out.reshape(arr.shape)


def annihilate_array(arr: np.ndarray, n: int, q: int, levels: Iterable[int]) -> np.ndarray:
    for k in levels:
        arr = adjacency_array(arr, n, q) - eigenvalue(n, q, k) * arr
    return arr


def apply_adjacency(f: HammingFunction) -> HammingFunction:
    return HammingFunction.from_numerators(
        f.n, f.q, adjacency_array(f.numerators, f.n, f.q), f.denominator
    )


def is_eigenfunction(f: HammingFunction, i: int) -> bool:
    lam = eigenvalue(f.n, f.q, i)
    if f.is_zero():
        return False
    return bool((adjacency_array(f.numerators, f.n, f.q) == lam * f.numerators).all())


def _as_interval(f: HammingFunction, interval) -> SpectrumInterval:
    if isinstance(interval, SpectrumInterval):
        if (interval.n, interval.q) != (f.n, f.q):
            raise ValueError(f"{interval} does not match a function on H({f.n},{f.q})")
        return interval
    lo, hi = interval
    return SpectrumInterval(f.n, f.q, lo, hi)


def is_member(f: HammingFunction, interval) -> bool:
    """True iff f lies in U_[i,j]; the zero function is in every such space.

    ``interval`` is a SpectrumInterval or an (i, j) pair.
    """
    iv = _as_interval(f, interval)
    return not annihilate_array(f.numerators, f.n, f.q, iv.levels).any()


def is_member_levels(f: HammingFunction, lo: int, hi: int) -> bool:
    """Membership with the bounds clipped to [0, n]; an empty range holds only 0."""
    lo, hi = max(lo, 0), min(hi, f.n)
    if lo > hi:
        return f.is_zero()
    return is_member(f, (lo, hi))


def projector_array(arr: np.ndarray, n: int, q: int, i: int) -> tuple[np.ndarray, int]:
    """Numerator and integer scale of P_i applied to ``arr``: P_i arr = num / scale."""
    others = [k for k in range(n + 1) if k != i]
    lam = eigenvalue(n, q, i)
    scale = prod(lam - eigenvalue(n, q, k) for k in others)
    return annihilate_array(arr, n, q, others), scale


def decompose(f: HammingFunction) -> list[HammingFunction]:
    """(P_0 f, ..., P_n f) with P_i the Lagrange projector onto U_i."""
    parts = []
    for i in range(f.n + 1):
        num, scale = projector_array(f.numerators, f.n, f.q, i)
        if scale < 0:
            num, scale = -num, -scale
        parts.append(HammingFunction.from_numerators(f.n, f.q, num, f.denominator * scale))
    return parts


def annihilator_matrix(n: int, q: int, levels: Iterable[int]) -> np.ndarray:
    """Dense exact integer matrix of prod_{k in levels} (A - lambda_k Id); object dtype."""
    size = q ** n
    ident = np.zeros((size, size), dtype=object)
    for r in range(size):
        ident[r, r] = 1
    return annihilate_array(ident, n, q, list(levels))


def eigenspace_basis(interval: SpectrumInterval, max_vertices: int = DEFAULT_BASIS_CAP) -> list[HammingFunction]:
    """Exact basis of U_[i,j](n, q): the kernel of its annihilator."""
    n, q = interval.n, interval.q
    if q ** n > max_vertices:
        raise ValueError(f"H({n},{q}) has {q ** n} vertices, above the cap {max_vertices}")
    levels = list(interval.levels)
    matrix = annihilator_matrix(n, q, levels)

    def verify(cols: np.ndarray) -> bool:
        return not annihilate_array(cols, n, q, levels).any()

    vectors = integer_kernel(matrix, verify=verify)
    return [HammingFunction(n, q, v) for v in vectors]


def combine(basis: Sequence[HammingFunction], coeffs: Sequence) -> HammingFunction:
    if not basis:
        raise ValueError("empty basis")
    out = HammingFunction.zeros(basis[0].n, basis[0].q)
    for b, c in zip(basis, coeffs):
        if Fraction(c) != 0:
            out = out + b * c
    return out
