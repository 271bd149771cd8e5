"""Exact linear algebra over Q, with a modular fast path for large kernels.

Pivoting is always "first nonzero entry in column order", so bases are
reproducible. The modular route computes the same reduced row echelon form
modulo a few word-sized primes, lifts it back with CRT and rational
reconstruction, and is only trusted after an exact check; otherwise the
plain Fraction elimination is used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

PRIMES = (2147483647, 2147483629, 2147483587)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def _kernel_from_rref(reduced, pivots: Sequence[int], ncols: int) -> list[list]:
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def nullspace(rows: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per free column (that coordinate is 1)."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    reduced, pivots = rref(rows)
    return [[Fraction(x) for x in v] for v in _kernel_from_rref(reduced, pivots, ncols)]


def rref_mod(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form modulo a prime p < 2**31 (int64 arithmetic)."""
    m = np.asarray(matrix)
    if m.dtype == object:
        m = (m % p).astype(np.int64)
    else:
        m = m.astype(np.int64) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            m[rows] = (m[rows] - np.outer(col[rows], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rational_reconstruct(a: int, modulus: int) -> Optional[Fraction]:
    """Smallest-height fraction congruent to a mod modulus (Wang's algorithm)."""
    a %= modulus
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, a
    s0, s1 = 0, 1
    while r1 > bound:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        s0, s1 = s1, s0 - quo * s1
    if s1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _crt(residues: Sequence[np.ndarray], primes: Sequence[int]) -> tuple[list[int], int]:
    modulus = 1
    acc = [0] * len(residues[0])
    for res, p in zip(residues, primes):
        res = [int(x) for x in res]
        inv = pow(modulus % p, -1, p)
        acc = [a + modulus * (((r - a) * inv) % p) for a, r in zip(acc, res)]
        modulus *= p
    return acc, modulus


def _modular_kernel(matrix: np.ndarray) -> Optional[list[list[Fraction]]]:
    ncols = matrix.shape[1]
    reductions = [rref_mod(matrix, p) for p in PRIMES]
    pivots = reductions[0][1]
    if any(piv != pivots for _, piv in reductions[1:]):
        return None
    if not pivots:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    flat, modulus = _crt([red.reshape(-1) for red, _ in reductions], PRIMES)
    lifted = []
    for x in flat:
        fr = rational_reconstruct(x, modulus)
        if fr is None:
            return None
        lifted.append(fr)
    reduced = [lifted[k * ncols:(k + 1) * ncols] for k in range(len(pivots))]
    return [[Fraction(x) for x in v] for v in _kernel_from_rref(reduced, pivots, ncols)]


def integer_rows(vectors: Sequence[Sequence[Fraction]]) -> np.ndarray:
    """Scale each rational vector by the lcm of its denominators; object array of ints."""
    out = np.empty((len(vectors), len(vectors[0]) if vectors else 0), dtype=object)
    for k, v in enumerate(vectors):
        den = math.lcm(*(Fraction(x).denominator for x in v))
        out[k, :] = [int(Fraction(x) * den) for x in v]
    return out


def integer_kernel(
    matrix: np.ndarray,
    verify: Optional[Callable[[np.ndarray], bool]] = None,
) -> list[list[Fraction]]:
    """Exact kernel basis of an integer matrix (rows x cols, object or int dtype).

    ``verify`` receives the candidate basis scaled to integers, shape
    (cols, k), and must return True only if every column lies in the
    kernel; without it the product is checked directly. A modular
    candidate that fails the check is discarded for Fraction elimination.
    """
    matrix = np.asarray(matrix, dtype=object)
    ncols = matrix.shape[1]
    candidate = _modular_kernel(matrix)
    if candidate is not None:
        if not candidate:
            # the modular rank bounds the rational rank from below; full column
            # rank mod p means full column rank over Q
            return []
        cols = integer_rows(candidate).T
        ok = verify(cols) if verify is not None else not matrix.dot(cols).any()
        if ok:
            return candidate
    return nullspace(matrix.tolist(), ncols)
