"""Coordinate restrictions, uniformity, and the restriction and zero-slice checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import HammingFunction
from .spectra import is_member, is_member_levels


def _slices(f: HammingFunction, r: int) -> list[np.ndarray]:
    if not 1 <= r <= f.n:
        raise ValueError(f"coordinate r={r} outside 1..{f.n}")
    cube = f.numerators.reshape((f.q,) * f.n)
    return [np.take(cube, [k], axis=r - 1).reshape(-1) for k in range(f.q)]


def restrict(f: HammingFunction, r: int, k: int) -> HammingFunction:
    """f_k^r(y_1..y_{n-1}) = f(y_1..y_{r-1}, k, y_r..y_{n-1})."""
    if f.n < 2:
        raise ValueError("restriction needs n >= 2")
    if not 0 <= k < f.q:
        raise ValueError(f"symbol k={k} outside 0..{f.q - 1}")
    return HammingFunction.from_numerators(f.n - 1, f.q, _slices(f, r)[k], f.denominator)


def slice_sum(f: HammingFunction, r: int) -> HammingFunction:
    return HammingFunction.from_numerators(f.n - 1, f.q, sum(_slices(f, r)), f.denominator)


@dataclass(frozen=True)
class Uniformity:
    uniform: bool
    # smallest valid l(r) per coordinate, None where no symbol works
    witnesses: tuple[Optional[int], ...]

    def __bool__(self) -> bool:
        return self.uniform


def is_uniform(f: HammingFunction) -> Uniformity:
    """For each r, find the smallest l(r) such that all slices other than l(r) agree.

    At n = 1 slices are single values, compared as constants. At q = 2
    only one slice remains after dropping l(r), so l(r) = 0 always works.
    """
    witnesses = []
    for r in range(1, f.n + 1):
        sl = _slices(f, r)
        found = None
        for l in range(f.q):
            rest = [s for k, s in enumerate(sl) if k != l]
            if all(np.array_equal(rest[0], s) for s in rest[1:]):
                found = l
                break
        witnesses.append(found)
    return Uniformity(all(w is not None for w in witnesses), tuple(witnesses))


@dataclass(frozen=True)
class Lemma2Report:
    differences: bool  # f_k - f_m in U_[i-1, j-1](n-1)
    slice_sum: bool    # sum_k f_k in U_[i, j](n-1)
    slices: bool       # f_k in U_[i-1, j](n-1)

    def __bool__(self) -> bool:
        return self.differences and self.slice_sum and self.slices


def _interval(interval) -> tuple[int, int]:
    lo, hi = (interval.lo, interval.hi) if hasattr(interval, "lo") else interval
    return lo, hi


def lemma2_checks(f: HammingFunction, interval, r: int) -> Lemma2Report:
    """Check the three restriction memberships for f in U_[i,j](n,q) at coordinate r.

    Target intervals are clipped to [0, n-1]; a clipped-empty interval
    admits only the zero function.
    """
    i, j = _interval(interval)
    if f.n < 2:
        raise ValueError("restriction needs n >= 2")
    if not is_member(f, (i, j)):
        raise ValueError(f"function is not in U[{i},{j}]({f.n},{f.q})")
    parts = [restrict(f, r, k) for k in range(f.q)]
    diffs = all(
        is_member_levels(parts[k] - parts[m], i - 1, j - 1)
        for k in range(f.q)
        for m in range(k + 1, f.q)
    )
    total = is_member_levels(slice_sum(f, r), i, j)
    each = all(is_member_levels(p, i - 1, j) for p in parts)
    return Lemma2Report(diffs, total, each)


def lemma3_check(f: HammingFunction, interval, r: int, m: int) -> bool:
    """If every slice but f_m^r vanishes, f_m^r lies in U_[i, j-1](n-1, q)."""
    i, j = _interval(interval)
    if f.n < 2:
        raise ValueError("restriction needs n >= 2")
    if not is_member(f, (i, j)):
        raise ValueError(f"function is not in U[{i},{j}]({f.n},{f.q})")
    parts = [restrict(f, r, k) for k in range(f.q)]
    if any(not p.is_zero() for k, p in enumerate(parts) if k != m):
        raise ValueError(f"slices other than k={m} at coordinate {r} are not all zero")
    return is_member_levels(parts[m], i, j - 1)


def zero_slice_symbols(f: HammingFunction, r: int) -> list[int]:
    """Symbols m whose slice is the only possibly-nonzero one at coordinate r."""
    nonzero = [k for k, s in enumerate(_slices(f, r)) if s.any()]
    return nonzero if len(nonzero) == 1 else []

