"""Closed-form minimum support of U_[i,j](n, q) and a checker against it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import HammingFunction
from .spectra import is_member


@dataclass(frozen=True)
class BoundResult:
    value: Optional[int]  # None means "unknown"
    source: str
    regime: str

    @property
    def known(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict:
        return {"value": self.value if self.known else "unknown", "source": self.source}


def _validate(n: int, q: int, i: int, j: int) -> None:
    if n < 1 or q < 2 or not 0 <= i <= j <= n:
        raise ValueError(f"need n >= 1, q >= 2, 0 <= i <= j <= n; got n={n}, q={q}, i={i}, j={j}")


def small_levels_bound(n: int, q: int, i: int, j: int) -> int:
    """2^i (q-1)^i q^(n-i-j), the q >= 3, i+j <= n minimum."""
    return 2 ** i * (q - 1) ** i * q ** (n - i - j)


def _q3_middle(n: int, i: int, j: int) -> int:
    return 2 ** (3 * (n - j) - i) * 3 ** (i + j - n)


def _q3_top(n: int, i: int, j: int) -> int:
    return 2 ** (i + j - n) * 3 ** (n - j)


def minsupp(n: int, q: int, i: int, j: int) -> BoundResult:
    _validate(n, q, i, j)
    if q == 2:
        if i + j <= n:
            return BoundResult(2 ** (n - j), "Theorem 3", "F1")
        return BoundResult(2 ** i, "Theorem 4", "F2")
    if i + j <= n:
        value = small_levels_bound(n, q, i, j)
        if q == 3 and i + j == n:
            # shared boundary with the middle q=3 regime
            assert value == _q3_middle(n, i, j)
        return BoundResult(value, "Theorem 1 (cited)", "prior-work")
    if q == 3:
        if i + 2 * j <= 2 * n:
            value = _q3_middle(n, i, j)
            if i + 2 * j == 2 * n:
                assert value == _q3_top(n, i, j)
            source = "Theorem 5 / Corollary 1" if i == j else "Theorem 5"
            return BoundResult(value, source, "F3")
        source = "Theorem 6 / Corollary 2" if i == j else "Theorem 6"
        return BoundResult(_q3_top(n, i, j), source, "F4")
    return BoundResult(None, "not stated for q >= 4 with i+j > n", "out-of-scope")


def uniform_bound(n: int, q: int, i: int, j: int) -> int:
    """Floor 2^(n-j) (q-1)^(n-j) q^(i+j-n) for uniform nonzero members, q >= 3, i+j >= n."""
    _validate(n, q, i, j)
    if q < 3 or i + j < n:
        raise ValueError(f"uniform bound needs q >= 3 and i+j >= n; got q={q}, i={i}, j={j}, n={n}")
    return 2 ** (n - j) * (q - 1) ** (n - j) * q ** (i + j - n)


@dataclass(frozen=True)
class BoundCheck:
    support: int
    bound: BoundResult
    holds: Optional[bool]  # None when the bound is unknown
    attained: bool


def check_bound(f: HammingFunction, interval) -> BoundCheck:
    lo, hi = (interval.lo, interval.hi) if hasattr(interval, "lo") else interval
    if f.is_zero():
        raise ValueError("the bound concerns nonzero functions")
    if not is_member(f, (lo, hi)):
        raise ValueError(f"function is not in U[{lo},{hi}]({f.n},{f.q})")
    bound = minsupp(f.n, f.q, lo, hi)
    size = f.support_size()
    if not bound.known:
        return BoundCheck(size, bound, None, False)
    return BoundCheck(size, bound, size >= bound.value, size == bound.value)
