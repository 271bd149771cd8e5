"""Brute-force search for the sparsest nonzero vector of a subspace.

The subspace is ``ker C`` for an integer check matrix C. A nonzero kernel
vector supported inside S exists iff the columns of C indexed by S are
linearly dependent, which is the same as the basis of ``ker C`` losing rank
once the columns outside S are deleted. Supports are tried by size, each
size in lexicographic order, so the first hit is a minimum and the
lexicographically smallest such support.

Column dependence is tracked incrementally modulo a prime along the
enumeration. Independence mod p implies independence over Q, so the
modular filter never discards a true witness; every modular dependence is
confirmed with exact rational elimination before it is reported.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .bounds import minsupp
from .core import HammingFunction
from .linalg import PRIMES, nullspace, rank, rref_mod
from .spectra import SpectrumInterval, annihilator_matrix, is_member

DEFAULT_MAX_VERTICES = int(os.environ.get("HAMMING_MAX_VERTICES", 729))
DEFAULT_MAX_SUBSETS = int(os.environ.get("HAMMING_MAX_SUBSETS", 10_000_000))

_P = PRIMES[0]


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_support: int = 6
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_subsets: int = DEFAULT_MAX_SUBSETS

    def __post_init__(self):
        if min(self.max_support, self.max_vertices, self.max_subsets) < 1:
            raise ValueError("search budget caps must be positive")


@dataclass
class KernelSearch:
    size: Optional[int]
    support: tuple[int, ...]
    vector: tuple[Fraction, ...]  # values on ``support``, primitive integers
    subsets_examined: int
    completed: int  # every support of size <= completed has been ruled out
    stopped: Optional[str] = None  # "max-support" or "max-subsets" when nothing was found

    @property
    def found(self) -> bool:
        return self.size is not None


def _exact_dependency(check: np.ndarray, support: Sequence[int]) -> Optional[list[Fraction]]:
    sub = [row for row in check[:, list(support)].tolist() if any(row)]
    if not sub:
        return [Fraction(int(k == 0)) for k in range(len(support))]
    kernel = nullspace(sub, len(support))
    return kernel[0] if kernel else None


def _primitive(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    den = math.lcm(*(v.denominator for v in vec))
    ints = [int(v * den) for v in vec]
    g = math.gcd(*ints)
    sign = 1 if next(x for x in ints if x) > 0 else -1
    return tuple(Fraction(sign * x // g) for x in ints)


def _reduce(v: list[int], basis) -> list[int]:
    for piv, w in basis:
        a = v[piv]
        if a:
            v = [(x - a * y) % _P for x, y in zip(v, w)]
    return v


def _search_level(cols, check, s: int, firsts: Sequence[int]):
    """First (lexicographic) dependent s-subset whose smallest element is in ``firsts``.

    Returns (support, vector, examined) with support None when there is none.
    """
    ncols = len(cols)
    examined = 0

    def leaf(chosen, modular_dependent, degenerate):
        nonlocal examined
        examined += 1
        if degenerate or modular_dependent:
            return _exact_dependency(check, chosen)
        return None

    def rec(start, depth, basis, chosen, degenerate):
        for c in range(start, ncols - (s - depth) + 1):
            v = cols[c] if degenerate else _reduce(cols[c], basis)
            dependent = not degenerate and not any(v)
            picked = chosen + [c]
            if depth == s - 1:
                vec = leaf(picked, dependent, degenerate)
                if vec is not None:
                    return picked, vec
                continue
            if dependent:
                # exactly independent (smaller sizes are exhausted) but singular mod p:
                # below this prefix only exact checks are meaningful
                hit = rec(c + 1, depth + 1, basis, picked, True)
            else:
                hit = rec(c + 1, depth + 1, basis + [_normalized(v)], picked, degenerate)
            if hit is not None:
                return hit
        return None

    for c0 in firsts:
        if c0 > ncols - s:
            break
        v = cols[c0]
        dependent = not any(v)
        if s == 1:
            vec = leaf([c0], dependent, False)
            hit = ([c0], vec) if vec is not None else None
        elif dependent:
            hit = rec(c0 + 1, 1, [], [c0], True)
        else:
            hit = rec(c0 + 1, 1, [_normalized(v)], [c0], False)
        if hit is not None:
            return tuple(hit[0]), hit[1], examined
    return None, None, examined


def _normalized(v: list[int]) -> tuple[int, list[int]]:
    piv = next(k for k, x in enumerate(v) if x)
    inv = pow(v[piv], -1, _P)
    return piv, [(x * inv) % _P for x in v]


def _worker(args):
    cols, check, s, firsts = args
    return _search_level(cols, check, s, firsts)


def sparsest_kernel_vector(
    check: np.ndarray,
    max_support: int,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    anchor: Optional[int] = None,
    jobs: int = 1,
) -> KernelSearch:
    """Minimum-support nonzero vector of ``ker check``.

    ``anchor`` restricts the search to supports containing that column as
    their smallest element; only sound when the subspace is invariant under
    a transitive group, as for Hamming eigenspaces with anchor 0.
    """
    check = np.asarray(check, dtype=object)
    ncols = check.shape[1]
    reduced, _ = rref_mod(check, _P) if check.shape[0] else (np.zeros((0, ncols), np.int64), [])
    cols = [[int(x) for x in reduced[:, c]] for c in range(ncols)]
    firsts = [anchor] if anchor is not None else list(range(ncols))
    examined = 0
    completed = 0
    for s in range(1, min(max_support, ncols) + 1):
        level = math.comb(ncols - 1 - firsts[0], s - 1) if anchor is not None else math.comb(ncols, s)
        if examined + level > max_subsets:
            return KernelSearch(None, (), (), examined, completed, "max-subsets")
        if jobs > 1 and len(firsts) > 1:
            chunks = [firsts[k::jobs] for k in range(jobs)]
            # strided chunks keep the work balanced; pick the lexicographically first hit
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_worker, [(cols, check, s, ch) for ch in chunks if ch]))
            examined += sum(r[2] for r in results)
            hits = [(r[0], r[1]) for r in results if r[0] is not None]
            hit = min(hits, key=lambda h: h[0]) if hits else None
        else:
            support, vec, count = _search_level(cols, check, s, firsts)
            examined += count
            hit = (support, vec) if support is not None else None
        if hit is not None:
            return KernelSearch(s, hit[0], _primitive(hit[1]), examined, s - 1)
        completed = s
    return KernelSearch(None, (), (), examined, completed, "max-support")


def has_vector_supported_in(basis: Sequence[HammingFunction], support: Sequence[int]) -> bool:
    """Complement-rank test: some nonzero combination of ``basis`` vanishes off ``support``."""
    if not basis:
        return False
    keep = sorted(set(range(basis[0].size)) - set(support))
    if not keep:
        return True
    rows = [[b.at(c) for c in keep] for b in basis]
    return rank(rows) < len(basis)


@dataclass
class SearchResult:
    interval: SpectrumInterval
    size: Optional[int]
    witness: Optional[HammingFunction]
    subsets_examined: int
    completed: int
    stopped: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.size is not None

    @property
    def lower_bound(self) -> int:
        return self.size if self.found else self.completed + 1


def min_support_search(
    interval: SpectrumInterval,
    budget: SearchBudget = SearchBudget(),
    symmetry: bool = False,
    jobs: int = 1,
) -> SearchResult:
    """Exhaustive minimum support of U_[i,j](n, q) up to ``budget.max_support``.

    With ``symmetry`` the search fixes vertex 0 in the support; the space is
    invariant under translations, and the lexicographically first minimum
    support always contains vertex 0, so the result is unchanged.
    """
    n, q = interval.n, interval.q
    if q ** n > budget.max_vertices:
        raise BudgetExceeded(f"H({n},{q}) has {q ** n} vertices, above the cap {budget.max_vertices}")
    check = annihilator_matrix(n, q, interval.levels)
    found = sparsest_kernel_vector(
        check, budget.max_support, budget.max_subsets, anchor=0 if symmetry else None, jobs=jobs
    )
    witness = None
    if found.found:
        witness = HammingFunction.from_entries(n, q, dict(zip(found.support, found.vector)))
        assert is_member(witness, interval) and witness.support_size() == found.size
    return SearchResult(interval, found.size, witness, found.subsets_examined, found.completed, found.stopped)


@dataclass(frozen=True)
class Verdict:
    status: str  # minimal | not-minimal | consistent-lower-bound | inconclusive
    support: int
    lower_bound: int
    smaller: Optional[HammingFunction] = field(default=None)


def verify_minimality(
    f: HammingFunction,
    interval: SpectrumInterval,
    budget: SearchBudget = SearchBudget(),
    symmetry: bool = False,
) -> Verdict:
    if f.is_zero() or not is_member(f, interval):
        raise ValueError(f"function is not a nonzero member of {interval}")
    size = f.support_size()
    capped = SearchBudget(min(budget.max_support, size), budget.max_vertices, budget.max_subsets)
    try:
        res = min_support_search(interval, capped, symmetry=symmetry)
    except BudgetExceeded:
        return Verdict("inconclusive", size, 1)
    if res.found:
        if res.size == size:
            return Verdict("minimal", size, size)
        return Verdict("not-minimal", size, res.size, res.witness)
    if res.completed >= size - 1:
        return Verdict("consistent-lower-bound", size, res.completed + 1)
    return Verdict("inconclusive", size, res.completed + 1)


def agreement_table(max_vertices: int = 27, max_bound: int = 6, **kw) -> list[tuple[SpectrumInterval, int, int]]:
    """(interval, closed-form minimum, searched minimum) for every covered case in range."""
    rows = []
    for q in range(2, max_vertices + 1):
        n = 1
        while q ** n <= max_vertices:
            for i in range(n + 1):
                for j in range(i, n + 1):
                    b = minsupp(n, q, i, j)
                    if b.known and b.value <= max_bound:
                        iv = SpectrumInterval(n, q, i, j)
                        res = min_support_search(iv, SearchBudget(max_support=max_bound), **kw)
                        rows.append((iv, b.value, res.size))
            n += 1
    return rows
