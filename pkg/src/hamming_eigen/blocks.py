"""Building-block functions, the tensor product and the symmetry action.

Blocks and the spaces they live in:

    a(q,k,m)  on Sigma_q^2   U_1(2, q)      support 2(q-1)
    phi       on Sigma_3^3   U_2(3, 3)      support 6
    c(q,k,m)  on Sigma_q     U_1(1, q)      support 2
    d(q,k)    on Sigma_q     U_[0,1](1, q)  support 1
    e(q)      on Sigma_q     U_0(1, q)      support q
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .core import HammingFunction, all_words, ranks_of


def _symbol(q: int, s: int, name: str) -> None:
    if not 0 <= s < q:
        raise ValueError(f"{name}={s} outside alphabet 0..{q - 1}")


def make_a(q: int, k: int, m: int) -> HammingFunction:
    _symbol(q, k, "k")
    _symbol(q, m, "m")
    entries = {}
    for x in range(q):
        for y in range(q):
            if x == k and y != m:
                entries[(x, y)] = 1
            elif y == m and x != k:
                entries[(x, y)] = -1
    return HammingFunction.from_entries(2, q, entries)


def make_phi1() -> HammingFunction:
    return HammingFunction.from_entries(2, 3, {(0, 0): 1, (1, 2): -1})


def make_phi() -> HammingFunction:
    phi1 = make_phi1()
    entries = {}
    for x, y, z in product(range(3), repeat=3):
        v = phi1((x + z) % 3, (y + z) % 3)
        if v:
            entries[(x, y, z)] = v
    return HammingFunction.from_entries(3, 3, entries)


def make_c(q: int, k: int, m: int) -> HammingFunction:
    _symbol(q, k, "k")
    _symbol(q, m, "m")
    if k == m:
        raise ValueError("c block needs k != m")
    return HammingFunction.from_entries(1, q, {(k,): 1, (m,): -1})


def make_d(q: int, k: int) -> HammingFunction:
    _symbol(q, k, "k")
    return HammingFunction.from_entries(1, q, {(k,): 1})


def make_e(q: int) -> HammingFunction:
    return HammingFunction.constant(1, q, 1)


def tensor_product(f1: HammingFunction, f2: HammingFunction) -> HammingFunction:
    """(f1 . f2)(x, y) = f1(x) f2(y) on the concatenated coordinates."""
    if f1.q != f2.q:
        raise ValueError(f"alphabet mismatch: q={f1.q} vs q={f2.q}")
    num = np.multiply.outer(f1.numerators, f2.numerators).reshape(-1)
    return HammingFunction.from_numerators(f1.n + f2.n, f1.q, num, f1.denominator * f2.denominator)


def tensor_all(factors: Sequence[HammingFunction]) -> HammingFunction:
    if not factors:
        raise ValueError("empty tensor product")
    out = factors[0]
    for g in factors[1:]:
        out = tensor_product(out, g)
    return out


def _check_perm(perm: Sequence[int], base: int, size: int, what: str) -> None:
    if sorted(perm) != list(range(base, base + size)):
        raise ValueError(f"{what} {list(perm)} is not a permutation of {base}..{base + size - 1}")


def symmetry_apply(
    f: HammingFunction,
    pi: Sequence[int],
    sigmas: Sequence[Sequence[int]],
) -> HammingFunction:
    """g(x_1..x_n) = f(sigma_1(x_pi(1)), ..., sigma_n(x_pi(n))).

    ``pi`` lists pi(1)..pi(n) using 1-based coordinates; ``sigmas[r-1][s]``
    is sigma_r(s).
    """
    n, q = f.n, f.q
    _check_perm(pi, 1, n, "pi")
    if len(sigmas) != n:
        raise ValueError(f"need {n} symbol permutations, got {len(sigmas)}")
    for sig in sigmas:
        _check_perm(sig, 0, q, "sigma")
    words = all_words(n, q)
    src = np.empty_like(words)
    for r in range(n):
        src[:, r] = np.asarray(sigmas[r])[words[:, pi[r] - 1]]
    return HammingFunction.from_numerators(n, q, f.numerators[ranks_of(src, q)], f.denominator)


@lru_cache(maxsize=1)
def _b_family() -> tuple[HammingFunction, ...]:
    phi = make_phi()
    seen: dict[HammingFunction, None] = {}
    sym3 = list(permutations(range(3)))
    for pi in permutations((1, 2, 3)):
        for s1, s2, s3 in product(sym3, repeat=3):
            seen.setdefault(symmetry_apply(phi, pi, (s1, s2, s3)), None)
    return tuple(seen)


def enumerate_B() -> list[HammingFunction]:
    """All distinct images of phi under coordinate and symbol permutations.

    phi itself comes first.
    """
    return list(_b_family())


BLOCK_KINDS = ("A", "B", "Phi1", "C", "D", "E")


@dataclass(frozen=True)
class BlockSpec:
    """A building block by kind and parameters.

    ``params`` is (k, m) for A and C, (k,) for D, () for E and Phi1, and
    (pi, sigma1, sigma2, sigma3) for B with pi 1-based.
    """

    kind: str
    q: int
    params: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in BLOCK_KINDS:
            raise ValueError(f"unknown block kind {self.kind!r}; expected one of {BLOCK_KINDS}")
        if self.kind in ("B", "Phi1") and self.q != 3:
            raise ValueError(f"{self.kind} blocks exist for q = 3 only")

    @property
    def width(self) -> int:
        return {"A": 2, "B": 3, "Phi1": 2}.get(self.kind, 1)

    def build(self) -> HammingFunction:
        if self.kind == "A":
            return make_a(self.q, *self.params)
        if self.kind == "C":
            return make_c(self.q, *self.params)
        if self.kind == "D":
            return make_d(self.q, *self.params)
        if self.kind == "E":
            return make_e(self.q)
        if self.kind == "Phi1":
            return make_phi1()
        phi = make_phi()
        if not self.params:
            return phi
        pi, *sigmas = self.params
        return symmetry_apply(phi, pi, sigmas)


CANONICAL_PARAMS = {"A": (0, 0), "B": (), "C": (0, 1), "D": (0,), "E": (), "Phi1": ()}


def canonical_block(kind: str, q: int) -> BlockSpec:
    return BlockSpec(kind, q, CANONICAL_PARAMS[kind])
