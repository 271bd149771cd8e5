"""The product families F1..F4 that attain the minimum support.

Every member is ``c * (g-blocks) . (h-blocks) . (v-blocks)`` laid out over
consecutive coordinates in that order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional

from .blocks import BlockSpec, canonical_block, tensor_all
from .core import HammingFunction

FAMILIES = ("F1", "F2", "F3", "F4")
FAMILY_Q = {"F1": 2, "F2": 2, "F3": 3, "F4": 3}


def _check_ij(n: int, i: int, j: int) -> None:
    if n < 1 or not 0 <= i <= j <= n:
        raise ValueError(f"need n >= 1 and 0 <= i <= j <= n, got n={n}, i={i}, j={j}")


def regime(n: int, q: int, i: int, j: int) -> str:
    """Which family covers (n, q, i, j): F1..F4, or "prior-work" for q=3, i+j <= n."""
    _check_ij(n, i, j)
    if q == 2:
        return "F1" if i + j <= n else "F2"
    if q == 3:
        if i + j <= n:
            return "prior-work"
        return "F3" if i + 2 * j <= 2 * n else "F4"
    raise ValueError(f"families exist for q in {{2, 3}}, got q={q}")


def family_applies(family: str, n: int, i: int, j: int) -> bool:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1 or not 0 <= i <= j <= n:
        return False
    return regime(n, FAMILY_Q[family], i, j) == family


def slot_counts(family: str, n: int, i: int, j: int) -> list[tuple[str, int]]:
    """(block kind, count) for the g, h and v slots, in layout order."""
    if not family_applies(family, n, i, j):
        raise ValueError(f"{family} does not cover n={n}, i={i}, j={j}")
    if family == "F1":
        return [("A", i), ("E", n - i - j), ("D", j - i)]
    if family == "F2":
        return [("A", n - j), ("C", i + j - n), ("D", j - i)]
    if family == "F3":
        return [("A", 2 * n - i - 2 * j), ("B", i + j - n), ("D", j - i)]
    return [("B", n - j), ("C", i + 2 * j - 2 * n), ("D", j - i)]


def expected_support(family: str, n: int, i: int, j: int) -> int:
    if not family_applies(family, n, i, j):
        raise ValueError(f"{family} does not cover n={n}, i={i}, j={j}")
    if family == "F1":
        return 2 ** (n - j)
    if family == "F2":
        return 2 ** i
    if family == "F3":
        return 2 ** (3 * (n - j) - i) * 3 ** (i + j - n)
    return 2 ** (i + j - n) * 3 ** (n - j)


@dataclass(frozen=True)
class FamilySpec:
    """One member of F1..F4. ``blocks`` overrides the canonical block per slot."""

    family: str
    n: int
    i: int
    j: int
    c: Fraction = Fraction(1)
    blocks: Optional[tuple[BlockSpec, ...]] = field(default=None)

    def __post_init__(self):
        if not family_applies(self.family, self.n, self.i, self.j):
            raise ValueError(f"{self.family} does not cover n={self.n}, i={self.i}, j={self.j}")
        if Fraction(self.c) == 0:
            raise ValueError("the scale c must be nonzero")
        if self.blocks is not None:
            kinds = [kind for kind, count in self.slots for _ in range(count)]
            if [b.kind for b in self.blocks] != kinds:
                raise ValueError(f"block kinds {[b.kind for b in self.blocks]} do not fit slots {kinds}")
            if any(b.q != self.q for b in self.blocks):
                raise ValueError(f"{self.family} blocks must have q={self.q}")

    @property
    def q(self) -> int:
        return FAMILY_Q[self.family]

    @property
    def slots(self) -> list[tuple[str, int]]:
        return slot_counts(self.family, self.n, self.i, self.j)

    def block_list(self) -> tuple[BlockSpec, ...]:
        if self.blocks is not None:
            return self.blocks
        return tuple(canonical_block(kind, self.q) for kind, count in self.slots for _ in range(count))


def construct(spec: FamilySpec) -> HammingFunction:
    f = tensor_all([b.build() for b in spec.block_list()])
    assert f.n == spec.n
    return f * Fraction(spec.c)


def random_block(kind: str, q: int, rng: random.Random) -> BlockSpec:
    if kind == "A":
        return BlockSpec("A", q, (rng.randrange(q), rng.randrange(q)))
    if kind == "C":
        k, m = rng.sample(range(q), 2)
        return BlockSpec("C", q, (k, m))
    if kind == "D":
        return BlockSpec("D", q, (rng.randrange(q),))
    if kind == "B":
        pi = tuple(rng.choice(list(permutations((1, 2, 3)))))
        sigmas = tuple(tuple(rng.sample(range(3), 3)) for _ in range(3))
        return BlockSpec("B", 3, (pi, *sigmas))
    return BlockSpec(kind, q, ())


def random_spec(family: str, n: int, i: int, j: int, seed: int, c: Fraction = Fraction(1)) -> FamilySpec:
    """A reproducible member of the family with randomly drawn block parameters."""
    rng = random.Random(seed)
    q = FAMILY_Q[family]
    kinds = [kind for kind, count in slot_counts(family, n, i, j) for _ in range(count)]
    return FamilySpec(family, n, i, j, c, tuple(random_block(k, q, rng) for k in kinds))


def valid_triples(family: str, max_n: int) -> list[tuple[int, int, int]]:
    return [
        (n, i, j)
        for n in range(1, max_n + 1)
        for i in range(n + 1)
        for j in range(i, n + 1)
        if family_applies(family, n, i, j)
    ]
