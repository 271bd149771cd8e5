"""1-perfect bitrades: verification, the (-1)-eigenfunction, and the q=3 construction.

(T0, T1) is a 1-perfect bitrade when every closed ball B(x) = N(x) + {x}
meets T0 and T1 in exactly one vertex each, or meets neither.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import (
    MAX_TEXT_Q,
    HammingFunction,
    Word,
    check_space,
    format_word,
    parse_word,
    rank,
    unrank,
)
from .families import FamilySpec, construct
from .spectra import adjacency_array

DEFAULT_VERTEX_CAP = 3 ** 10


@dataclass(frozen=True)
class Bitrade:
    n: int
    q: int
    T0: tuple[int, ...]  # sorted vertex ranks
    T1: tuple[int, ...]

    def __post_init__(self):
        check_space(self.n, self.q)
        size = self.q ** self.n
        for name in ("T0", "T1"):
            ranks = tuple(sorted(set(getattr(self, name))))
            if len(ranks) != len(getattr(self, name)):
                raise ValueError(f"{name} lists a vertex twice")
            if not ranks:
                raise ValueError(f"{name} is empty")
            if ranks[0] < 0 or ranks[-1] >= size:
                raise ValueError(f"{name} has a vertex outside H({self.n},{self.q})")
            object.__setattr__(self, name, ranks)
        if set(self.T0) & set(self.T1):
            raise ValueError("T0 and T1 intersect")

    @classmethod
    def from_words(cls, n: int, q: int, T0: Iterable[Sequence[int]], T1: Iterable[Sequence[int]]) -> "Bitrade":
        return cls(n, q, tuple(rank(w, q) for w in T0), tuple(rank(w, q) for w in T1))

    @property
    def size(self) -> int:
        return len(self.T0) + len(self.T1)

    def words(self, part: int) -> list[Word]:
        return [unrank(r, self.n, self.q) for r in (self.T0 if part == 0 else self.T1)]

    def indicator(self, part: int) -> np.ndarray:
        out = np.zeros(self.q ** self.n, dtype=np.int64)
        out[list(self.T0 if part == 0 else self.T1)] = 1
        return out


@dataclass(frozen=True)
class BitradeVerdict:
    valid: bool
    size: int
    counterexample: Optional[Word] = None
    ball_counts: Optional[tuple[int, int]] = None  # (|B(x) & T0|, |B(x) & T1|) at the counterexample
    independent: bool = False
    balanced: bool = False
    perfect_matching: bool = False

    def __bool__(self) -> bool:
        return self.valid


def _ball_counts(b: Bitrade, part: int) -> np.ndarray:
    ind = b.indicator(part)
    return adjacency_array(ind, b.n, b.q) + ind


def verify_bitrade(b: Bitrade) -> BitradeVerdict:
    """Ball condition at every vertex, plus the independence and matching consequences."""
    c0, c1 = _ball_counts(b, 0), _ball_counts(b, 1)
    ok = ((c0 == 1) & (c1 == 1)) | ((c0 == 0) & (c1 == 0))
    both = b.indicator(0) + b.indicator(1)
    nbrs0 = adjacency_array(b.indicator(0), b.n, b.q)
    nbrs1 = adjacency_array(b.indicator(1), b.n, b.q)
    independent = not nbrs0[list(b.T0)].any() and not nbrs1[list(b.T1)].any()
    in_union = adjacency_array(both, b.n, b.q)
    matching = bool((in_union[both == 1] == 1).all())
    balanced = len(b.T0) == len(b.T1)
    bad = np.flatnonzero(~ok)
    if bad.size:
        x = int(bad[0])
        return BitradeVerdict(
            False, b.size, unrank(x, b.n, b.q), (int(c0[x]), int(c1[x])), independent, balanced, matching
        )
    return BitradeVerdict(True, b.size, None, None, independent, balanced, matching)


def to_eigenfunction(b: Bitrade) -> HammingFunction:
    """+1 on T0, -1 on T1, 0 elsewhere; requires a verified bitrade."""
    if not verify_bitrade(b).valid:
        raise ValueError("not a 1-perfect bitrade")
    return HammingFunction.from_numerators(b.n, b.q, b.indicator(0) - b.indicator(1))


def from_level_sets(f: HammingFunction, c=1) -> Bitrade:
    """T0 = {f = c}, T1 = {f = -c}; f may take no other nonzero values."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    stray = f.value_set() - {Fraction(0), c, -c}
    if stray:
        raise ValueError(f"function takes values {sorted(stray)} outside {{0, +-{c}}}")
    vals = f.values()
    return Bitrade(
        f.n, f.q,
        tuple(r for r, v in enumerate(vals) if v == c),
        tuple(r for r, v in enumerate(vals) if v == -c),
    )


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def exists_bitrade(n: int, q: int) -> Optional[bool]:
    """Whether H(n, q) has a 1-perfect bitrade; None when q is not a prime power."""
    if n < 1 or q < 2:
        raise ValueError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    if not is_prime_power(q):
        return None
    return n % q == 1 and n >= q + 1


def minimal_bitrade_q3(m: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> Bitrade:
    """Level sets of the F4(3m+1, 2m+1, 2m+1) member: m phi blocks then one c block."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 3 * m + 1
    if 3 ** n > max_vertices:
        raise ValueError(f"H({n},3) has {3 ** n} vertices, above the cap {max_vertices}")
    f = construct(FamilySpec("F4", n, 2 * m + 1, 2 * m + 1))
    b = from_level_sets(f, 1)
    verdict = verify_bitrade(b)
    if not verdict.valid:
        raise AssertionError(f"construction failed the ball check at {verdict.counterexample}")
    assert b.size == 2 ** (m + 1) * 3 ** m
    return b


def is_perfect_code(n: int, q: int, code: Iterable[int]) -> bool:
    ind = np.zeros(q ** n, dtype=np.int64)
    ind[list(code)] = 1
    return bool(((adjacency_array(ind, n, q) + ind) == 1).all())


def bitrade_from_codes(n: int, q: int, C1: Iterable[int], C2: Iterable[int]) -> Bitrade:
    """(C1 - C2, C2 - C1) for two distinct 1-perfect codes."""
    C1, C2 = set(C1), set(C2)
    if C1 == C2:
        raise ValueError("the codes must differ")
    if not (is_perfect_code(n, q, C1) and is_perfect_code(n, q, C2)):
        raise ValueError("both sets must be 1-perfect codes")
    return Bitrade(n, q, tuple(C1 - C2), tuple(C2 - C1))


def to_document(b: Bitrade) -> dict:
    if b.q > MAX_TEXT_Q:
        raise ValueError(f"the text format supports q <= {MAX_TEXT_Q}")
    return {
        "n": b.n,
        "q": b.q,
        "T0": [format_word(w) for w in b.words(0)],
        "T1": [format_word(w) for w in b.words(1)],
    }


def from_document(doc) -> Bitrade:
    if not isinstance(doc, dict):
        raise ValueError("bitrade document must be a JSON object")
    try:
        n, q, t0, t1 = doc["n"], doc["q"], doc["T0"], doc["T1"]
    except KeyError as exc:
        raise ValueError(f"bitrade document lacks field {exc.args[0]!r}") from None
    if not (isinstance(n, int) and isinstance(q, int)):
        raise ValueError("n and q must be integers")
    if q > MAX_TEXT_Q:
        raise ValueError(f"the text format supports q <= {MAX_TEXT_Q}")
    if not (isinstance(t0, list) and isinstance(t1, list)):
        raise ValueError("T0 and T1 must be lists of words")
    return Bitrade.from_words(
        n, q, [parse_word(w, n, q) for w in t0], [parse_word(w, n, q) for w in t1]
    )


def serialize(b: Bitrade) -> str:
    return json.dumps(to_document(b))


def deserialize(text: str) -> Bitrade:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed bitrade document: {exc}") from None
    return from_document(doc)
