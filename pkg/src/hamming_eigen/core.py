"""Words, exact rational functions on Sigma_q^n, and the JSON function document.

Vertices of H(n, q) are words over {0..q-1}. A word's rank is its big-endian
mixed-radix index, so ``rank((0, 1, 2), 3) == 5``. Public functions that take a
coordinate index (``restrict``, ``symmetry_apply``) count coordinates from 1.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Tuple, Union

import numpy as np

Word = Tuple[int, ...]
Rational = Union[int, Fraction]

# dense storage is canonical up to this many vertices
DENSE_LIMIT = 2 ** 24
MAX_TEXT_Q = 10

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def check_space(n: int, q: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    if q ** n > DENSE_LIMIT:
        raise ValueError(f"H({n},{q}) has {q ** n} vertices, above the dense limit {DENSE_LIMIT}")


def rank(word: Sequence[int], q: int) -> int:
    r = 0
    for s in word:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} outside alphabet 0..{q - 1}")
        r = r * q + s
    return r


def unrank(index: int, n: int, q: int) -> Word:
    if not 0 <= index < q ** n:
        raise ValueError(f"rank {index} outside [0, {q ** n - 1}]")
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        index, digits[pos] = divmod(index, q)
    return tuple(digits)


@lru_cache(maxsize=64)
def all_words(n: int, q: int) -> np.ndarray:
    """Digit table of shape (q**n, n); row ``r`` is ``unrank(r, n, q)``."""
    grid = np.indices((q,) * n).reshape(n, -1).T
    grid.setflags(write=False)
    return grid


def ranks_of(digits: np.ndarray, q: int) -> np.ndarray:
    """Vectorised ``rank`` over the rows of a digit table."""
    n = digits.shape[1]
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return digits.astype(np.int64) @ weights


def parse_word(text: str, n: int, q: int) -> Word:
    if not isinstance(text, str) or len(text) != n or not text.isdigit():
        raise ValueError(f"word {text!r} is not a digit string of length {n}")
    word = tuple(int(ch) for ch in text)
    if any(s >= q for s in word):
        raise ValueError(f"word {text!r} uses a symbol outside 0..{q - 1}")
    return word


def format_word(word: Sequence[int]) -> str:
    if any(s > 9 for s in word):
        raise ValueError("digit-string words support q <= 10 only")
    return "".join(str(s) for s in word)


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ValueError(f"rational literal must be a string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _as_object_ints(values: Iterable[int]) -> np.ndarray:
    values = [int(v) for v in values]
    arr = np.empty(len(values), dtype=object)
    arr[:] = values
    return arr


class HammingFunction:
    """An immutable exact rational-valued function on the vertices of H(n, q).

    Values are held as integer numerators over one shared positive
    denominator, reduced so that the gcd of everything is 1.
    """

    __slots__ = ("n", "q", "_num", "_den")

    def __init__(self, n: int, q: int, values: Sequence[Rational]):
        check_space(n, q)
        if len(values) != q ** n:
            raise ValueError(f"expected {q ** n} values for H({n},{q}), got {len(values)}")
        fracs = [Fraction(v) for v in values]
        den = math.lcm(*(v.denominator for v in fracs)) if fracs else 1
        self._init(n, q, [v.numerator * (den // v.denominator) for v in fracs], den)

    def _init(self, n: int, q: int, num, den: int) -> None:
        if den <= 0:
            raise ValueError("denominator must be positive")
        arr = num if isinstance(num, np.ndarray) and num.dtype == object else _as_object_ints(list(num))
        g = math.gcd(den, *arr.tolist())
        if g == 0:
            g = den
        if g != 1:
            arr = arr // g
            den //= g
        if not arr.any():
            den = 1
        arr.setflags(write=False)
        self.n, self.q, self._num, self._den = n, q, arr, den

    @classmethod
    def from_numerators(cls, n: int, q: int, num, den: int = 1) -> "HammingFunction":
        check_space(n, q)
        arr = np.array(num, dtype=object).reshape(-1)
        if arr.shape[0] != q ** n:
            raise ValueError(f"expected {q ** n} values for H({n},{q}), got {arr.shape[0]}")
        obj = np.empty(arr.shape[0], dtype=object)
        obj[:] = [int(v) for v in arr.tolist()]
        f = cls.__new__(cls)
        f._init(n, q, obj, int(den))
        return f

    @classmethod
    def from_entries(cls, n: int, q: int, entries: Mapping) -> "HammingFunction":
        """Build from a sparse mapping ``word-or-rank -> value``; missing vertices are 0."""
        values: list[Rational] = [0] * (q ** n)
        for key, v in entries.items():
            r = key if isinstance(key, int) else rank(key, q)
            if isinstance(key, tuple) and len(key) != n:
                raise ValueError(f"word {key} has length {len(key)}, expected {n}")
            if not 0 <= r < q ** n:
                raise ValueError(f"rank {r} out of range")
            values[r] = v
        return cls(n, q, values)

    @classmethod
    def zeros(cls, n: int, q: int) -> "HammingFunction":
        return cls.from_numerators(n, q, [0] * (q ** n))

    @classmethod
    def constant(cls, n: int, q: int, c: Rational = 1) -> "HammingFunction":
        c = Fraction(c)
        return cls.from_numerators(n, q, [c.numerator] * (q ** n), c.denominator)

    @property
    def size(self) -> int:
        return self.q ** self.n

    @property
    def numerators(self) -> np.ndarray:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def at(self, index: int) -> Fraction:
        if not 0 <= index < self.size:
            raise ValueError(f"rank {index} out of range")
        return Fraction(self._num[index], self._den)

    def __call__(self, *word) -> Fraction:
        if len(word) == 1 and isinstance(word[0], (tuple, list)):
            word = tuple(word[0])
        if len(word) != self.n:
            raise ValueError(f"word of length {len(word)} given to a function on H({self.n},{self.q})")
        return self.at(rank(word, self.q))

    def values(self) -> list[Fraction]:
        return [Fraction(v, self._den) for v in self._num.tolist()]

    def support(self) -> list[int]:
        return [int(r) for r in np.flatnonzero(self._num != 0)]

    def support_size(self) -> int:
        return int(np.count_nonzero(self._num != 0))

    def entries(self) -> list[tuple[Word, Fraction]]:
        return [(unrank(r, self.n, self.q), self.at(r)) for r in self.support()]

    def is_zero(self) -> bool:
        return not self._num.any()

    def value_set(self) -> set[Fraction]:
        return {Fraction(v, self._den) for v in set(self._num.tolist())}

    def _same_space(self, other: "HammingFunction") -> None:
        if not isinstance(other, HammingFunction):
            raise TypeError(f"expected HammingFunction, got {type(other).__name__}")
        if (self.n, self.q) != (other.n, other.q):
            raise ValueError(f"H({self.n},{self.q}) and H({other.n},{other.q}) functions do not mix")

    def __add__(self, other: "HammingFunction") -> "HammingFunction":
        self._same_space(other)
        den = math.lcm(self._den, other._den)
        num = self._num * (den // self._den) + other._num * (den // other._den)
        return HammingFunction.from_numerators(self.n, self.q, num, den)

    def __sub__(self, other: "HammingFunction") -> "HammingFunction":
        return self + (-other)

    def __neg__(self) -> "HammingFunction":
        return HammingFunction.from_numerators(self.n, self.q, -self._num, self._den)

    def __mul__(self, c) -> "HammingFunction":
        if isinstance(c, HammingFunction):
            return NotImplemented
        c = Fraction(c)
        return HammingFunction.from_numerators(self.n, self.q, self._num * c.numerator, self._den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "HammingFunction":
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("division of a function by zero")
        return self * (1 / c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HammingFunction):
            return NotImplemented
        return (
            (self.n, self.q, self._den) == (other.n, other.q, other._den)
            and bool((self._num == other._num).all())
        )

    def __hash__(self) -> int:
        return hash((self.n, self.q, self._den, tuple(self._num.tolist())))

    def __repr__(self) -> str:
        shown = ", ".join(f"{format_word(w) if self.q <= 10 else w}:{v}" for w, v in self.entries()[:6])
        more = ", ..." if self.support_size() > 6 else ""
        return f"HammingFunction(n={self.n}, q={self.q}, {{{shown}{more}}})"


def support_size(f: HammingFunction) -> int:
    return f.support_size()


def to_document(f: HammingFunction) -> dict:
    if f.q > MAX_TEXT_Q:
        raise ValueError(f"the text format supports q <= {MAX_TEXT_Q}")
    return {
        "n": f.n,
        "q": f.q,
        "entries": [[format_word(w), format_rational(v)] for w, v in f.entries()],
    }


def from_document(doc) -> HammingFunction:
    if not isinstance(doc, dict):
        raise ValueError("function document must be a JSON object")
    try:
        n, q, entries = doc["n"], doc["q"], doc["entries"]
    except KeyError as exc:
        raise ValueError(f"function document lacks field {exc.args[0]!r}") from None
    if not (isinstance(n, int) and isinstance(q, int)) or isinstance(n, bool) or isinstance(q, bool):
        raise ValueError("n and q must be integers")
    if q > MAX_TEXT_Q:
        raise ValueError(f"the text format supports q <= {MAX_TEXT_Q}")
    check_space(n, q)
    if not isinstance(entries, list):
        raise ValueError("entries must be a list")
    values: dict[int, Fraction] = {}
    for item in entries:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)):
            raise ValueError(f"malformed entry {item!r}")
        r = rank(parse_word(item[0], n, q), q)
        if r in values:
            raise ValueError(f"duplicate entry for word {item[0]!r}")
        values[r] = parse_rational(item[1])
    return HammingFunction.from_entries(n, q, values)


def serialize(f: HammingFunction) -> str:
    return json.dumps(to_document(f))


def deserialize(text: str) -> HammingFunction:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed function document: {exc}") from None
    return from_document(doc)
