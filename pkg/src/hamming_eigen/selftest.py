"""Invariant battery over a small parameter grid, keyed by result tag."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bitrades as bt
from .blocks import enumerate_B, make_a, make_c, make_d, make_e, tensor_all, tensor_product
from .bounds import check_bound, minsupp, uniform_bound
from .core import HammingFunction, rank
from .families import FAMILIES, FamilySpec, construct, expected_support, valid_triples
from .oracle import SearchBudget, min_support_search
from .reduce import is_uniform, lemma2_checks, lemma3_check
from .spectra import (
    SpectrumInterval,
    decompose,
    eigenspace_basis,
    eigenvalue,
    is_eigenfunction,
    is_member,
)

GRID_N = 4
GRID_Q = (2, 3)


@dataclass(frozen=True)
class SelfTestRow:
    tag: str
    passed: bool
    detail: str


def _intervals(n: int, q: int):
    for i in range(n + 1):
        for j in range(i, n + 1):
            yield SpectrumInterval(n, q, i, j)


def check_blocks() -> str:
    for q in (2, 3, 4):
        for k in range(q):
            for m in range(q):
                a = make_a(q, k, m)
                assert is_member(a, (1, 1)) and a.support_size() == 2 * (q - 1)
                if k != m:
                    c = make_c(q, k, m)
                    assert is_member(c, (1, 1)) and c.support_size() == 2
            d = make_d(q, k)
            assert is_member(d, (0, 1)) and d.support_size() == 1
        assert is_member(make_e(q), (0, 0)) and make_e(q).support_size() == q
    bs = enumerate_B()
    assert all(is_member(b, (2, 2)) and b.support_size() == 6 for b in bs)
    return f"A,C,D,E for q<=4; |B|={len(bs)} images of phi"


def check_lemma1(pairs: int = 30, seed: int = 1) -> str:
    rng = random.Random(seed)
    done = 0
    while done < pairs:
        q = rng.choice(GRID_Q)
        n1, n2 = rng.randint(1, 2), rng.randint(1, 2)
        i1, i2 = rng.randint(0, n1), rng.randint(0, n2)
        f1 = _random_pure(n1, q, i1, rng)
        f2 = _random_pure(n2, q, i2, rng)
        assert is_eigenfunction(tensor_product(f1, f2), i1 + i2)
        done += 1
    return f"{pairs} random pairs"


def _random_pure(n: int, q: int, i: int, rng: random.Random):
    while True:
        f = HammingFunction(n, q, [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(q ** n)])
        part = decompose(f)[i]
        if not part.is_zero():
            return part


def check_lemma2() -> str:
    count = 0
    for q in GRID_Q:
        for n in range(2, GRID_N + 1):
            for iv in _intervals(n, q):
                for f in eigenspace_basis(iv):
                    for r in range(1, n + 1):
                        assert lemma2_checks(f, iv, r)
                        count += 1
    return f"{count} (basis function, coordinate) cases"


def check_lemma3() -> str:
    count = 0
    for q in GRID_Q:
        for n in range(2, GRID_N):
            for iv in _intervals(n - 1, q):
                for g in eigenspace_basis(iv)[:4]:
                    for m in range(q):
                        f = tensor_product(make_d(q, m), g)
                        assert lemma3_check(f, (iv.lo, iv.hi + 1), 1, m)
                        count += 1
    return f"{count} zero-slice cases"


def check_constructions(max_n: int = GRID_N) -> str:
    count = 0
    for fam in FAMILIES:
        for n, i, j in valid_triples(fam, max_n):
            f = construct(FamilySpec(fam, n, i, j))
            assert is_member(f, (i, j)) and f.support_size() == expected_support(fam, n, i, j)
            count += 1
    return f"{count} family members"


def _family_sharp(fam: str, predicate: Callable[[int, int, int], bool], source: str) -> str:
    count = 0
    for n, i, j in valid_triples(fam, GRID_N + 1):
        if not predicate(n, i, j):
            continue
        f = construct(FamilySpec(fam, n, i, j))
        chk = check_bound(f, (i, j))
        assert chk.attained and chk.bound.source == source, (fam, n, i, j, chk)
        count += 1
    return count


def _oracle_agrees(cases) -> int:
    for n, q, i, j in cases:
        iv = SpectrumInterval(n, q, i, j)
        bound = minsupp(n, q, i, j).value
        res = min_support_search(iv, SearchBudget(max_support=bound), symmetry=True)
        assert res.size == bound, (iv, res.size, bound)
    return len(cases)


def check_theorem(tag: str) -> str:
    if tag == "Theorem 3":
        k = _family_sharp("F1", lambda n, i, j: True, "Theorem 3")
        o = _oracle_agrees([(n, 2, i, j) for n in (1, 2, 3) for i in range(n + 1) for j in range(i, n + 1) if i + j <= n])
    elif tag == "Theorem 4":
        k = _family_sharp("F2", lambda n, i, j: True, "Theorem 4")
        o = _oracle_agrees([(n, 2, i, j) for n in (1, 2, 3) for i in range(n + 1) for j in range(i, n + 1) if i + j > n])
    elif tag == "Theorem 5":
        k = _family_sharp("F3", lambda n, i, j: i != j, "Theorem 5")
        o = _oracle_agrees([(3, 3, 2, 2)])
    elif tag == "Corollary 1":
        k = _family_sharp("F3", lambda n, i, j: i == j, "Theorem 5 / Corollary 1")
        o = 0
    elif tag == "Theorem 6":
        k = _family_sharp("F4", lambda n, i, j: i != j, "Theorem 6")
        o = _oracle_agrees([(1, 3, 1, 1), (2, 3, 1, 2), (2, 3, 2, 2), (3, 3, 1, 3), (3, 3, 2, 3)])
    elif tag == "Corollary 2":
        k = _family_sharp("F4", lambda n, i, j: i == j, "Theorem 6 / Corollary 2")
        assert minsupp(4, 3, 3, 3).value == 12
        o = 0
    else:
        raise KeyError(tag)
    return f"{k} sharp family cases, {o} oracle cases"


def check_prior_bound() -> str:
    cases = [(n, 3, i, j) for n in (1, 2, 3) for i in range(n + 1) for j in range(i, n + 1)
             if i + j <= n and minsupp(n, 3, i, j).value <= 6]
    return f"{_oracle_agrees(cases)} oracle cases"


def check_uniform_bound(samples: int = 40, seed: int = 2) -> str:
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        kinds = [rng.choice("ade") for _ in range(rng.randint(1, 3))]
        factors, lo, hi = [], 0, 0
        for kind in kinds:
            if kind == "a":
                factors.append(make_a(3, rng.randrange(3), rng.randrange(3)))
                lo, hi = lo + 1, hi + 1
            elif kind == "d":
                factors.append(make_d(3, rng.randrange(3)))
                hi += 1
            else:
                factors.append(make_e(3))
        f = tensor_all(factors) * rng.choice([1, -2, Fraction(1, 3)])
        assert is_uniform(f) and is_member(f, (lo, hi))
        if lo + hi >= f.n:
            assert f.support_size() >= uniform_bound(f.n, 3, lo, hi)
            checked += 1
    return f"{checked} uniform members in range"


def check_lemma7() -> str:
    ex1 = bt.Bitrade.from_words(3, 2, [(0, 0, 0), (1, 1, 1)], [(0, 0, 1), (1, 1, 0)])
    m1 = bt.minimal_bitrade_q3(1)
    for b, i in ((ex1, 2), (m1, 3)):
        f = bt.to_eigenfunction(b)
        assert eigenvalue(b.n, b.q, i) == -1 and is_eigenfunction(f, i)
        assert f.support_size() == b.size
    return "Example 1 and the H(4,3) bitrade"


def check_existence() -> str:
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(1, 20):
            has_minus_one = any(eigenvalue(n, q, i) == -1 for i in range(n + 1))
            assert bt.exists_bitrade(n, q) == (has_minus_one and n >= q + 1)
    assert bt.exists_bitrade(7, 6) is None
    return "n <= 19, prime powers q <= 9"


def check_bitrade_minimum() -> str:
    sizes = []
    for m in (1, 2):
        b = bt.minimal_bitrade_q3(m)
        assert bt.verify_bitrade(b) and b.size == 2 ** (m + 1) * 3 ** m
        assert minsupp(3 * m + 1, 3, 2 * m + 1, 2 * m + 1).value == b.size
        sizes.append(b.size)
    return f"sizes {sizes} attain the bound"


def check_remark1() -> str:
    for b in (bt.minimal_bitrade_q3(1), bt.minimal_bitrade_q3(2)):
        v = bt.verify_bitrade(b)
        assert v.independent and v.balanced and v.perfect_matching
    return "independence, balance, matching"


def check_remark3() -> str:
    for m in (1, 2):
        n = 3 * m + 1
        f = construct(FamilySpec("F4", n, 2 * m + 1, 2 * m + 1, Fraction(-5, 2)))
        assert bt.verify_bitrade(bt.from_level_sets(f, Fraction(-5, 2)))
    return "F4 level sets with c = -5/2"


def check_example1() -> str:
    b = bt.Bitrade.from_words(3, 2, [(0, 0, 0), (1, 1, 1)], [(0, 0, 1), (1, 1, 0)])
    v = bt.verify_bitrade(b)
    assert v.valid and v.size == 4
    return "size 4 in H(3,2)"


def check_example2() -> str:
    code = lambda words: [rank(w, 2) for w in words]
    c1 = code([(0, 0, 0), (1, 1, 1)])
    c2 = code([(0, 0, 1), (1, 1, 0)])
    b = bt.bitrade_from_codes(3, 2, c1, c2)
    assert bt.verify_bitrade(b)
    return "two repetition-code cosets"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("Blocks", check_blocks),
    ("Lemma 1", check_lemma1),
    ("Lemma 2", check_lemma2),
    ("Lemma 3", check_lemma3),
    ("Lemma constructions", check_constructions),
    ("Theorem 1 (cited)", check_prior_bound),
    ("Theorem 2 (cited)", check_uniform_bound),
    ("Theorem 3", lambda: check_theorem("Theorem 3")),
    ("Theorem 4", lambda: check_theorem("Theorem 4")),
    ("Theorem 5", lambda: check_theorem("Theorem 5")),
    ("Corollary 1", lambda: check_theorem("Corollary 1")),
    ("Theorem 6", lambda: check_theorem("Theorem 6")),
    ("Corollary 2", lambda: check_theorem("Corollary 2")),
    ("Lemma 7", check_lemma7),
    ("Corollary n=qm+1", check_existence),
    ("Theorem bitrade minimum", check_bitrade_minimum),
    ("Remark 1", check_remark1),
    ("Remark 3", check_remark3),
    ("Example 1", check_example1),
    ("Example 2", check_example2),
]


def run_selftest() -> list[SelfTestRow]:
    rows = []
    for tag, fn in CHECKS:
        try:
            rows.append(SelfTestRow(tag, True, fn()))
        except AssertionError as exc:
            rows.append(SelfTestRow(tag, False, f"assertion failed: {exc}"))
    return rows

