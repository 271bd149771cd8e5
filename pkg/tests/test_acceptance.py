"""Acceptance criteria 1-7, one pass/fail line each.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
All checks are exact; timing limits are pinned below.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import pytest

from hamming_eigen import bitrades as bt
from hamming_eigen.blocks import enumerate_B, make_a, make_c, make_d, make_e, make_phi, tensor_product
from hamming_eigen.bounds import minsupp
from hamming_eigen.core import HammingFunction
from hamming_eigen.families import FAMILIES, FamilySpec, construct, expected_support, valid_triples
from hamming_eigen.oracle import SearchBudget, agreement_table, min_support_search
from hamming_eigen.reduce import lemma2_checks, lemma3_check, zero_slice_symbols
from hamming_eigen.spectra import (
    SpectrumInterval,
    apply_adjacency,
    decompose,
    eigenspace_basis,
    is_eigenfunction,
    is_member,
)

BLOCKS_SECONDS = 1.0
RESTRICTION_SECONDS = 60.0
BITRADE_M2_SECONDS = 10.0
ORACLE_SECONDS = 300.0
TENSOR_PAIRS = 100


def criterion_1() -> str:
    start = time.perf_counter()
    for q in (2, 3, 4):
        for k in range(q):
            for m in range(q):
                a = make_a(q, k, m)
                assert is_member(a, (1, 1)) and a.support_size() == 2 * (q - 1), (q, k, m)
                if k != m:
                    c = make_c(q, k, m)
                    assert is_member(c, (1, 1)) and c.support_size() == 2
            d = make_d(q, k)
            assert is_member(d, (0, 1)) and not is_member(d, (1, 1)) and d.support_size() == 1
        e = make_e(q)
        assert is_member(e, (0, 0)) and e.support_size() == q
    phi = make_phi()
    assert is_member(phi, (2, 2)) and phi.support_size() == 6
    assert all(is_member(b, (2, 2)) and b.support_size() == 6 for b in enumerate_B())
    elapsed = time.perf_counter() - start
    assert elapsed < BLOCKS_SECONDS, f"{elapsed:.2f}s"
    return f"a, c, d, e for q in 2..4, phi and its images, {elapsed:.2f}s"


def _pure(n: int, q: int, rng: random.Random):
    while True:
        f = HammingFunction(n, q, [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(q ** n)])
        i = rng.randint(0, n)
        part = decompose(f)[i]
        if not part.is_zero():
            return part, i


def criterion_2(seed: int = 2024) -> str:
    rng = random.Random(seed)
    for _ in range(TENSOR_PAIRS):
        q = rng.choice((2, 3))
        (f1, i1), (f2, i2) = _pure(rng.randint(1, 3), q, rng), _pure(rng.randint(1, 3), q, rng)
        g = tensor_product(f1, f2)
        assert is_eigenfunction(g, i1 + i2) and is_member(g, (i1 + i2, i1 + i2))
    return f"{TENSOR_PAIRS} random pure pairs, seed {seed}"


def criterion_3() -> str:
    start = time.perf_counter()
    restrictions = zero_slices = 0
    for q in (2, 3):
        for n in range(2, 5):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    iv = SpectrumInterval(n, q, i, j)
                    for f in eigenspace_basis(iv):
                        for r in range(1, n + 1):
                            assert lemma2_checks(f, iv, r), (iv, r)
                            restrictions += 1
                            for m in zero_slice_symbols(f, r):
                                assert lemma3_check(f, iv, r, m)
                                zero_slices += 1
                    if j < n:
                        # functions with a single nonzero slice at coordinate 1
                        for g in eigenspace_basis(SpectrumInterval(n - 1, q, i, j)):
                            for m in range(q):
                                assert lemma3_check(tensor_product(make_d(q, m), g), (i, j + 1), 1, m)
                                zero_slices += 1
    elapsed = time.perf_counter() - start
    assert elapsed < RESTRICTION_SECONDS, f"{elapsed:.1f}s"
    return f"{restrictions} restriction cases, {zero_slices} zero-slice cases, {elapsed:.1f}s"


def criterion_4() -> str:
    count = 0
    for family in FAMILIES:
        for n, i, j in valid_triples(family, 5):
            spec = FamilySpec(family, n, i, j)
            f = construct(spec)
            size = f.support_size()
            assert is_member(f, (i, j)), (family, n, i, j)
            assert size == expected_support(family, n, i, j) == minsupp(n, spec.q, i, j).value, (family, n, i, j)
            count += 1
    return f"{count} family members with n <= 5"


def criterion_5() -> str:
    start = time.perf_counter()
    named = {
        (1, 3, 1, 1): 2,
        (1, 2, 0, 1): 1,
        (2, 3, 1, 1): 4,
        (3, 3, 2, 2): 6,
    }
    for (n, q, i, j), value in named.items():
        res = min_support_search(SpectrumInterval(n, q, i, j), SearchBudget(max_support=6))
        assert res.size == value == minsupp(n, q, i, j).value, (n, q, i, j, res.size)
    rows = agreement_table(max_vertices=27, max_bound=6)
    bad = [(str(iv), bound, found) for iv, bound, found in rows if bound != found]
    assert not bad, bad
    elapsed = time.perf_counter() - start
    assert elapsed < ORACLE_SECONDS
    return f"{len(rows)} covered spaces with q^n <= 27 and bound <= 6, {elapsed:.1f}s"


def criterion_6() -> str:
    ex1 = bt.Bitrade.from_words(3, 2, [(0, 0, 0), (1, 1, 1)], [(0, 0, 1), (1, 1, 0)])
    v = bt.verify_bitrade(ex1)
    assert v.valid and v.size == 4
    b1 = bt.minimal_bitrade_q3(1)
    v1 = bt.verify_bitrade(b1)
    assert v1.valid and b1.size == 12 == 2 ** 2 * 3
    f = bt.to_eigenfunction(b1)
    assert apply_adjacency(f) == -f
    # minimality of 12 rests on the bound value at (4, 3, 3, 3)
    assert minsupp(4, 3, 3, 3).value == 12
    start = time.perf_counter()
    b2 = bt.minimal_bitrade_q3(2)
    v2 = bt.verify_bitrade(b2)
    elapsed = time.perf_counter() - start
    assert v2.valid and b2.size == 72 and b2.n == 7
    assert elapsed < BITRADE_M2_SECONDS, f"{elapsed:.2f}s"
    return f"sizes 4, 12, 72; H(7,3) in {elapsed:.2f}s"


def criterion_7() -> str:
    perturbed = 0
    for family in FAMILIES:
        for n, i, j in valid_triples(family, 4):
            if (i, j) == (0, n):
                # every function lies in the full space
                continue
            f = construct(FamilySpec(family, n, i, j))
            assert is_member(f, (i, j))
            for x in range(f.size):
                bump = HammingFunction.from_entries(n, f.q, {x: 1})
                assert not is_member(f + bump, (i, j)), (family, n, i, j, x)
                perturbed += 1
    moved = 0
    for b in (
        bt.Bitrade.from_words(3, 2, [(0, 0, 0), (1, 1, 1)], [(0, 0, 1), (1, 1, 0)]),
        bt.minimal_bitrade_q3(1),
    ):
        assert bt.verify_bitrade(b)
        used = set(b.T0) | set(b.T1)
        free = [x for x in range(b.q ** b.n) if x not in used]
        for part in (0, 1):
            members = b.T0 if part == 0 else b.T1
            for v in members:
                for t in free:
                    rest = tuple(t if x == v else x for x in members)
                    moved_b = bt.Bitrade(b.n, b.q, rest, b.T1) if part == 0 else bt.Bitrade(b.n, b.q, b.T0, rest)
                    verdict = bt.verify_bitrade(moved_b)
                    assert not verdict.valid and verdict.counterexample is not None
                    moved += 1
    return f"{perturbed} single-value perturbations, {moved} single-vertex moves rejected"


CRITERIA = [
    (1, "building-block certification", criterion_1),
    (2, "tensor products of pure eigenfunctions", criterion_2),
    (3, "restriction and zero-slice properties", criterion_3),
    (4, "family sharpness", criterion_4),
    (5, "exhaustive search agrees with closed forms", criterion_5),
    (6, "bitrade suite", criterion_6),
    (7, "negative controls", criterion_7),
]


def judge(number: int, title: str, check) -> tuple[bool, str]:
    try:
        return True, f"criterion {number} PASS  {title}: {check()}"
    except AssertionError as exc:
        return False, f"criterion {number} FAIL  {title}: {exc}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, line = judge(number, title, check)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [judge(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
