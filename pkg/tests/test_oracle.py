from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from hamming_eigen.blocks import make_a, make_c, make_d, tensor_product
from hamming_eigen.core import HammingFunction, to_document
from hamming_eigen.linalg import nullspace
from hamming_eigen.oracle import (
    BudgetExceeded,
    SearchBudget,
    agreement_table,
    has_vector_supported_in,
    min_support_search,
    sparsest_kernel_vector,
    verify_minimality,
)
from hamming_eigen.spectra import SpectrumInterval, eigenspace_basis


def brute_force_min_support(basis, limit):
    """Smallest |S| admitting a nonzero member supported in S, by complement rank."""
    size = basis[0].size
    for s in range(1, limit + 1):
        for support in itertools.combinations(range(size), s):
            if has_vector_supported_in(basis, support):
                return s, support
    return None, None


@pytest.mark.parametrize("seed", range(6))
def test_planted_sparse_vector(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 4)
    planted = [0] * 8
    for c in rng.sample(range(8), k):
        planted[c] = rng.choice([-3, -2, -1, 1, 2, 5])
    dense = [[rng.randint(-4, 4) for _ in range(8)] for _ in range(2)]
    span = [planted] + dense
    check = np.array([[int(x * 1) for x in row] for row in _integer(nullspace(span, 8))], dtype=object)
    found = sparsest_kernel_vector(check, max_support=8)
    basis = [HammingFunction(3, 2, row) for row in span]
    expected, support = brute_force_min_support(basis, 8)
    assert found.size == expected <= k
    assert found.support == support
    vec = [0] * 8
    for c, v in zip(found.support, found.vector):
        vec[c] = v
    assert not check.dot(np.array(vec, dtype=object)).any()


def _integer(rows):
    out = []
    for row in rows:
        den = 1
        for v in row:
            den = den * v.denominator // np.gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


@pytest.mark.parametrize(
    "n,q,i,j", [(1, 3, 1, 1), (1, 2, 0, 1), (2, 2, 1, 1), (2, 3, 1, 1), (2, 3, 1, 2), (2, 3, 2, 2), (2, 3, 0, 0)]
)
def test_search_matches_brute_force(n, q, i, j):
    iv = SpectrumInterval(n, q, i, j)
    res = min_support_search(iv, SearchBudget(max_support=9))
    expected, support = brute_force_min_support(eigenspace_basis(iv), 9)
    assert res.size == expected
    assert tuple(res.witness.support()) == support


def test_frozen_small_witnesses():
    res = min_support_search(SpectrumInterval(1, 3, 1, 1))
    assert res.size == 2
    assert res.witness == make_c(3, 0, 1)
    res = min_support_search(SpectrumInterval(1, 2, 0, 1))
    assert res.size == 1 and res.witness == make_d(2, 0)
    assert min_support_search(SpectrumInterval(2, 3, 1, 1)).size == 4


# frozen output of the exhaustive search over H(3,3)
FROZEN_U2_33 = {
    "n": 3,
    "q": 3,
    "entries": [["000", "1/1"], ["011", "-1/1"], ["102", "-1/1"], ["121", "1/1"], ["212", "1/1"], ["220", "-1/1"]],
}


def test_headline_case_with_and_without_anchor():
    iv = SpectrumInterval(3, 3, 2, 2)
    plain = min_support_search(iv, SearchBudget(max_support=6))
    anchored = min_support_search(iv, SearchBudget(max_support=6), symmetry=True)
    assert plain.size == anchored.size == 6
    assert to_document(plain.witness) == to_document(anchored.witness) == FROZEN_U2_33
    assert anchored.subsets_examined < plain.subsets_examined


def test_parallel_search_agrees():
    iv = SpectrumInterval(2, 3, 1, 1)
    one = min_support_search(iv, jobs=1)
    two = min_support_search(iv, jobs=2)
    assert one.witness == two.witness and one.size == two.size


def test_budget_limits():
    iv = SpectrumInterval(3, 3, 2, 2)
    capped = min_support_search(iv, SearchBudget(max_support=4))
    assert not capped.found and capped.stopped == "max-support" and capped.lower_bound == 5
    starved = min_support_search(iv, SearchBudget(max_support=6, max_subsets=1000))
    assert not starved.found and starved.stopped == "max-subsets"
    assert starved.subsets_examined <= 1000
    with pytest.raises(BudgetExceeded):
        min_support_search(SpectrumInterval(7, 3, 5, 5))
    with pytest.raises(ValueError):
        SearchBudget(max_support=0)


def test_verify_minimality():
    a = make_a(3, 0, 0)
    assert verify_minimality(a, SpectrumInterval(2, 3, 1, 1)).status == "minimal"
    fat = a + 2 * make_a(3, 1, 1)
    assert fat.support_size() == 6
    v = verify_minimality(fat, SpectrumInterval(2, 3, 1, 1))
    assert v.status == "not-minimal" and v.lower_bound == 4 and v.smaller.support_size() == 4
    big = tensor_product(make_a(3, 0, 0), make_d(3, 0))
    v = verify_minimality(big, SpectrumInterval(3, 3, 1, 2), SearchBudget(max_support=2))
    assert v.status == "inconclusive" and v.lower_bound == 3
    with pytest.raises(ValueError):
        verify_minimality(make_d(3, 0), SpectrumInterval(1, 3, 1, 1))


def test_agreement_table_small():
    rows = agreement_table(max_vertices=9, max_bound=4)
    assert rows and all(bound == found for _, bound, found in rows)
