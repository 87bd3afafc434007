import itertools
import random
from math import comb

import pytest

from conftest import complete, cycle, naive_closure, path, random_connected, random_digraph, star, strict_need
from majority_dynamo.coloring import SIMPLE, STRICT, ThresholdScenario, is_dynamo
from majority_dynamo.directed import find_dynamo_directed
from majority_dynamo.errors import OracleLimitError, PreconditionError
from majority_dynamo.graph import Graph
from majority_dynamo.oracle import (
    bits,
    iter_dynamos,
    masks_of_size,
    min_domset_bruteforce,
    min_dynamo_bruteforce,
)
from majority_dynamo.reduction import is_dominating
from majority_dynamo.undirected import find_dynamo_undirected


def combos_min_dynamo(g, need):
    for r in range(g.n + 1):
        hits = [c for c in itertools.combinations(range(g.n), r) if len(naive_closure(g, c, need)) == g.n]
        if hits:
            return r, list(min(hits, key=lambda c: sum(1 << v for v in c)))


def test_dynamo_examples():
    assert min_dynamo_bruteforce(complete(5), STRICT).optimum_size == 3
    assert min_dynamo_bruteforce(cycle(5, directed=True), STRICT).optimum_size == 1
    assert min_dynamo_bruteforce(cycle(6), SIMPLE).optimum_size == 1
    res = min_dynamo_bruteforce(cycle(6), STRICT)
    assert res.optimum_size == 3 and res.witness == [0, 2, 4]
    assert not res.budget_exhausted


def test_domset_examples():
    assert min_domset_bruteforce(complete(4)).optimum_size == 1
    assert min_domset_bruteforce(cycle(6)).optimum_size == 2
    assert min_domset_bruteforce(path(2)).witness == [0]
    assert min_domset_bruteforce(star(5)).witness == [0]
    with pytest.raises(PreconditionError):
        min_domset_bruteforce(cycle(3, directed=True))


def test_gosper_order():
    for n in range(0, 9):
        for r in range(0, n + 1):
            masks = list(masks_of_size(n, r))
            assert masks == sorted(masks)
            assert len(masks) == comb(n, r)
            assert all(bin(m).count("1") == r for m in masks)
    assert list(masks_of_size(3, 4)) == []
    assert bits(0b101100) == [2, 3, 5]


def test_witness_is_first_in_mask_order():
    # mask order: {0,1} < {0,2} < {1,2} < {0,3}; on K3 the first pair wins
    assert min_dynamo_bruteforce(complete(3), STRICT).witness == [0, 1]
    assert list(iter_dynamos(complete(3), STRICT, 2)) == [[0, 1], [0, 2], [1, 2]]


def test_budget_exhausted():
    res = min_dynamo_bruteforce(complete(5), STRICT, max_size=2)
    assert res.optimum_size is None and res.witness is None and res.budget_exhausted
    assert res.subsets_examined == 1 + 5 + 10
    with pytest.raises(PreconditionError):
        min_dynamo_bruteforce(complete(3), STRICT, max_size=4)


def test_cap_and_preconditions():
    big = cycle(33)
    with pytest.raises(OracleLimitError):
        min_dynamo_bruteforce(big, STRICT)
    with pytest.raises(OracleLimitError):
        min_domset_bruteforce(big)
    with pytest.raises(PreconditionError):
        min_dynamo_bruteforce(Graph.from_edges(2, [(0, 1)], True), STRICT)


def test_matches_combinations_enumeration():
    rnd = random.Random(1)
    for _ in range(40):
        n = rnd.randint(2, 8)
        g = random_digraph(rnd, n, 0.35) if rnd.random() < 0.5 else random_connected(rnd, n, 0.3)
        r, c = combos_min_dynamo(g, strict_need)
        res = min_dynamo_bruteforce(g, STRICT)
        assert res.optimum_size == r
        assert is_dynamo(g, res.witness, STRICT)
        assert sorted(res.witness) == c
        if not g.directed:
            d = min_domset_bruteforce(g)
            assert is_dominating(g, d.witness)[0]
            assert not any(is_dominating(g, c)[0] for c in itertools.combinations(range(n), d.optimum_size - 1))


def test_iter_dynamos_complete_listing():
    g = cycle(6)
    listed = list(iter_dynamos(g, STRICT, 3))
    brute = [list(c) for c in itertools.combinations(range(6), 3) if is_dynamo(g, c, STRICT)]
    assert listed == sorted(brute, key=lambda c: sum(1 << v for v in c))


def test_oracle_below_undirected_algorithm():
    rnd = random.Random(2)
    for _ in range(40):
        g = random_connected(rnd, rnd.randint(2, 10), 0.3)
        opt = min_dynamo_bruteforce(g, STRICT).optimum_size
        alg = len(find_dynamo_undirected(g).seeds)
        assert opt <= alg <= (g.n + 1) // 2


def test_fraction_optimum_within_bound():
    rnd = random.Random(3)
    for _ in range(40):
        n = rnd.randint(2, 8)
        g = random_digraph(rnd, n, 0.3)
        k = rnd.randint(1, 3)
        s = ThresholdScenario.fraction(k)
        opt = min_dynamo_bruteforce(g, s).optimum_size
        alg = find_dynamo_directed(g, k)
        assert opt <= len(alg) <= k * n // (k + 1)
        assert is_dynamo(g, alg, s)


def test_size_bounded_search_may_exceed_cap():
    big = cycle(40)
    res = min_dynamo_bruteforce(big, SIMPLE, max_size=2)
    assert res.optimum_size == 1 and res.witness == [0]
    with pytest.raises(OracleLimitError):
        min_dynamo_bruteforce(big, STRICT, max_size=20)
    assert list(iter_dynamos(big, SIMPLE, 1))[:2] == [[0], [1]]
