import random

import networkx as nx
import pytest

from conftest import complete, cycle, naive_closure, random_connected, simple_need, star, strict_need, to_nx
from majority_dynamo.coloring import STRICT, is_dynamo
from majority_dynamo.errors import CertificateError, GraphFormatError, PreconditionError
from majority_dynamo.graph import Graph, parse_graph, serialize_graph
from majority_dynamo.reduction import (
    Role,
    blocking_set,
    build_gadget,
    check_gadget_invariants,
    domset_to_dynamo,
    dynamo_to_domset,
    greedy_domset,
    is_dominating,
    parse_gadget_map,
    serialize_gadget_map,
    source_from_gadget,
)

P2 = Graph.from_edges(2, [(0, 1)], False)
K3 = complete(3)


def family_edge_count(g):
    """The seven edge families counted separately: v-x, w-N*, w-y, y-z1, y-z2, z1-g1, z2-g2."""
    m = g.m
    return 2 * m + (2 * m + g.n) + 2 * m + 2 * m + 2 * m + 2


@pytest.mark.parametrize("src, n_expected", [(P2, 12), (K3, 22)])
def test_gadget_sizes(src, n_expected):
    gadget, mp = build_gadget(src)
    assert gadget.n == n_expected == 2 * src.n + 4 * src.m + 4
    assert gadget.m == family_edge_count(src)
    assert all(gadget.degree(a) % 2 == 1 for a in range(gadget.n))
    assert mp.size == gadget.n


def test_p2_layout_and_edges():
    gadget, mp = build_gadget(P2)
    assert gadget.m == 14
    assert [str(r) for r in mp.roles] == [
        "V 0", "V 1", "W 0", "W 1", "X 0 1", "X 1 1", "Y 0 1", "Y 1 1", "Z1", "Z2", "G1", "G2",
    ]
    expected = {
        (0, 4), (1, 5),                  # v - x
        (0, 2), (1, 2), (0, 3), (1, 3),  # w_v - N*(v)
        (2, 6), (3, 7),                  # w_v - y
        (6, 8), (7, 8), (6, 9), (7, 9),  # y - z1, z2
        (8, 10), (9, 11),                # z - g
    }
    assert set(gadget.edges()) == expected


def test_gadget_structure_random_sources():
    rnd = random.Random(1)
    for _ in range(20):
        src = random_connected(rnd, rnd.randint(2, 12), 0.2)
        gadget, mp = build_gadget(src)
        h = to_nx(gadget)
        assert nx.is_bipartite(h)
        assert nx.diameter(h) <= 8
        assert nx.eccentricity(h, mp.z1) <= 4
        a, b = mp.parts()
        assert nx.algorithms.bipartite.is_bipartite_node_set(h, a)
        for v in range(src.n):
            d = src.degree(v)
            assert gadget.degree(v) == 2 * d + 1
            assert gadget.degree(mp.w(v)) == 2 * d + 1
            assert set(gadget.neighbors(mp.w(v))) == set(mp.ys(v)) | set(src.closed_neighborhood(v))
        assert gadget.degree(mp.z1) == gadget.degree(mp.z2) == 1 + sum(src.degree(v) for v in range(src.n))
        roles = [r.kind for r in mp.roles]
        assert sorted(roles.count(k) for k in ("X", "Y")) == [2 * src.m] * 2


def test_build_gadget_rejects_isolated_and_directed():
    with pytest.raises(PreconditionError):
        build_gadget(Graph.from_edges(3, [(0, 1)], False))
    with pytest.raises(PreconditionError):
        build_gadget(cycle(3, directed=True))


def test_check_gadget_invariants():
    for src in (P2, K3, random_connected(random.Random(2), 10, 0.2)):
        report = check_gadget_invariants(*build_gadget(src))
        assert report.ok, report.lines()
        assert report.z1_eccentricity <= 4


def test_strict_equals_simple_on_gadget():
    rnd = random.Random(3)
    gadget, _ = build_gadget(random_connected(rnd, 8, 0.3))
    for _ in range(50):
        seeds = [a for a in range(gadget.n) if rnd.random() < 0.15]
        assert naive_closure(gadget, seeds, strict_need) == naive_closure(gadget, seeds, simple_need)


def test_domset_to_dynamo_examples():
    gadget, mp = build_gadget(P2)
    seeds = domset_to_dynamo(mp, [0])
    assert seeds == [0, mp.z1, mp.z2]
    assert naive_closure(gadget, seeds, strict_need) == list(range(12))

    gadget, mp = build_gadget(K3)
    seeds = domset_to_dynamo(mp, [0], gadget)
    assert len(seeds) == 3
    assert naive_closure(gadget, seeds, strict_need) == list(range(22))

    everything = domset_to_dynamo(mp, range(3), gadget)
    assert len(everything) == 5 and is_dynamo(gadget, everything, STRICT)


def test_domset_to_dynamo_rejects_non_dominating():
    _, mp = build_gadget(star(3))
    with pytest.raises(CertificateError, match="vertex 2"):
        domset_to_dynamo(mp, [1])


def test_dynamo_to_domset_examples():
    gadget, mp = build_gadget(P2)
    assert dynamo_to_domset(mp, [0, mp.z1, mp.z2]) == [0]
    assert dynamo_to_domset(mp, range(gadget.n), gadget) == [0, 1]
    gadget, mp = build_gadget(K3)
    assert dynamo_to_domset(mp, [1, mp.z1, mp.z2], gadget) == [1]


def test_dynamo_to_domset_maps_w_and_x_to_owner():
    gadget, mp = build_gadget(K3)
    s = [mp.w(v) for v in range(3)] + [mp.z1, mp.z2]
    assert is_dynamo(gadget, s, STRICT)
    assert dynamo_to_domset(mp, s, gadget) == [0, 1, 2]
    s = [mp.w(2), 2, mp.z1, mp.z2]
    assert dynamo_to_domset(mp, s, gadget) == [2]
    s = [0, mp.xs(1)[0], mp.z1, mp.z2]
    assert is_dynamo(gadget, s, STRICT)
    assert dynamo_to_domset(mp, s, gadget) == [0, 1]


def test_dynamo_to_domset_rejects_non_dynamo():
    gadget, mp = build_gadget(P2)
    with pytest.raises(CertificateError, match="blocking set"):
        dynamo_to_domset(mp, [mp.z1, mp.z2], gadget)


def test_blocking_set_p2():
    _, mp = build_gadget(P2)
    assert blocking_set(mp, 0) == [0, 1, 2, 4, 5]
    assert len(blocking_set(mp, 0)) == 5


def test_blocking_sets_are_closed_complements():
    rnd = random.Random(4)
    for _ in range(15):
        src = random_connected(rnd, rnd.randint(2, 15), 0.15)
        gadget, mp = build_gadget(src)
        for v in range(src.n):
            b = set(blocking_set(mp, v))
            rest = [a for a in range(gadget.n) if a not in b]
            assert naive_closure(gadget, rest, strict_need) == rest
            for alpha in b:
                inside = sum(1 for u in gadget.neighbors(alpha) if u in b)
                assert 2 * inside > gadget.degree(alpha)


def test_greedy_domset_examples():
    for n in (2, 5, 9):
        assert len(greedy_domset(complete(n))) == 1
    assert greedy_domset(cycle(6)) == [0, 3]
    assert greedy_domset(star(4)) == [0]
    with pytest.raises(PreconditionError):
        greedy_domset(Graph.from_edges(3, [(0, 1)], False))


def test_greedy_domset_dominates_random():
    rnd = random.Random(5)
    for _ in range(30):
        g = random_connected(rnd, rnd.randint(2, 40), 0.1)
        assert is_dominating(g, greedy_domset(g))[0]


def test_round_trip_degradation():
    rnd = random.Random(6)
    for _ in range(20):
        src = random_connected(rnd, rnd.randint(2, 12), 0.2)
        gadget, mp = build_gadget(src)
        d = greedy_domset(src)
        back = dynamo_to_domset(mp, domset_to_dynamo(mp, d, gadget), gadget)
        assert is_dominating(src, back)[0]
        assert len(back) <= len(d) + 2


def test_map_file_round_trip():
    gadget, mp = build_gadget(K3)
    text = serialize_gadget_map(mp)
    assert text.splitlines()[0] == "0 V 0"
    assert text.splitlines()[-1] == "21 G2"
    roles = parse_gadget_map(text)
    assert roles == list(mp.roles)
    src, mp2 = source_from_gadget(parse_graph(serialize_graph(gadget)), roles)
    assert src == K3 and mp2 == mp


@pytest.mark.parametrize("text", ["0 V\n", "0 Q 1\n", "1 V 0\n", "0 X 0\n", "zero V 0\n"])
def test_map_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_gadget_map(text)


def test_source_from_gadget_rejects_mismatch():
    gadget, mp = build_gadget(K3)
    roles = list(mp.roles)
    roles[4], roles[5] = roles[5], roles[4]
    with pytest.raises(PreconditionError):
        source_from_gadget(gadget, roles)
    with pytest.raises(PreconditionError):
        source_from_gadget(gadget, roles[:-1])
    assert Role("X", 0, 1) != Role("X", 0, 2)
