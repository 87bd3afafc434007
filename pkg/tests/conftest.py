import random

import networkx as nx
import pytest

from majority_dynamo.graph import Graph


def naive_closure(g, seeds, need_fn):
    """Repeated full sweeps until nothing changes. ``need_fn(indegree) -> int``."""
    white = set(seeds)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if v in white:
                continue
            if sum(1 for u in g.in_adj[v] if u in white) >= need_fn(len(g.in_adj[v])):
                white.add(v)
                changed = True
    return sorted(white)


def strict_need(d):
    # more than half
    return d // 2 + 1


def simple_need(d):
    # at least half
    return (d + 1) // 2


def to_nx(g):
    h = nx.DiGraph() if g.directed else nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), list(h.edges()), h.is_directed())


def random_connected(rng: random.Random, n: int, extra_p: float) -> Graph:
    """Random spanning tree plus G(n, p) extras; always connected."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges), False)


def random_digraph(rng: random.Random, n: int, p: float) -> Graph:
    """Random digraph with every indegree positive (repair by one random arc)."""
    arcs = {(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p}
    for v in range(n):
        if not any(b == v for _, b in arcs):
            u = rng.choice([w for w in range(n) if w != v])
            arcs.add((u, v))
    return Graph.from_edges(n, sorted(arcs), True)


def cycle(n, directed=False):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], directed)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], False)


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], False)


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], False)


@pytest.fixture
def rng():
    return random.Random(20260101)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
