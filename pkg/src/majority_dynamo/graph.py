"""Simple directed / undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``. Undirected graphs store the same neighbour lists as
both ``out_adj`` and ``in_adj``, so every algorithm that only reads
in-neighbours works on them unchanged (an undirected graph *is* the
bidirected digraph).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphFormatError, PreconditionError

UNREACHABLE = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    directed: bool
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and bad ids.

        For undirected graphs each edge may be given in either orientation but
        only once.
        """
        if n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {n}")
        out_sets: list[set[int]] = [set() for _ in range(n)]
        in_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_edge(n, u, v, directed, out_sets)
            out_sets[u].add(v)
            in_sets[v].add(u)
            if not directed:
                out_sets[v].add(u)
                in_sets[u].add(v)
        out_adj = tuple(tuple(sorted(s)) for s in out_sets)
        in_adj = out_adj if not directed else tuple(tuple(sorted(s)) for s in in_sets)
        return cls(n, directed, out_adj, in_adj)

    @property
    def m(self) -> int:
        """Edge count (arcs for digraphs, unordered edges otherwise)."""
        total = sum(len(a) for a in self.out_adj)
        return total if self.directed else total // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order; undirected edges as ``(u, v)`` with ``u < v``."""
        if self.directed:
            return [(u, v) for u in range(self.n) for v in self.out_adj[u]]
        return [(u, v) for u in range(self.n) for v in self.out_adj[u] if u < v]

    def indegree(self, v: int) -> int:
        return len(self.in_adj[v])

    def outdegree(self, v: int) -> int:
        return len(self.out_adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """N(v) of an undirected graph."""
        return self.out_adj[v]

    def degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def closed_neighborhood(self, v: int) -> list[int]:
        """N*(v) = {v} ∪ N(v), sorted."""
        return sorted((v, *self.out_adj[v]))

    def as_bidirected(self) -> "Graph":
        """Same graph flagged as directed, each undirected edge becoming two arcs."""
        if self.directed:
            return self
        return Graph(self.n, True, self.out_adj, self.in_adj)

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len(vertices)-1``, plus the id map back."""
        ids = sorted(vertices)
        local = {v: i for i, v in enumerate(ids)}
        edges = [(local[u], local[v]) for u, v in self.edges() if u in local and v in local]
        return Graph.from_edges(len(ids), edges, self.directed), ids


def _check_edge(n, u, v, directed, out_sets, line=None):
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"vertex id out of range in edge ({u}, {v}) for n={n}", line)
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", line)
    if v in out_sets[u] or (not directed and u in out_sets[v]):
        raise GraphFormatError(f"duplicate edge ({u}, {v})", line)


@dataclass(frozen=True)
class Diagnostics:
    is_simple: bool
    min_indegree: int
    is_connected: bool
    isolated_vertices: list[int]
    zero_indegree: list[int]

    @property
    def is_network(self) -> bool:
        """Usable as a coloring network (every vertex has an in-neighbour)."""
        return self.is_simple and not self.zero_indegree


def validate(g: Graph) -> Diagnostics:
    """Report structural facts about ``g``; never raises.

    Connectivity of a digraph is weak connectivity.
    """
    simple = True
    for v in range(g.n):
        out = g.out_adj[v]
        if v in out or len(set(out)) != len(out):
            simple = False
    transpose = [[] for _ in range(g.n)]
    for u in range(g.n):
        for v in g.out_adj[u]:
            transpose[v].append(u)
    if any(sorted(transpose[v]) != list(g.in_adj[v]) for v in range(g.n)):
        simple = False
    indeg = [len(a) for a in g.in_adj]
    isolated = [v for v in range(g.n) if not g.in_adj[v] and not g.out_adj[v]]
    zero_in = [v for v in range(g.n) if indeg[v] == 0]
    comps = weak_components(g)
    return Diagnostics(
        is_simple=simple,
        min_indegree=min(indeg, default=0),
        is_connected=len(comps) <= 1,
        isolated_vertices=isolated,
        zero_indegree=zero_in,
    )


def require_network(g: Graph) -> None:
    """Raise unless every vertex has positive indegree."""
    zero = [v for v in range(g.n) if not g.in_adj[v]]
    if zero:
        shown = ", ".join(map(str, zero[:10]))
        raise PreconditionError(f"vertices with indegree 0: {shown}" + (" ..." if len(zero) > 10 else ""))


def require_undirected(g: Graph) -> None:
    if g.directed:
        raise PreconditionError("operation requires an undirected graph")


# --------------------------------------------------------------------------- traversal


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Edge-count distances from ``source`` along out-arcs; ``inf`` if unreachable."""
    if not 0 <= source < g.n:
        raise PreconditionError(f"source {source} out of range for n={g.n}")
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.out_adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def induced_components(g: Graph, subset: Iterable[int]) -> list[list[int]]:
    """Connected components of G[subset], each sorted, ordered by smallest member."""
    inside = [False] * g.n
    for v in subset:
        inside[v] = True
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if not inside[s] or seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.out_adj[u]:
                if inside[w] and not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
            if g.directed:
                for w in g.in_adj[u]:
                    if inside[w] and not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def weak_components(g: Graph) -> list[list[int]]:
    return induced_components(g, range(g.n))


# --------------------------------------------------------------------------- file formats


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_graph(text: str) -> Graph:
    """Parse the ``p <directed|undirected> n m`` / ``e u v`` edge-list format."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'p' header line") from None
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] not in ("directed", "undirected"):
        raise GraphFormatError(f"malformed header {header!r}", lineno)
    directed = parts[1] == "directed"
    n, m = _ints(parts[2:], lineno)
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count", lineno)

    out_sets: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"malformed edge line {line!r}", lineno)
        u, v = _ints(parts[1:], lineno)
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        _check_edge(n, u, v, directed, out_sets, lineno)
        out_sets[u].add(v)
        if not directed:
            out_sets[v].add(u)
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(n, edges, directed)


def serialize_graph(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    edges = g.edges()
    lines = [f"p {kind} {g.n} {len(edges)}"]
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str, n: int | None = None) -> list[int]:
    """One decimal id per line; returns the ids sorted. Duplicates are rejected."""
    out = []
    seen = set()
    for lineno, line in _content_lines(text):
        (v,) = _ints([line], lineno)
        if v < 0 or (n is not None and v >= n):
            raise GraphFormatError(f"vertex id {v} out of range", lineno)
        if v in seen:
            raise GraphFormatError(f"duplicate vertex id {v}", lineno)
        seen.add(v)
        out.append(v)
    return sorted(out)


def serialize_vertex_set(vertices: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in sorted(vertices))


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


# --------------------------------------------------------------------------- generators

GENERATOR_KINDS = ("complete", "cycle", "path", "grid-torus", "random-gnp", "random-digraph")


def generate(kind: str, seed: int = 0, **params) -> Graph:
    """Deterministic graph generators.

    ``complete(n, directed=False)``, ``cycle(n, directed=False)``,
    ``path(n, directed=False)``, ``grid-torus(rows, cols)``,
    ``random-gnp(n, p, connected=False)``, ``random-digraph(n, p)``.

    Random digraphs get one arc from a uniformly random other vertex into
    each vertex left with indegree 0. ``connected=True`` on G(n, p) joins
    consecutive components with a random edge.
    """
    rng = np.random.default_rng(seed)
    try:
        builder = _GENERATORS[kind]
    except KeyError:
        raise PreconditionError(f"unknown generator {kind!r}; choose from {', '.join(GENERATOR_KINDS)}") from None
    try:
        return builder(rng, **params)
    except TypeError as exc:
        raise PreconditionError(f"bad parameters for {kind}: {exc}") from None


def _need(cond, msg):
    if not cond:
        raise PreconditionError(msg)


def _complete(rng, n, directed=False):
    _need(n >= 1, "complete graph needs n >= 1")
    if directed:
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(n) if u != v], True)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], False)


def _cycle(rng, n, directed=False):
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], directed)


def _path(rng, n, directed=False):
    _need(n >= 2, "path needs n >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], directed)


def _torus(rng, rows, cols):
    _need(rows >= 3 and cols >= 3, "grid-torus needs rows, cols >= 3")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            edges.append((v, r * cols + (c + 1) % cols))
            edges.append((v, ((r + 1) % rows) * cols + c))
    return Graph.from_edges(rows * cols, edges, False)


def _gnp(rng, n, p, connected=False):
    _need(n >= 1, "random-gnp needs n >= 1")
    _need(0 < p < 1, "random-gnp needs 0 < p < 1")
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    if connected:
        g = Graph.from_edges(n, edges, False)
        comps = weak_components(g)
        for a, b in zip(comps, comps[1:]):
            edges.append((a[rng.integers(len(a))], b[rng.integers(len(b))]))
    return Graph.from_edges(n, edges, False)


def _digraph(rng, n, p):
    _need(n >= 2, "random-digraph needs n >= 2")
    _need(0 < p < 1, "random-digraph needs 0 < p < 1")
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    for v in range(n):
        if not mask[:, v].any():
            u = int(rng.integers(n - 1))
            mask[u if u < v else u + 1, v] = True
    us, vs = np.nonzero(mask)
    return Graph.from_edges(n, zip(us.tolist(), vs.tolist()), True)


_GENERATORS = {
    "complete": _complete,
    "cycle": _cycle,
    "path": _path,
    "grid-torus": _torus,
    "random-gnp": _gnp,
    "random-digraph": _digraph,
}
