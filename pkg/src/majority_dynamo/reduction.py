"""Dominating-set gadget for strict-majority dynamos.

From a source graph G without isolated vertices we build a bipartite graph
𝒢 whose minimum strict-majority dynamo lies between γ(G) and γ(G)+2, and
convert witnesses in both directions.

Gadget ids: source vertices keep ``0..n-1``, then ``w_v`` for each v, then
the ``x_{v,i}`` grouped by owner, then the ``y_{v,i}`` grouped by owner, then
``z1, z2, g1, g2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .coloring import SIMPLE, STRICT, closure
from .errors import CertificateError, GraphFormatError, PreconditionError
from .graph import Graph, bfs_distances, require_undirected

ROLE_KINDS = ("V", "W", "X", "Y", "Z1", "Z2", "G1", "G2")


@dataclass(frozen=True)
class Role:
    kind: str
    owner: int | None = None
    index: int | None = None  # 1-based, X and Y only

    def __str__(self):
        return " ".join(str(p) for p in (self.kind, self.owner, self.index) if p is not None)


@dataclass(frozen=True)
class GadgetMap:
    source: Graph = field(repr=False)
    roles: tuple[Role, ...] = field(repr=False)
    x_start: tuple[int, ...] = field(repr=False)
    y_start: tuple[int, ...] = field(repr=False)

    @classmethod
    def for_source(cls, g: Graph) -> "GadgetMap":
        n = g.n
        roles = [Role("V", v) for v in range(n)] + [Role("W", v) for v in range(n)]
        x_start, y_start = [], []
        for kind, starts in (("X", x_start), ("Y", y_start)):
            for v in range(n):
                starts.append(len(roles))
                roles.extend(Role(kind, v, i) for i in range(1, g.degree(v) + 1))
        roles.extend(Role(k) for k in ("Z1", "Z2", "G1", "G2"))
        return cls(g, tuple(roles), tuple(x_start), tuple(y_start))

    @property
    def size(self) -> int:
        return len(self.roles)

    def w(self, v: int) -> int:
        return self.source.n + v

    def xs(self, v: int) -> list[int]:
        s = self.x_start[v]
        return list(range(s, s + self.source.degree(v)))

    def ys(self, v: int) -> list[int]:
        s = self.y_start[v]
        return list(range(s, s + self.source.degree(v)))

    @property
    def z1(self) -> int:
        return self.size - 4

    @property
    def z2(self) -> int:
        return self.size - 3

    @property
    def g1(self) -> int:
        return self.size - 2

    @property
    def g2(self) -> int:
        return self.size - 1

    def parts(self) -> tuple[list[int], list[int]]:
        """The bipartition (V ∪ 𝒴 ∪ {g1, g2}, 𝒳 ∪ 𝒲 ∪ {z1, z2})."""
        left = {"V", "Y", "G1", "G2"}
        a = [i for i, r in enumerate(self.roles) if r.kind in left]
        b = [i for i, r in enumerate(self.roles) if r.kind not in left]
        return a, b


def build_gadget(g: Graph) -> tuple[Graph, GadgetMap]:
    require_undirected(g)
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    if isolated:
        raise PreconditionError(f"source has isolated vertices: {isolated[:10]}")
    mp = GadgetMap.for_source(g)
    edges = []
    for v in range(g.n):
        edges.extend((v, x) for x in mp.xs(v))
        edges.extend((mp.w(v), u) for u in g.closed_neighborhood(v))
        for y in mp.ys(v):
            edges.extend([(mp.w(v), y), (y, mp.z1), (y, mp.z2)])
    edges.extend([(mp.z1, mp.g1), (mp.z2, mp.g2)])
    return Graph.from_edges(mp.size, edges, False), mp


def is_dominating(g: Graph, d: Iterable[int]) -> tuple[bool, list[int]]:
    """Domination check plus the undominated vertices."""
    chosen = [False] * g.n
    for v in d:
        chosen[v] = True
    missed = [v for v in range(g.n) if not chosen[v] and not any(chosen[u] for u in g.out_adj[v])]
    return not missed, missed


def blocking_set(mp: GadgetMap, v: int) -> list[int]:
    """B_v = {w_v} ∪ N*(v) ∪ the 𝒳_u of every u ∈ N*(v)."""
    out = {mp.w(v)}
    for u in mp.source.closed_neighborhood(v):
        out.add(u)
        out.update(mp.xs(u))
    return sorted(out)


def domset_to_dynamo(mp: GadgetMap, d: Iterable[int], gadget: Graph | None = None) -> list[int]:
    d = sorted(set(d))
    ok, missed = is_dominating(mp.source, d)
    if not ok:
        raise CertificateError(f"not a dominating set: vertex {missed[0]} is undominated")
    seeds = d + [mp.z1, mp.z2]
    if gadget is not None and closure(gadget, seeds, STRICT).size != gadget.n:
        raise CertificateError("extended seed set failed to color the gadget")
    return seeds


def dynamo_to_domset(mp: GadgetMap, s: Iterable[int], gadget: Graph | None = None) -> list[int]:
    """D̃ = {u : S meets {w_u, u} ∪ 𝒳_u}, after checking S is a gadget dynamo."""
    s = sorted(set(s))
    if gadget is None:
        gadget, _ = build_gadget(mp.source)
    res = closure(gadget, s, STRICT)
    if res.size != gadget.n:
        chosen = set(s)
        for v in range(mp.source.n):
            if not chosen.intersection(blocking_set(mp, v)):
                raise CertificateError(f"not a gadget dynamo: it misses the blocking set of source vertex {v}")
        white = set(res.white)
        first = next(a for a in range(gadget.n) if a not in white)
        raise CertificateError(
            f"not a gadget dynamo: {gadget.n - res.size} vertices stay uncolored, first {first} ({mp.roles[first]})"
        )
    owner = {}
    for i, r in enumerate(mp.roles):
        if r.kind in ("V", "W", "X"):
            owner[i] = r.owner
    return sorted({owner[a] for a in s if a in owner})


def greedy_domset(g: Graph) -> list[int]:
    """Greedy set cover on closed neighbourhoods; ties go to the lowest id."""
    require_undirected(g)
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise PreconditionError("source has isolated vertices")
    covered = [False] * g.n
    left = g.n
    chosen = []
    while left:
        best, gain = -1, -1
        for v in range(g.n):
            c = sum(1 for u in g.closed_neighborhood(v) if not covered[u])
            if c > gain:
                best, gain = v, c
        chosen.append(best)
        for u in g.closed_neighborhood(best):
            if not covered[u]:
                covered[u] = True
                left -= 1
    return sorted(chosen)


@dataclass
class GadgetReport:
    vertex_count: int
    expected_vertex_count: int
    bipartite: bool
    z1_eccentricity: float
    all_degrees_odd: bool
    degree_facts: bool
    strict_equals_simple: bool
    samples: int

    @property
    def ok(self) -> bool:
        return (
            self.vertex_count == self.expected_vertex_count
            and self.bipartite
            and self.z1_eccentricity <= 4
            and self.all_degrees_odd
            and self.degree_facts
            and self.strict_equals_simple
        )

    def lines(self) -> list[str]:
        return [
            f"vertex_count: {self.vertex_count}",
            f"expected_vertex_count: {self.expected_vertex_count}",
            f"bipartite: {str(self.bipartite).lower()}",
            f"z1_eccentricity: {self.z1_eccentricity:g}",
            f"all_degrees_odd: {str(self.all_degrees_odd).lower()}",
            f"degree_facts: {str(self.degree_facts).lower()}",
            f"strict_equals_simple: {str(self.strict_equals_simple).lower()} ({self.samples} samples)",
            f"invariants_ok: {str(self.ok).lower()}",
        ]


def check_gadget_invariants(gadget: Graph, mp: GadgetMap, samples: int = 50, seed: int = 0) -> GadgetReport:
    """Structural report on a gadget; spot-checks strict vs simple closures on random seeds."""
    src = mp.source
    left, _ = mp.parts()
    in_left = [False] * gadget.n
    for a in left:
        in_left[a] = True
    bipartite = all(in_left[u] != in_left[v] for u, v in gadget.edges())
    ecc = max(bfs_distances(gadget, mp.z1), default=0)
    odd = all(gadget.degree(a) % 2 == 1 for a in range(gadget.n))

    facts = gadget.degree(mp.z1) == gadget.degree(mp.z2) == 2 * src.m + 1
    for v in range(src.n):
        d = src.degree(v)
        facts &= gadget.degree(v) == 2 * d + 1 and gadget.degree(mp.w(v)) == 2 * d + 1
        facts &= len(mp.xs(v)) == d == len(mp.ys(v))
        facts &= all(gadget.degree(y) == 3 for y in mp.ys(v))
        facts &= all(gadget.degree(x) == 1 for x in mp.xs(v))
    facts &= gadget.degree(mp.g1) == gadget.degree(mp.g2) == 1

    rng = random.Random(seed)
    agree = True
    for _ in range(samples):
        seeds = [a for a in range(gadget.n) if rng.random() < rng.random()]
        if closure(gadget, seeds, STRICT).white != closure(gadget, seeds, SIMPLE).white:
            agree = False
            break
    return GadgetReport(
        vertex_count=gadget.n,
        expected_vertex_count=2 * src.n + 4 * src.m + 4,
        bipartite=bipartite,
        z1_eccentricity=ecc,
        all_degrees_odd=odd,
        degree_facts=bool(facts),
        strict_equals_simple=agree,
        samples=samples,
    )


# --------------------------------------------------------------------------- map file format


def serialize_gadget_map(mp: GadgetMap) -> str:
    return "".join(f"{i} {r}\n" for i, r in enumerate(mp.roles))


def parse_gadget_map(text: str) -> list[Role]:
    """Roles indexed by gadget id, as written by :func:`serialize_gadget_map`."""
    roles: list[Role] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            gid = int(parts[0])
            kind = parts[1]
            nums = [int(p) for p in parts[2:]]
        except (IndexError, ValueError):
            raise GraphFormatError(f"malformed map line {line!r}", lineno) from None
        if gid != len(roles):
            raise GraphFormatError(f"expected gadget id {len(roles)}, got {gid}", lineno)
        want = {"V": 1, "W": 1, "X": 2, "Y": 2}.get(kind, 0)
        if kind not in ROLE_KINDS or len(nums) != want:
            raise GraphFormatError(f"bad role {' '.join(parts[1:])!r}", lineno)
        roles.append(Role(kind, *nums))
    return roles


def source_from_gadget(gadget: Graph, roles: list[Role]) -> tuple[Graph, GadgetMap]:
    """Recover G from a gadget file plus its map, and check the pair is canonical."""
    if len(roles) != gadget.n:
        raise PreconditionError(f"map has {len(roles)} roles but gadget has {gadget.n} vertices")
    n = sum(1 for r in roles if r.kind == "V")
    if any(r.kind == "V" and r.owner != i for i, r in enumerate(roles[:n])) or n * 2 > len(roles):
        raise PreconditionError("map does not start with the source vertices 0..n-1")
    edges = set()
    for v in range(n):
        for u in gadget.neighbors(n + v):
            if u < n and u != v:
                edges.add((min(u, v), max(u, v)))
    source = Graph.from_edges(n, sorted(edges), False)
    rebuilt, mp = build_gadget(source)
    if rebuilt != gadget or list(mp.roles) != list(roles):
        raise PreconditionError("gadget and map do not match the canonical construction")
    return source, mp
