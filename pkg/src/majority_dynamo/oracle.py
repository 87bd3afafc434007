"""Exhaustive minimum-dynamo and minimum-dominating-set solvers for tiny graphs.

Both enumerate vertex subsets as bitmasks, cardinality-major and in
increasing mask value within a cardinality, so the first hit is a canonical
minimum witness. The dynamo oracle has its own bitmask closure and shares no
code with :mod:`majority_dynamo.coloring`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .coloring import ThresholdScenario
from .errors import OracleLimitError, PreconditionError
from .graph import Graph

MAX_DYNAMO_N = 32
MAX_DOMSET_N = 32
# a size-bounded search may exceed MAX_DYNAMO_N as long as it stays within this many subsets
MAX_SUBSETS = 1 << 32


@dataclass(frozen=True)
class OracleResult:
    optimum_size: int | None
    witness: list[int] | None
    subsets_examined: int
    budget_exhausted: bool


def masks_of_size(n: int, r: int) -> Iterator[int]:
    """All n-bit masks with r bits set, increasing (Gosper's hack)."""
    if r == 0:
        yield 0
        return
    if r > n:
        return
    m = (1 << r) - 1
    limit = 1 << n
    while m < limit:
        yield m
        low = m & -m
        ripple = m + low
        m = ripple | (((m ^ ripple) >> 2) // low)


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class _BitClosure:
    def __init__(self, g: Graph, s: ThresholdScenario):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.in_mask = []
        self.need = []
        for v in range(g.n):
            m = 0
            for u in g.in_adj[v]:
                m |= 1 << u
            self.in_mask.append(m)
            d = len(g.in_adj[v])
            # threshold restated from the definitions, not imported
            if s.kind == "strict":
                self.need.append(d // 2 + 1)
            elif s.kind == "simple":
                self.need.append((d + 1) // 2)
            else:
                self.need.append((d * s.k + s.k) // (s.k + 1))

    def run(self, white: int) -> int:
        in_mask, need = self.in_mask, self.need
        grew = True
        while grew:
            grew = False
            for v in range(self.n):
                if not white >> v & 1 and (in_mask[v] & white).bit_count() >= need[v]:
                    white |= 1 << v
                    grew = True
        return white


def _check_network(g: Graph, cap: int, sizes: range | None = None) -> None:
    if sizes is None:
        if g.n > cap:
            raise OracleLimitError(f"oracle is capped at n <= {cap}, got n={g.n}")
    elif g.n > cap:
        total = sum(comb(g.n, r) for r in sizes)
        if total > MAX_SUBSETS:
            raise OracleLimitError(f"n={g.n} exceeds {cap} and the size bound leaves {total} subsets")
    if any(not a for a in g.in_adj):
        raise PreconditionError("zero-indegree vertex; not a coloring network")


def iter_dynamos(g: Graph, s: ThresholdScenario, size: int) -> Iterator[list[int]]:
    """Every dynamo of exactly ``size`` vertices, in mask order."""
    _check_network(g, MAX_DYNAMO_N, range(size, size + 1))
    bc = _BitClosure(g, s)
    for mask in masks_of_size(g.n, size):
        if bc.run(mask) == bc.full:
            yield bits(mask)


def min_dynamo_bruteforce(g: Graph, s: ThresholdScenario, max_size: int | None = None) -> OracleResult:
    """Smallest dynamo by exhaustive search.

    Without ``max_size`` the graph must have at most ``MAX_DYNAMO_N`` vertices.
    With it, larger graphs are accepted while the number of subsets of size
    up to ``max_size`` stays under ``MAX_SUBSETS``.
    """
    if max_size is not None and not 0 <= max_size <= g.n:
        raise PreconditionError(f"max_size must lie in [0, {g.n}]")
    _check_network(g, MAX_DYNAMO_N, None if max_size is None else range(max_size + 1))
    if max_size is None:
        max_size = g.n
    bc = _BitClosure(g, s)
    examined = 0
    for r in range(max_size + 1):
        for mask in masks_of_size(g.n, r):
            examined += 1
            if bc.run(mask) == bc.full:
                return OracleResult(r, bits(mask), examined, False)
    return OracleResult(None, None, examined, True)


def min_domset_bruteforce(g: Graph) -> OracleResult:
    if g.directed:
        raise PreconditionError("dominating sets are defined on undirected graphs")
    if g.n > MAX_DOMSET_N:
        raise OracleLimitError(f"oracle is capped at n <= {MAX_DOMSET_N}, got n={g.n}")
    closed = []
    for v in range(g.n):
        m = 1 << v
        for u in g.out_adj[v]:
            m |= 1 << u
        closed.append(m)
    full = (1 << g.n) - 1
    examined = 0
    for r in range(g.n + 1):
        for mask in masks_of_size(g.n, r):
            examined += 1
            cover = 0
            for v in bits(mask):
                cover |= closed[v]
            if cover == full:
                return OracleResult(r, bits(mask), examined, False)
    return OracleResult(None, None, examined, True)
