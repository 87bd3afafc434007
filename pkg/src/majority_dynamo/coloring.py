"""Irreversible threshold coloring: thresholds, closure and dynamo checks."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError
from .graph import Graph, require_network


@dataclass(frozen=True)
class ThresholdScenario:
    """Activation rule mapping an indegree to the required white in-neighbour count.

    ``kind`` is ``"strict"``, ``"simple"`` or ``"fraction"``; the fraction rule
    activates a vertex once at least ``k/(k+1)`` of its in-neighbours are
    white, i.e. ``count * (k + 1) >= indegree * k``.
    """

    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in ("strict", "simple", "fraction"):
            raise ValueError(f"unknown scenario kind {self.kind!r}")
        if self.kind == "fraction":
            if self.k is None or self.k < 1:
                raise ValueError("fraction scenario needs integer k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind} scenario takes no k")

    @classmethod
    def fraction(cls, k: int) -> "ThresholdScenario":
        return cls("fraction", k)

    @classmethod
    def parse(cls, text: str) -> "ThresholdScenario":
        """Accepts ``strict``, ``simple`` or ``fraction:K``."""
        name, _, arg = text.strip().lower().partition(":")
        if name == "fraction":
            try:
                return cls.fraction(int(arg))
            except ValueError:
                raise ValueError(f"bad fraction scenario {text!r}; expected fraction:K") from None
        if arg:
            raise ValueError(f"bad scenario {text!r}")
        return cls(name)

    def required(self, indegree: int) -> int:
        if indegree < 1:
            raise PreconditionError("threshold undefined for indegree 0")
        if self.kind == "strict":
            return (indegree + 2) // 2
        if self.kind == "simple":
            return (indegree + 1) // 2
        k = self.k
        # ceil(d*k/(k+1)) in integers
        return -(-indegree * k // (k + 1))

    def __str__(self):
        return f"fraction:{self.k}" if self.kind == "fraction" else self.kind


STRICT = ThresholdScenario("strict")
SIMPLE = ThresholdScenario("simple")


def required_count(s: ThresholdScenario, indegree: int) -> int:
    return s.required(indegree)


def thresholds(g: Graph, s: ThresholdScenario) -> list[int]:
    return [s.required(len(a)) for a in g.in_adj]


@dataclass(frozen=True)
class ColoringResult:
    seeds: list[int]
    white: list[int]
    # (vertex, white in-neighbours counted when it turned white)
    trace: list[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.white)


def closure(
    g: Graph,
    seeds: Iterable[int],
    s: ThresholdScenario,
    rng: random.Random | None = None,
) -> ColoringResult:
    """Run the coloring process from ``seeds`` to its fixed point.

    White vertices are propagated FIFO in the order they turn white, seeds
    first in ascending id order. Passing ``rng`` propagates in a random order
    instead; the final white set does not depend on it.
    """
    require_network(g)
    seeds = sorted(set(seeds))
    for v in seeds:
        if not 0 <= v < g.n:
            raise PreconditionError(f"seed {v} out of range for n={g.n}")
    need = thresholds(g, s)
    white = [False] * g.n
    for v in seeds:
        white[v] = True
    count = [0] * g.n
    trace: list[tuple[int, int]] = []

    pending: deque[int] | list[int] = list(seeds) if rng is not None else deque(seeds)
    while pending:
        if rng is None:
            u = pending.popleft()
        else:
            i = rng.randrange(len(pending))
            pending[i], pending[-1] = pending[-1], pending[i]
            u = pending.pop()
        for v in g.out_adj[u]:
            if white[v]:
                continue
            count[v] += 1
            if count[v] >= need[v]:
                white[v] = True
                trace.append((v, count[v]))
                pending.append(v)
    return ColoringResult(seeds, [v for v in range(g.n) if white[v]], trace)


def is_dynamo(g: Graph, seeds: Iterable[int], s: ThresholdScenario) -> bool:
    return closure(g, seeds, s).size == g.n


def replay_trace(g: Graph, result: ColoringResult, s: ThresholdScenario) -> bool:
    """Re-check the activation certificate against the threshold rule.

    Every traced vertex must have had at least its recorded count, and at
    least the threshold, of white in-neighbours among seeds and earlier
    activations. The white set must be exactly seeds plus trace.
    """
    white = [False] * g.n
    for v in result.seeds:
        white[v] = True
    for v, recorded in result.trace:
        if white[v]:
            return False
        have = sum(white[u] for u in g.in_adj[v])
        if have < recorded or have < s.required(g.indegree(v)):
            return False
        white[v] = True
    return [v for v in range(g.n) if white[v]] == list(result.white)


class ClosureState:
    """A closure that can be grown one seed at a time.

    Keeps the per-vertex white in-neighbour counters, so adding a seed costs
    only the newly activated part of the graph. Used by the partition
    refinement, where each step enlarges one block complement by one vertex.
    """

    def __init__(self, g: Graph, need: list[int], seeds: Iterable[int] = ()):
        self.g = g
        self.need = need
        self.white = [False] * g.n
        self.count = [0] * g.n
        self.size = 0
        for v in seeds:
            self.add(v)

    def add(self, v: int) -> None:
        if self.white[v]:
            return
        white, count, need, out_adj = self.white, self.count, self.need, self.g.out_adj
        white[v] = True
        self.size += 1
        stack = [v]
        while stack:
            u = stack.pop()
            for w in out_adj[u]:
                if white[w]:
                    continue
                count[w] += 1
                if count[w] >= need[w]:
                    white[w] = True
                    self.size += 1
                    stack.append(w)

    def members(self) -> list[int]:
        return [v for v in range(self.g.n) if self.white[v]]
