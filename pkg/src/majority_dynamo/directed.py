"""Seed sets of size at most ⌊k·n/(k+1)⌋ for the k/(k+1) threshold on digraphs.

The vertex set is split into k+1 blocks. The potential η is the sum, over
blocks, of the closure size of the block's complement; it is maximal,
(k+1)·n, exactly when every complement is a dynamo. Each refinement step
moves one vertex between blocks and strictly raises η, so at most (k+1)·n
steps reach the maximum, and the smallest complement is then a dynamo of
size at most k·n/(k+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import ClosureState, ThresholdScenario, closure, thresholds
from .errors import InvariantError, PreconditionError
from .graph import Graph, require_network


@dataclass(frozen=True)
class Partition:
    k: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if len(self.blocks) != self.k + 1:
            raise ValueError(f"need {self.k + 1} blocks, got {len(self.blocks)}")

    @classmethod
    def initial(cls, n: int, k: int) -> "Partition":
        """All vertices in the first block, the rest empty."""
        return cls(k, (frozenset(range(n)),) + (frozenset(),) * k)

    @classmethod
    def from_lists(cls, blocks) -> "Partition":
        return cls(len(blocks) - 1, tuple(frozenset(b) for b in blocks))

    def complement(self, i: int, n: int) -> list[int]:
        block = self.blocks[i]
        return [v for v in range(n) if v not in block]

    def moved(self, v: int, src: int, dst: int) -> "Partition":
        blocks = list(self.blocks)
        blocks[src] = blocks[src] - {v}
        blocks[dst] = blocks[dst] | {v}
        return Partition(self.k, tuple(blocks))

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def check(self, n: int) -> None:
        seen = 0
        for b in self.blocks:
            for v in b:
                if not 0 <= v < n:
                    raise PreconditionError(f"partition vertex {v} out of range")
            seen += len(b)
        if seen != n or len(frozenset().union(*self.blocks)) != n:
            raise PreconditionError("blocks must be disjoint and cover all vertices")


def eta(g: Graph, p: Partition) -> int:
    p.check(g.n)
    s = ThresholdScenario.fraction(p.k)
    return sum(closure(g, p.complement(i, g.n), s).size for i in range(p.k + 1))


@dataclass(frozen=True)
class Move:
    vertex: int
    src: int
    dst: int


def choose_move(g: Graph, p: Partition, closures: list[list[bool]]) -> Move:
    """Pick the η-raising move given the k+1 complement closures as masks.

    Block ``src`` is the lowest-index block not contained in its complement's
    closure, ``vertex`` the smallest uncolored id in it, and ``dst`` the block
    (≠ src) holding the fewest in-neighbours of ``vertex``, lowest index on ties.
    """
    k = p.k
    for i, block in enumerate(p.blocks):
        white = closures[i]
        missing = [v for v in block if not white[v]]
        if missing:
            v = min(missing)
            break
    else:
        raise PreconditionError("η is already maximal; no refinement step exists")

    per_block = [0] * (k + 1)
    owner = {}
    for j, block in enumerate(p.blocks):
        for u in block:
            owner[u] = j
    for u in g.in_adj[v]:
        per_block[owner[u]] += 1
    dst = min((j for j in range(k + 1) if j != i), key=lambda j: (per_block[j], j))
    # pigeonhole over the k other blocks: fewer than indeg/(k+1) in-neighbours
    if per_block[dst] * (k + 1) >= g.indegree(v):
        raise InvariantError(f"no light block for vertex {v}: counts {per_block}")
    return Move(v, i, dst)


def refine_step(g: Graph, p: Partition) -> Partition:
    """One η-increasing single-vertex move, closures recomputed from scratch."""
    require_network(g)
    p.check(g.n)
    s = ThresholdScenario.fraction(p.k)
    masks = []
    for i in range(p.k + 1):
        white = [False] * g.n
        for v in closure(g, p.complement(i, g.n), s).white:
            white[v] = True
        masks.append(white)
    mv = choose_move(g, p, masks)
    return p.moved(mv.vertex, mv.src, mv.dst)


@dataclass
class DirectedRefinement:
    """Outcome of the full refinement loop."""

    n: int
    k: int
    partition: Partition
    seeds: list[int]
    steps: int
    eta_history: list[int] = field(repr=False)
    moves: list[Move] = field(repr=False)

    @property
    def bound(self) -> int:
        return self.k * self.n // (self.k + 1)


def refine_partition(g: Graph, k: int, check: bool = True) -> DirectedRefinement:
    """Run refinement steps from the canonical start until η = (k+1)·n.

    Closures are maintained incrementally: a move only enlarges the complement
    of the source block (its closure grows by re-seeding) and leaves the
    closure of the destination block's complement unchanged, because the
    moved vertex is re-activated by its remaining in-neighbours. With
    ``check`` the latter is asserted for every step.
    """
    if k < 1:
        raise PreconditionError("k must be a positive integer")
    require_network(g)
    n = g.n
    need = thresholds(g, ThresholdScenario.fraction(k))
    p = Partition.initial(n, k)
    states = [ClosureState(g, need, p.complement(i, n)) for i in range(k + 1)]
    history = [sum(st.size for st in states)]
    moves = []
    target = (k + 1) * n
    while history[-1] < target:
        mv = choose_move(g, p, [st.white for st in states])
        v, i, j = mv.vertex, mv.src, mv.dst
        if check:
            have = sum(1 for u in g.in_adj[v] if u not in p.blocks[j])
            if have * (k + 1) <= g.indegree(v) * k:
                raise InvariantError(f"moved vertex {v} would not re-activate in block {j}")
        p = p.moved(v, i, j)
        states[i].add(v)
        # states[j]: same white set, v now activated instead of seeded
        moves.append(mv)
        history.append(sum(st.size for st in states))
        if history[-1] <= history[-2]:
            raise InvariantError(f"η did not increase at step {len(moves)}")
        if len(moves) > target:
            raise InvariantError("refinement exceeded (k+1)·n steps")

    best = min(range(k + 1), key=lambda i: (n - len(p.blocks[i]), i))
    seeds = p.complement(best, n)
    return DirectedRefinement(n, k, p, seeds, len(moves), history, moves)


def find_dynamo_directed(g: Graph, k: int) -> list[int]:
    """Sorted seed set S with closure V under the k/(k+1) rule and |S| ≤ ⌊k·n/(k+1)⌋."""
    return refine_partition(g, k).seeds
