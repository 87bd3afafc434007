"""Strict-majority dynamos of size at most ⌈n/2⌉ in connected undirected graphs.

Pipeline: local search to a proper cut, then moves of bad vertices guided
by the potential ψ until at most one bad component is left, then one side
of the cut plus a single vertex of that component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .coloring import STRICT, is_dynamo
from .errors import InvariantError, PreconditionError
from .graph import Graph, bfs_distances, induced_components, require_undirected, weak_components

V_STAR = 0


@dataclass(frozen=True)
class Cut:
    """Two-sided partition; ``side[v]`` is True when v lies in S."""

    side: tuple[bool, ...]

    @classmethod
    def from_set(cls, n: int, members: Iterable[int]) -> "Cut":
        side = [False] * n
        for v in members:
            side[v] = True
        return cls(tuple(side))

    @property
    def n(self) -> int:
        return len(self.side)

    def members(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s]

    def others(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if not s]

    def swapped(self) -> "Cut":
        return Cut(tuple(not s for s in self.side))

    def flipped(self, v: int) -> "Cut":
        side = list(self.side)
        side[v] = not side[v]
        return Cut(tuple(side))

    def size(self, g: Graph) -> int:
        """e(S, V∖S)."""
        side = self.side
        return sum(1 for u, v in g.edges() if side[u] != side[v])


def _same_counts(g: Graph, side) -> list[int]:
    return [sum(1 for u in g.out_adj[v] if side[u] == side[v]) for v in range(g.n)]


def _require_no_isolated(g: Graph) -> None:
    isolated = [v for v in range(g.n) if not g.out_adj[v]]
    if isolated:
        raise PreconditionError(f"isolated vertices: {isolated[:10]}")


def is_proper(g: Graph, c: Cut) -> tuple[bool, list[int]]:
    """Properness plus the vertices with more neighbours on their own side."""
    require_undirected(g)
    same = _same_counts(g, c.side)
    bad = [v for v in range(g.n) if same[v] > g.degree(v) - same[v]]
    return not bad, bad


def _local_search(g: Graph, side: list[bool]) -> int:
    """Flip violators in place until the cut is proper; returns the flip count.

    Scans ids ascending and flips each violator met, repeating until a full
    pass flips nothing. Every flip gains ``same - opposite >= 1`` cut edges.
    """
    same = _same_counts(g, side)
    deg = [g.degree(v) for v in range(g.n)]
    flips = 0
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if 2 * same[v] <= deg[v]:
                continue
            sv = side[v]
            for u in g.out_adj[v]:
                same[u] += -1 if side[u] == sv else 1
            side[v] = not sv
            same[v] = deg[v] - same[v]
            flips += 1
            changed = True
    return flips


def make_proper(g: Graph, c: Cut) -> Cut:
    require_undirected(g)
    _require_no_isolated(g)
    side = list(c.side)
    if _local_search(g, side) == 0:
        return c
    return Cut(tuple(side))


@dataclass(frozen=True)
class BadComponentReport:
    bad_in_s: list[list[int]]
    bad_in_cos: list[list[int]]
    bad: tuple[bool, ...]

    @property
    def all(self) -> list[list[int]]:
        return self.bad_in_s + self.bad_in_cos

    @property
    def count(self) -> int:
        return len(self.bad_in_s) + len(self.bad_in_cos)


def bad_components(g: Graph, c: Cut) -> BadComponentReport:
    require_undirected(g)
    same = _same_counts(g, c.side)
    bad = tuple(2 * same[v] == g.degree(v) for v in range(g.n))

    def all_bad(comps):
        return [comp for comp in comps if all(bad[v] for v in comp)]

    return BadComponentReport(
        all_bad(induced_components(g, c.members())),
        all_bad(induced_components(g, c.others())),
        bad,
    )


def _psi(g: Graph, c: Cut, dist, report: BadComponentReport | None = None) -> int:
    report = report or bad_components(g, c)
    penalty = sum(min(dist[v] for v in comp) for comp in report.all)
    return c.size(g) * g.n * g.n - int(penalty)


def psi(g: Graph, c: Cut, v_star: int) -> int:
    """ψ(S, v*) = e(S, V∖S)·n² minus the summed distances from v* to bad components."""
    require_undirected(g)
    dist = bfs_distances(g, v_star)
    if any(d == float("inf") for d in dist):
        raise PreconditionError("ψ needs a connected graph")
    return _psi(g, c, dist)


@dataclass
class CutRefinement:
    cut: Cut
    psi_history: list[int] = field(repr=False)
    moves: int
    flips: int
    report: BadComponentReport = field(repr=False)

    @property
    def iterations(self) -> int:
        return len(self.psi_history) - 1


def _require_connected(g: Graph) -> None:
    require_undirected(g)
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    _require_no_isolated(g)
    if len(weak_components(g)) > 1:
        raise PreconditionError("graph is disconnected")


def refine_cut(g: Graph, check: bool = True) -> CutRefinement:
    """Proper cut with at most one bad component overall.

    Starts from S = ∅ made proper by local search. While two or more bad
    components exist, take the one avoiding v* = 0 with the smallest least
    member (swap the sides first if it lies outside S), move its vertex
    closest to v* across, and restore properness by local search if needed.
    ψ(·, v*) strictly increases every iteration. ``check`` additionally
    verifies the bad-component bookkeeping facts at each move.
    """
    _require_connected(g)
    dist = bfs_distances(g, V_STAR)
    side = [False] * g.n
    flips = _local_search(g, side)
    c = Cut(tuple(side))
    report = bad_components(g, c)
    history = [_psi(g, c, dist, report)]
    moves = 0
    while report.count > 1:
        candidates = [(comp, True) for comp in report.bad_in_s] + [(comp, False) for comp in report.bad_in_cos]
        candidates = [cand for cand in candidates if V_STAR not in cand[0]]
        comp, in_s = min(candidates, key=lambda cand: cand[0][0])
        if not in_s:
            c = c.swapped()
            report = BadComponentReport(report.bad_in_cos, report.bad_in_s, report.bad)
        dmin = min(dist[u] for u in comp)
        v = min(u for u in comp if dist[u] == dmin)

        moved = c.flipped(v)
        moved_report = bad_components(g, moved)
        if check:
            _check_move(g, c, report, comp, v, moved, moved_report)
        before = history[-1]
        if _psi(g, moved, dist, moved_report) <= before:
            raise InvariantError(f"moving bad vertex {v} did not raise ψ")

        side = list(moved.side)
        extra = _local_search(g, side)
        if extra:
            c = Cut(tuple(side))
            if c.size(g) <= moved.size(g):
                raise InvariantError("local search did not enlarge the cut")
            report = bad_components(g, c)
        else:
            c, report = moved, moved_report
        flips += extra
        moves += 1
        history.append(_psi(g, c, dist, report))
        if history[-1] <= before:
            raise InvariantError(f"ψ did not increase at iteration {moves}")
    return CutRefinement(c, history, moves, flips, report)


def _check_move(g, c, report, comp, v, moved, moved_report):
    """Bookkeeping facts for moving bad vertex ``v`` out of S."""
    if moved.size(g) != c.size(g):
        raise InvariantError("moving a bad vertex changed the cut size")
    old_s = {frozenset(x) for x in report.bad_in_s} - {frozenset(comp)}
    if not {frozenset(x) for x in moved_report.bad_in_s} <= old_s:
        raise InvariantError("new bad component appeared in S after the move")
    new_other = [x for x in induced_components(g, moved.others()) if v in x][0]
    allowed = {frozenset(x) for x in report.bad_in_cos} | {frozenset(new_other)}
    if not {frozenset(x) for x in moved_report.bad_in_cos} <= allowed:
        raise InvariantError("unexpected bad component on the receiving side")


@dataclass
class UndirectedDynamo:
    seeds: list[int]
    bound: int
    iterations: int
    components: int
    psi_histories: list[list[int]] = field(repr=False)


def _dynamo_connected(g: Graph, check: bool) -> tuple[list[int], CutRefinement]:
    ref = refine_cut(g, check=check)
    bad = ref.report.all
    # no bad component: any vertex serves; v* keeps the choice deterministic
    x = bad[0][0] if bad else V_STAR
    s_side = sorted(set(ref.cut.members()) | {x})
    o_side = sorted(set(ref.cut.others()) | {x})
    if check:
        for cand in (s_side, o_side):
            if not is_dynamo(g, cand, STRICT):
                raise InvariantError("cut side plus x is not a strict-majority dynamo")
    if len(s_side) != len(o_side):
        return min(s_side, o_side, key=len), ref
    return (s_side if V_STAR in s_side else o_side), ref


def find_dynamo_undirected(g: Graph, check: bool = True) -> UndirectedDynamo:
    """Strict-majority dynamo of size ≤ ⌈n/2⌉ (per connected component).

    Disconnected graphs are solved component by component and the union is
    returned; its guaranteed bound is the sum of ⌈n_i/2⌉.
    """
    require_undirected(g)
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    _require_no_isolated(g)
    seeds: list[int] = []
    bound = iterations = 0
    histories = []
    comps = weak_components(g)
    for comp in comps:
        sub, ids = (g, list(range(g.n))) if len(comps) == 1 else g.induced(comp)
        local, ref = _dynamo_connected(sub, check)
        seeds.extend(ids[v] for v in local)
        bound += (len(ids) + 1) // 2
        iterations += ref.iterations
        histories.append(ref.psi_history)
    seeds.sort()
    if len(seeds) > bound:
        raise InvariantError(f"seed set of size {len(seeds)} exceeds bound {bound}")
    return UndirectedDynamo(seeds, bound, iterations, len(comps), histories)
