"""Command-line entry point: ``majority-dynamo <command> ...``.

Exit codes: 0 success, 2 partial coverage (simulate), 64 unreadable or
malformed input, 65 precondition violation, 66 invalid certificate,
70 internal invariant breach.

Summaries go to stdout as ``key: value`` lines; witnesses go to files.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .coloring import SIMPLE, STRICT, ThresholdScenario, closure, is_dynamo
from .directed import refine_partition
from .errors import CertificateError, GraphFormatError, InvariantError, PreconditionError
from .graph import (
    GENERATOR_KINDS,
    Graph,
    generate,
    parse_graph,
    parse_vertex_set,
    serialize_graph,
    serialize_vertex_set,
    validate,
)
from .oracle import min_domset_bruteforce, min_dynamo_bruteforce
from .reduction import (
    build_gadget,
    check_gadget_invariants,
    domset_to_dynamo,
    dynamo_to_domset,
    is_dominating,
    parse_gadget_map,
    serialize_gadget_map,
    source_from_gadget,
)
from .undirected import find_dynamo_undirected

EXIT_OK = 0
EXIT_PARTIAL = 2
EXIT_PARSE = 64
EXIT_PRECONDITION = 65
EXIT_CERTIFICATE = 66
EXIT_INTERNAL = 70


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise _InputError(f"cannot read {path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _scenario(text: str) -> ThresholdScenario:
    try:
        return ThresholdScenario.parse(text)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None


class Summary:
    """Ordered ``key: value`` report printed at the end of a command."""

    def __init__(self, command: str, timing: bool = False):
        self.items: list[tuple[str, object]] = [("command", command)]
        self.timing = timing
        self.start = time.perf_counter()

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, (list, tuple)):
            value = " ".join(map(str, value))
        self.items.append((key, value))

    def graph(self, g: Graph) -> None:
        self.add("n", g.n)
        self.add("m", g.m)
        self.add("directed", g.directed)

    def emit(self, out=None) -> None:
        out = out or sys.stdout
        if self.timing:
            self.add("elapsed_s", f"{time.perf_counter() - self.start:.6f}")
        for key, value in self.items:
            print(f"{key}: {value}", file=out)


# --------------------------------------------------------------------------- commands


def cmd_simulate(args) -> int:
    g = _load_graph(args.graph)
    seeds = parse_vertex_set(_read(args.seeds), g.n)
    s = _scenario(args.scenario)
    res = closure(g, seeds, s)
    _write(args.out, serialize_vertex_set(res.white))
    if args.trace:
        _write(args.trace, "".join(f"{v} {c}\n" for v, c in res.trace))
    summ = Summary("simulate", args.timing)
    summ.graph(g)
    summ.add("scenario", s)
    summ.add("seeds", len(seeds))
    summ.add("white", len(res.white))
    summ.add("full_coverage", res.size == g.n)
    if not args.out:
        summ.add("white_set", res.white)
    summ.emit()
    return EXIT_OK if res.size == g.n else EXIT_PARTIAL


def cmd_find_dynamo(args) -> int:
    g = _load_graph(args.graph)
    summ = Summary(f"find-dynamo --mode {args.mode}", args.timing)
    summ.graph(g)
    if args.mode == "directed":
        if args.k < 1:
            raise PreconditionError("--k must be at least 1")
        s = ThresholdScenario.fraction(args.k)
        ref = refine_partition(g, args.k)
        seeds, bound, iterations = ref.seeds, ref.bound, ref.steps
        verified = is_dynamo(g, seeds, s)
        summ.add("scenario", s)
        extra = [("dynamo_strict", is_dynamo(g, seeds, STRICT)), ("dynamo_simple", is_dynamo(g, seeds, SIMPLE))]
    else:
        if g.directed:
            raise PreconditionError("undirected mode needs an undirected graph")
        if not validate(g).is_connected and not args.per_component:
            raise PreconditionError("graph is disconnected; pass --per-component to solve each component")
        res = find_dynamo_undirected(g)
        seeds, bound, iterations = res.seeds, res.bound, res.iterations
        verified = is_dynamo(g, seeds, STRICT)
        summ.add("scenario", STRICT)
        extra = [("components", res.components)]
    if not verified:
        raise InvariantError("emitted seed set failed dynamo verification")
    if len(seeds) > bound:
        raise InvariantError(f"seed set size {len(seeds)} exceeds bound {bound}")
    _write(args.out, serialize_vertex_set(seeds))
    summ.add("output_size", len(seeds))
    summ.add("bound", bound)
    summ.add("iterations", iterations)
    for key, value in extra:
        summ.add(key, value)
    summ.add("verified", verified)
    if not args.out:
        summ.add("seeds", seeds)
    summ.emit()
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    gadget, mp = build_gadget(g)
    report = check_gadget_invariants(gadget, mp)
    _write(args.out, serialize_graph(gadget))
    _write(args.map, serialize_gadget_map(mp))
    summ = Summary("reduce", args.timing)
    summ.graph(g)
    summ.add("gadget_n", gadget.n)
    summ.add("gadget_m", gadget.m)
    for line in report.lines():
        key, _, value = line.partition(": ")
        summ.add(key, value)
    summ.add("verified", report.ok)
    summ.emit()
    return EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_convert(args) -> int:
    gadget = _load_graph(args.gadget)
    roles = parse_gadget_map(_read(args.map))
    source, mp = source_from_gadget(gadget, roles)
    summ = Summary("convert", args.timing)
    summ.graph(source)
    summ.add("gadget_n", gadget.n)
    if args.domset:
        d = parse_vertex_set(_read(args.domset), source.n)
        seeds = domset_to_dynamo(mp, d)
        verified = is_dynamo(gadget, seeds, STRICT)
        if not verified:
            raise InvariantError("extended dominating set is not a gadget dynamo")
        out = seeds
        summ.add("direction", "domset-to-dynamo")
        summ.add("input_size", len(d))
    else:
        s = parse_vertex_set(_read(args.gadget_seeds), gadget.n)
        out = dynamo_to_domset(mp, s, gadget)
        verified, _ = is_dominating(source, out)
        if not verified or len(out) > len(s):
            raise InvariantError("extracted set is not a dominating set within the size bound")
        summ.add("direction", "dynamo-to-domset")
        summ.add("input_size", len(s))
    _write(args.out, serialize_vertex_set(out))
    summ.add("output_size", len(out))
    summ.add("verified", verified)
    if not args.out:
        summ.add("witness", out)
    summ.emit()
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    summ = Summary(f"oracle {args.problem}", args.timing)
    summ.graph(g)
    if args.problem == "min-dynamo":
        s = _scenario(args.scenario)
        res = min_dynamo_bruteforce(g, s, args.max_size)
        summ.add("scenario", s)
        verified = res.witness is not None and is_dynamo(g, res.witness, s)
    else:
        res = min_domset_bruteforce(g)
        verified = res.witness is not None and is_dominating(g, res.witness)[0]
    if res.witness is not None and not verified:
        raise InvariantError("oracle witness failed verification")
    summ.add("optimum", "none" if res.optimum_size is None else res.optimum_size)
    summ.add("witness", res.witness or [])
    summ.add("subsets_examined", res.subsets_examined)
    summ.add("budget_exhausted", res.budget_exhausted)
    summ.add("verified", verified)
    if args.out and res.witness is not None:
        _write(args.out, serialize_vertex_set(res.witness))
    summ.emit()
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {}
    for key in ("n", "p", "rows", "cols"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.directed:
        params["directed"] = True
    if args.connected:
        params["connected"] = True
    g = generate(args.kind, seed=args.seed, **params)
    text = serialize_graph(g)
    if args.out:
        _write(args.out, text)
        summ = Summary(f"gen {args.kind}", args.timing)
        summ.graph(g)
        summ.add("min_indegree", validate(g).min_indegree)
        summ.emit()
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majority-dynamo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--timing", action="store_true", help="append elapsed_s to the summary")
        return p

    p = add("simulate", cmd_simulate, "run the coloring process from a seed set")
    p.add_argument("--graph", required=True)
    p.add_argument("--seeds", required=True)
    p.add_argument("--scenario", default="strict", help="strict, simple or fraction:K")
    p.add_argument("--out", help="file for the final white set")
    p.add_argument("--trace", help="file for the activation trace (vertex count)")

    p = add("find-dynamo", cmd_find_dynamo, "construct a bounded-size dynamo")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=("directed", "undirected"), required=True)
    p.add_argument("--k", type=int, default=2, help="fraction k/(k+1) for directed mode")
    p.add_argument("--per-component", action="store_true", help="undirected mode: allow disconnected input")
    p.add_argument("--out")

    p = add("reduce", cmd_reduce, "build the dominating-set gadget")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True, help="gadget graph file")
    p.add_argument("--map", required=True, help="gadget map file")

    p = add("convert", cmd_convert, "convert witnesses through a gadget")
    p.add_argument("--map", required=True)
    p.add_argument("--gadget", required=True, help="gadget graph file written by reduce")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--domset")
    which.add_argument("--gadget-seeds")
    p.add_argument("--out")

    p = add("oracle", cmd_oracle, "exhaustive minimum solvers for tiny graphs")
    p.add_argument("problem", choices=("min-dynamo", "min-domset"))
    p.add_argument("--graph", required=True)
    p.add_argument("--scenario", default="strict")
    p.add_argument("--max-size", type=int)
    p.add_argument("--out")

    p = add("gen", cmd_gen, "generate a graph file")
    p.add_argument("kind", choices=GENERATOR_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, _InputError) as exc:
        return _fail(EXIT_PARSE, "parse error", exc)
    except CertificateError as exc:
        return _fail(EXIT_CERTIFICATE, "invalid certificate", exc)
    except PreconditionError as exc:
        return _fail(EXIT_PRECONDITION, "precondition violated", exc)
    except InvariantError as exc:
        return _fail(EXIT_INTERNAL, "internal invariant breach", exc)


def _fail(code: int, label: str, exc: Exception) -> int:
    print(f"error: {label}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
