"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 format error, 3 verification failed,
4 size limit or timeout.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations
from pathlib import Path
from typing import Sequence

from . import _backend
from .chromatic import CHROMATIC_CAP, CLIQUE_CAP, chromatic_number, is_proper_coloring, max_clique
from .core import (
    LinearOrder,
    OrientedGraph,
    Tournament,
    UndirectedGraph,
    derive_seed,
    random_tournament,
    transitive_tournament,
    underlying_graph,
)
from .destroyer import destroyer_ordering, destroyer_target
from .errors import (
    AcychromError,
    ChromaticTooLow,
    DimensionMismatch,
    FormatError,
    NoOddCycle,
    PreconditionViolated,
    SizeLimitExceeded,
    Timeout,
    VerificationFailed,
)
from .formats import read_graph_file, serialize_graph_file, write_graph_file
from .gn import (
    GridPoint,
    build_gn,
    cover_bound,
    cover_by_transitive,
    find_interval_quadruple,
    is_left_proper_cover,
    points_tightness_example,
)
from .oddk4 import SEARCH_CAP, acyclic_3chromatic_subgraph, verify_cycle_witness
from .orderings import F_EXACT_CAP, chi_right, f_exact_witness, f_lower_heuristic, right_subgraph
from .randexp import ExperimentConfig, asymptotic_scale, mean_by_size, run_experiment, to_csv
from .theorem1 import verify_theorem1
from .triangles import cyclic_triangle_counts, min_cyclic_edge

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_VERIFY, EXIT_LIMIT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise VerificationFailed(message)


def _load(path: str):
    return read_graph_file(path)


def _load_oriented(path: str) -> OrientedGraph:
    obj = _load(path)
    if not isinstance(obj, OrientedGraph):
        raise UsageError(f"{path}: expected a tournament or digraph file")
    return obj


def _load_tournament(path: str) -> Tournament:
    obj = _load(path)
    if not isinstance(obj, Tournament):
        raise UsageError(f"{path}: expected a tournament (.trn) file")
    return obj


def _as_undirected(obj) -> UndirectedGraph:
    if isinstance(obj, UndirectedGraph):
        return obj
    if isinstance(obj, OrientedGraph):
        return underlying_graph(obj)
    raise UsageError("expected a graph file")


def _emit(obj, out: str | None) -> None:
    if out:
        write_graph_file(out, obj)
        _require(read_graph_file(out) == obj, f"{out} does not round-trip")
    else:
        sys.stdout.write(serialize_graph_file(obj))


# -------------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    if args.n is None:
        raise UsageError("gen requires --n")
    if args.family == "gn":
        g = build_gn(args.n, cap=args.limit or 100)
    elif args.family == "random":
        if args.seed is None:
            raise UsageError("gen random requires an explicit --seed")
        g = random_tournament(args.n, args.seed, max_vertices=args.limit or 10_000)
    else:
        g = transitive_tournament(args.n, max_vertices=args.limit or 10_000)
    _emit(g, args.output)
    if args.output:
        print(f"wrote {args.family} tournament with {g.n} vertices to {args.output}")
    return EXIT_OK


def cmd_f(args) -> int:
    g = _load_oriented(args.file)
    if args.mode == "exact":
        value, pi = f_exact_witness(g, cap=args.limit or F_EXACT_CAP)
        if args.verify:
            _require(right_subgraph(g, pi).is_acyclic(), "witness right subgraph has a cycle")
            _require(chi_right(g, pi) == value, "witness order does not attain f")
        print(f"f = {value}")
        print("order: " + " ".join(map(str, pi.order)))
        if args.output:
            write_graph_file(args.output, pi)
    else:
        if args.seed is None:
            raise UsageError("f bound requires an explicit --seed")
        value = f_lower_heuristic(g, args.samples or 1000, args.seed)
        print(f"f >= {value}")
    return EXIT_OK


def cmd_chromatic(args) -> int:
    h = _as_undirected(_load(args.file))
    k, coloring = chromatic_number(h, cap=args.limit or CHROMATIC_CAP, timeout=args.timeout)
    if args.verify:
        _require(is_proper_coloring(h, coloring) and coloring.k == k, "colouring is not proper")
        _require(len(max_clique(h, cap=None)) <= k, "clique exceeds colour count")
    print(f"chi = {k}")
    print("colors: " + " ".join(map(str, coloring.colors)))
    return EXIT_OK


def cmd_clique(args) -> int:
    h = _as_undirected(_load(args.file))
    clique = sorted(max_clique(h, cap=args.limit or CLIQUE_CAP))
    if args.verify:
        _require(h.is_clique(clique), "returned set is not a clique")
    print(f"omega = {len(clique)}")
    print("clique: " + " ".join(map(str, clique)))
    return EXIT_OK


def cmd_destroyer(args) -> int:
    g = _load_tournament(args.file)
    pi, trace = destroyer_ordering(g, cap=args.limit or 40)
    s = destroyer_target(g.n)
    if args.verify:
        omega = len(max_clique(underlying_graph(right_subgraph(g, pi)), cap=None))
        _require(omega < s, f"right clique of order {omega} >= {s}")
        _require(trace.rebuild() == pi, "trace does not rebuild the order")
    print(f"t = {g.n}, s = {s}, stages = {len(trace.stages)}")
    for k, w in enumerate(trace.stages, start=1):
        print(f"W_{k}: " + " ".join(map(str, w)))
    print("order: " + " ".join(map(str, pi.order)))
    if args.output:
        write_graph_file(args.output, pi)
    return EXIT_OK


def cmd_thm1(args) -> int:
    g = _load_tournament(args.file)
    if args.n is None:
        raise UsageError("thm1 requires --n")
    report = verify_theorem1(g, args.n, check=True)
    p = report.parts
    print(f"m = {report.m}, n = {report.n}, edge = ({p.u}, {p.v}), q = {p.q}")
    print(f"chi_right = {report.chi_right}, chi_left = {report.chi_left}, holds = {report.holds}")
    print("order: " + " ".join(map(str, p.pi.order)))
    if args.output:
        write_graph_file(args.output, p.pi)
    if not report.holds:
        raise VerificationFailed(f"max(chi_right, chi_left) < {args.n + 1}")
    return EXIT_OK


def cmd_triangles(args) -> int:
    g = _load_tournament(args.file)
    report = cyclic_triangle_counts(g)
    t = g.n
    print(f"t = {t}, cyclic triangles = {report.total_cyclic}")
    if t >= 2:
        (u, v), q = min_cyclic_edge(g)
        print(f"min edge = ({u}, {v}) in {q} cyclic triangles (bound {(t + 1) / 4:g})")
        if args.verify:
            _require(4 * q <= t + 1, "minimum edge count exceeds (t+1)/4")
    if args.verify:
        _require(report.identities_hold(g), "census identities fail")
        _require(24 * report.total_cyclic <= (t + 1) * t * (t - 1), "cyclic triangle count above (t+1)t(t-1)/24")
    return EXIT_OK


def cmd_points(args) -> int:
    n = args.n
    if n is None:
        raise UsageError("points requires --n")
    if args.mode == "tight":
        pts = points_tightness_example(n)
        print(" ".join(f"({p.x},{p.y})" for p in pts))
        quad = find_interval_quadruple(pts, n)
        _require(quad is None, f"tightness example contains {quad}")
        print(f"{len(pts)} points, no quadruple")
        return EXIT_OK
    if n > (args.limit or 5):
        raise SizeLimitExceeded("points check", n, args.limit or 5)
    grid = [GridPoint(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]
    checked = 0
    for subset in combinations(grid, 2 * n):
        quad = find_interval_quadruple(subset, n)
        _require(quad is not None and quad.is_valid(), f"no quadruple in {subset}")
        checked += 1
    print(f"n = {n}: all {checked} subsets of size {2 * n} contain a quadruple")
    return EXIT_OK


def cmd_cover(args) -> int:
    n = args.n
    if n is None:
        raise UsageError("cover requires --n")
    g = build_gn(n, cap=args.limit or 100)
    if args.order:
        orders = [read_graph_file(args.order, "order")]
        if len(orders[0]) != g.n:
            raise DimensionMismatch(f"order has {len(orders[0])} entries, G_{n} has {g.n} vertices")
    else:
        if args.seed is None:
            raise UsageError("cover without an order file requires an explicit --seed")
        orders = [LinearOrder.random(g.n, derive_seed(args.seed, k)) for k in range(args.samples or 1)]
    bound = cover_bound(n)
    for pi in orders:
        family = cover_by_transitive(n, pi, g=g)
        if args.verify:
            _require(is_left_proper_cover(g, family), "cover is not a proper left colouring")
            _require(len(family.parts) <= bound, "cover above bound")
        print(f"parts = {len(family.parts)} (bound {bound}); sizes " + " ".join(str(len(p)) for p in family.parts))
    return EXIT_OK


def cmd_oddcycle(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, OrientedGraph):
        raise UsageError("oddcycle expects an oriented graph (.dg or .trn)")
    witness = acyclic_3chromatic_subgraph(obj, search_cap=args.limit or SEARCH_CAP)
    if args.verify:
        verify_cycle_witness(obj, witness)
    print(f"inconsistent odd cycle of length {witness.length}: " + " ".join(map(str, witness.vertices)))
    if args.output:
        write_graph_file(args.output, witness.as_digraph(obj))
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.config:
        cfg = ExperimentConfig.from_text(Path(args.config).read_text())
        if args.seed is not None:
            cfg = ExperimentConfig(cfg.sizes, cfg.trials, args.seed, cfg.chi_exact_limit)
    else:
        if args.seed is None or args.n is None:
            raise UsageError("experiment needs --config, or --n with an explicit --seed")
        cfg = ExperimentConfig((args.n,), args.samples or 20, args.seed)
    cfg = ExperimentConfig(
        cfg.sizes, cfg.trials, cfg.seed, args.limit or cfg.chi_exact_limit, args.timing, args.workers
    )
    records = run_experiment(cfg)
    text = to_csv(records)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    means = mean_by_size(records)
    if args.verify:
        for r in records:
            _require(r.chi_right_identity >= asymptotic_scale(r.n), f"n={r.n} trial={r.trial} below n/(2 log2 n)")
    summary = sys.stdout if args.output else sys.stderr
    print("n      mean_chi  n/(2log2 n)", file=summary)
    for n, m in means.items():
        print(f"{n:<6} {m:8.3f}  {asymptotic_scale(n):11.3f}", file=summary)
    return EXIT_OK


# ---------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--verify", action="store_true", help="re-check every certificate independently")
    common.add_argument("--limit", type=int, help="override the size cap")
    common.add_argument("-o", "--output")

    parser = _Parser(prog="acychrom", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", action="store_true", help="print the active kernel backend and exit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a tournament")
    p.add_argument("family", choices=["gn", "random", "transitive"])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("f", parents=[common], help="exact f(G) or a sampled lower bound")
    p.add_argument("mode", choices=["exact", "bound"])
    p.add_argument("file")
    p.set_defaults(func=cmd_f)

    p = sub.add_parser("chromatic", parents=[common], help="exact chromatic number")
    p.add_argument("file")
    p.add_argument("--timeout", type=float)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("clique", parents=[common], help="maximum clique")
    p.add_argument("file")
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("destroyer", parents=[common], help="order with no large right transitive set")
    p.add_argument("file")
    p.set_defaults(func=cmd_destroyer)

    p = sub.add_parser("thm1", parents=[common], help="six-block ordering and both chromatic numbers")
    p.add_argument("file")
    p.set_defaults(func=cmd_thm1)

    p = sub.add_parser("cyclic-triangles", parents=[common], help="cyclic-triangle census")
    p.add_argument("file")
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("points", parents=[common], help="interval quadruples among points of [n]^2")
    p.add_argument("mode", choices=["check", "tight"])
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("cover", parents=[common], help="cover G_n's right subgraph by transitive sets")
    p.add_argument("order", nargs="?", help="optional .ord file; otherwise --seed draws random orders")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("oddcycle", parents=[common], help="inconsistent odd cycle of a 4-chromatic orientation")
    p.add_argument("file")
    p.set_defaults(func=cmd_oddcycle)

    p = sub.add_parser("experiment", parents=[common], help="random-tournament chi experiment (CSV)")
    p.add_argument("--config")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes output non-reproducible)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_experiment)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.backend:
            print(_backend.name())
            return EXIT_OK
        if not args.command:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (VerificationFailed, ChromaticTooLow, NoOddCycle) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (SizeLimitExceeded, Timeout) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (PreconditionViolated, DimensionMismatch, AcychromError, OSError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
