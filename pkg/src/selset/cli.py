"""``selset`` command line.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 the instance does not meet the solver's precondition (or, for ``verify``
and ``subset-to-assignment``, the subset is rejected), 4 a solver produced
a subset that failed verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bench import instance_from_spec, instances_from_dir, format_csv, run_bench
from .boundary import boundary_partitions
from .brute import BlockTooLargeError, OracleConfig, exact_mss
from .generate import KINDS, GeneratorSpec, generate_text, parse_spec
from .graph import (
    ColoredGraph,
    GraphError,
    blocks,
    format_graph,
    format_subset,
    parse_graph,
    parse_subset,
    verify,
)
from .hardness import (
    CnfError,
    SubsetDecodeError,
    assignment_to_subset,
    format_assignment,
    format_vertex_map,
    parse_assignment,
    parse_monotone_cnf,
    parse_vertex_map,
    reduce_to_graph,
    subset_to_assignment,
)
from .interval import UnitIntervalInstance, build_interval_graph, parse_intervals, solve_unit_interval
from .setcover import SetCoverError, approx_mss, format_set_cover, to_set_cover
from .tree import solve_tree

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- input helpers


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc.strerror or exc}") from None


def _load(path: str, parse, what: str):
    text = _read(path)
    try:
        return parse(text)
    except (GraphError, CnfError, SetCoverError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"{path}: bad {what}: {exc}") from None


def _is_interval_file(text: str) -> bool:
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            return s.split()[:2] == ["p", "uim"]
    return False


def _load_instance(path: str) -> ColoredGraph | UnitIntervalInstance:
    text = _read(path)
    try:
        return parse_intervals(text) if _is_interval_file(text) else parse_graph(text)
    except (GraphError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"{path}: bad instance: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc.strerror or exc}") from None


# ---------------------------------------------------------------- commands


def cmd_solve(args) -> int:
    inst = _load_instance(args.input)
    intervals = inst if isinstance(inst, UnitIntervalInstance) else None
    if args.intervals:
        if intervals is not None:
            raise CliError(EXIT_USAGE, "--intervals only applies to graph-file input")
        intervals = _load(args.intervals, parse_intervals, "interval file")
    try:
        built = build_interval_graph(intervals) if intervals is not None else None
    except GraphError as exc:
        raise CliError(EXIT_INPUT, f"{args.input}: {exc}") from None
    if isinstance(inst, UnitIntervalInstance):
        g = built
    else:
        g = inst
        if built is not None and built != g:
            raise CliError(EXIT_PRECONDITION, f"{args.intervals} does not represent the graph in {args.input}")

    cls = args.klass
    if cls == "auto":
        cls = "tree" if g.m == g.n - 1 else "general"
    try:
        if cls == "tree":
            result = solve_tree(g, args.root)
        elif cls == "unit-interval":
            if intervals is None:
                raise CliError(EXIT_PRECONDITION, "unit-interval class needs an interval file ('p uim ...')")
            result = solve_unit_interval(intervals)
        elif cls == "general":
            result = approx_mss(g)
        else:
            result = exact_mss(g, OracleConfig(max_block=args.max_block))
    except (BlockTooLargeError, SetCoverError) as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None

    if args.emit_setcover:
        _emit_setcover(g, args.emit_setcover)

    verdict = verify(g, result.ids)
    if not verdict:
        raise CliError(EXIT_VERIFY, f"internal error: {result.method} output fails at vertex {verdict.witness}")
    _write(args.out, format_subset(result.ids.tolist()))
    print(f"size={result.size} method={result.method} blocks={g.num_blocks} verified=true", file=sys.stderr)
    return EXIT_OK


def _emit_setcover(g: ColoredGraph, path: str) -> None:
    try:
        inst = to_set_cover(g)
    except SetCoverError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    _write(path, format_set_cover(inst))


def cmd_emit_setcover(args) -> int:
    g = _load(args.input, parse_graph, "graph")
    _emit_setcover(g, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.graph, parse_graph, "graph")
    subset = _load(args.subset, parse_subset, "subset")
    try:
        verdict = verify(g, subset)
    except GraphError as exc:
        raise CliError(EXIT_INPUT, f"{args.subset}: {exc}") from None
    if verdict:
        print("selective")
        return EXIT_OK
    print(f"not selective: witness {verdict.witness}")
    return EXIT_PRECONDITION


def cmd_blocks(args) -> int:
    g = _load(args.input, parse_graph, "graph")
    lines = []
    for b, part in zip(blocks(g), boundary_partitions(g)):
        lines.append(
            f"block {b.id} color={b.color} members={_ids(b.members)} "
            f"b1={_ids(part.b1)} b2={_ids(part.b2)}"
        )
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _ids(vs) -> str:
    return ",".join(map(str, vs)) if vs else "-"


def cmd_reduce(args) -> int:
    cnf = _load(args.input, parse_monotone_cnf, "formula")
    try:
        g, vmap = reduce_to_graph(cnf, args.clause_colors)
    except GraphError as exc:
        raise CliError(EXIT_PRECONDITION, f"reduction failed: {exc}") from None
    _write(args.out, format_graph(g, f"reduction of {cnf.nvars} variables, {cnf.m} clauses"))
    if args.map:
        _write(args.map, format_vertex_map(vmap))
    return EXIT_OK


def cmd_assignment_to_subset(args) -> int:
    cnf = _load(args.cnf, parse_monotone_cnf, "formula")
    vmap = _load(args.map, parse_vertex_map, "vertex map")
    assignment = _load(args.assignment, lambda t: parse_assignment(t, cnf.nvars), "assignment")
    try:
        subset = assignment_to_subset(cnf, assignment, vmap)
    except CnfError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    _write(args.out, format_subset(subset))
    return EXIT_OK


def cmd_subset_to_assignment(args) -> int:
    cnf = _load(args.cnf, parse_monotone_cnf, "formula")
    vmap = _load(args.map, parse_vertex_map, "vertex map")
    subset = _load(args.subset, parse_subset, "subset")
    try:
        assignment = subset_to_assignment(cnf, subset, vmap)
    except SubsetDecodeError as exc:
        raise CliError(EXIT_PRECONDITION, f"{exc.reason}: {exc}") from None
    except GraphError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None
    _write(args.out, format_assignment(assignment))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        spec = GeneratorSpec(args.kind, args.n, args.c, args.seed, args.extra)
        text = generate_text(spec)
    except GraphError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    _write(args.out, text)
    return EXIT_OK


def cmd_bench(args) -> int:
    solvers = [s for s in args.solvers.split(",") if s] if args.solvers else []
    try:
        insts = [instance_from_spec(parse_spec(s)) for s in args.gen]
        if args.dir:
            insts += instances_from_dir(Path(args.dir))
        rows = run_bench(insts, solvers, repeats=args.repeats, max_block=args.max_block, jobs=args.jobs)
    except AssertionError as exc:
        raise CliError(EXIT_VERIFY, str(exc)) from None
    except GraphError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None
    _write(args.out, format_csv(rows, timing=not args.omit_timing))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="selset", description="Minimum selective subsets of vertex-colored graphs.")
    p.add_argument("--version", action="version", version=f"selset {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="compute a selective subset")
    s.add_argument("input", help="graph file ('p mss') or interval file ('p uim'); '-' for stdin")
    s.add_argument("--class", dest="klass", default="auto",
                   choices=["auto", "tree", "unit-interval", "general", "brute"])
    s.add_argument("--root", type=int, default=1, help="root vertex for the tree solver")
    s.add_argument("--max-block", type=int, default=20, help="largest block the brute solver will search")
    s.add_argument("--intervals", metavar="PATH", help="interval representation of a graph-file input")
    s.add_argument("--emit-setcover", metavar="PATH", help="also write the set-cover instance")
    s.add_argument("-o", "--out", help="subset output file (default stdout)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check that a subset is selective")
    s.add_argument("graph")
    s.add_argument("subset")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("blocks", help="list blocks with their B1 and B2 sets")
    s.add_argument("input")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("emit-setcover", help="write the set-cover instance of a graph")
    s.add_argument("input")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_emit_setcover)

    s = sub.add_parser("reduce", help="build the gadget graph of a monotone 3-CNF")
    s.add_argument("input")
    s.add_argument("--out", "-o")
    s.add_argument("--map", help="write the gadget vertex map here")
    s.add_argument("--clause-colors", choices=["two", "distinct"], default="two")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("assignment-to-subset", help="map a satisfying assignment to a subset")
    s.add_argument("cnf")
    s.add_argument("map")
    s.add_argument("assignment")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_assignment_to_subset)

    s = sub.add_parser("subset-to-assignment", help="decode a 2n+m subset into an assignment")
    s.add_argument("cnf")
    s.add_argument("map")
    s.add_argument("subset")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_subset_to_assignment)

    s = sub.add_parser("gen", help="generate a seeded random instance")
    s.add_argument("--kind", required=True, choices=KINDS)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--extra", type=float, help="interval length L, or extra-edge probability")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time solvers and write CSV")
    s.add_argument("--gen", action="append", default=[], metavar="KIND:N:C:SEED[:EXTRA]")
    s.add_argument("--dir", help="directory of instance files")
    s.add_argument("--solvers", default="", help="comma list of tree,interval,greedy,brute")
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--max-block", type=int, default=20)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--omit-timing", action="store_true", help="leave wall_us empty for byte-stable output")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"selset: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
