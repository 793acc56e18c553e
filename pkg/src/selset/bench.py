"""Benchmark harness: run solvers over instances and write CSV rows.

Rows are sorted by (instance id, solver tag) whatever order the work ran in.
Instance/solver pairs that do not fit (a tree solver on a cyclic graph, the
interval solver on a plain graph file) are reported on stderr and skipped.
"""

from __future__ import annotations

import csv
import io
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .brute import OracleConfig, exact_mss
from .generate import GeneratorSpec, generate
from .graph import ColoredGraph, GraphError, SelectiveSubset, parse_graph, verify
from .interval import UnitIntervalInstance, build_interval_graph, parse_intervals, solve_unit_interval
from .setcover import approx_mss
from .tree import solve_tree

SOLVERS = ("tree", "interval", "greedy", "brute")
# CLI class names accepted as aliases
ALIASES = {"unit-interval": "interval", "general": "greedy"}


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n: int
    m: int
    c: int
    solver: str
    size: int
    block_lower_bound: int
    wall_us: int | None
    verified: bool


HEADER = [f.name for f in fields(BenchRecord)]


@dataclass
class Instance:
    instance_id: str
    graph: ColoredGraph
    intervals: UnitIntervalInstance | None = None


class Mismatch(Exception):
    pass


def solver_tag(name: str) -> str:
    tag = ALIASES.get(name, name)
    if tag not in SOLVERS:
        raise GraphError(f"unknown solver {name!r}; choose from {', '.join(SOLVERS)}")
    return tag


def _runner(tag: str, inst: Instance, max_block: int) -> Callable[[], SelectiveSubset]:
    g = inst.graph
    if tag == "tree":
        if g.m != g.n - 1:
            raise Mismatch("not a tree")
        return lambda: solve_tree(g)
    if tag == "interval":
        if inst.intervals is None:
            raise Mismatch("no interval representation")
        return lambda: solve_unit_interval(inst.intervals)
    if tag == "greedy":
        return lambda: approx_mss(g)
    cfg = OracleConfig(max_block=max_block)
    return lambda: exact_mss(g, cfg)


def run_one(inst: Instance, tag: str, repeats: int = 3, max_block: int = 20) -> BenchRecord:
    """Best-of-``repeats`` wall time in microseconds, then verify the last result."""
    run = _runner(tag, inst, max_block)
    best = None
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter_ns()
        result = run()
        dt = (time.perf_counter_ns() - t0) // 1000
        best = dt if best is None else min(best, dt)
    g = inst.graph
    ok = bool(verify(g, result))
    return BenchRecord(inst.instance_id, g.n, g.m, g.c, tag, result.size, g.num_blocks, best, ok)


def run_bench(
    instances: Sequence[Instance],
    solvers: Iterable[str],
    *,
    repeats: int = 3,
    max_block: int = 20,
    jobs: int = 1,
    log=sys.stderr,
) -> list[BenchRecord]:
    tags = sorted({solver_tag(s) for s in solvers})
    work = []
    for inst in instances:
        for tag in tags:
            try:
                _runner(tag, inst, max_block)
            except Mismatch as exc:
                print(f"skip {inst.instance_id} {tag}: {exc}", file=log)
                continue
            work.append((inst, tag))

    def task(item):
        return run_one(item[0], item[1], repeats, max_block)

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            rows = list(pool.map(task, work))
    else:
        rows = [task(w) for w in work]
    bad = [r for r in rows if not r.verified]
    if bad:
        raise AssertionError(f"unverified result from {bad[0].solver} on {bad[0].instance_id}")
    return sorted(rows, key=lambda r: (r.instance_id, r.solver))


def scaling_slopes(rows: Sequence[BenchRecord]) -> dict[str, float]:
    """Least-squares slope of log(wall time) against log(n), per solver.

    Times are first reduced to the median per distinct n. Solvers with fewer
    than two sizes, or any zero time, get no slope.
    """
    out = {}
    for tag in sorted({r.solver for r in rows}):
        by_n: dict[int, list[int]] = {}
        for r in rows:
            if r.solver == tag and r.wall_us is not None:
                by_n.setdefault(r.n, []).append(r.wall_us)
        if len(by_n) < 2:
            continue
        ns = np.array(sorted(by_n), dtype=float)
        ts = np.array([np.median(by_n[n]) for n in sorted(by_n)], dtype=float)
        if np.any(ts <= 0):
            continue
        out[tag] = float(np.polyfit(np.log(ns), np.log(ts), 1)[0])
    return out


def format_csv(rows: Sequence[BenchRecord], *, timing: bool = True) -> str:
    """CSV with header; with ``timing`` on, slope summaries follow as ``#`` lines."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        vals = list(astuple(r))
        vals[HEADER.index("wall_us")] = r.wall_us if timing else ""
        vals[HEADER.index("verified")] = "true" if r.verified else "false"
        w.writerow(vals)
    if timing:
        for tag, slope in scaling_slopes(rows).items():
            buf.write(f"# slope solver={tag} loglog={slope:.3f}\n")
    return buf.getvalue()


def instance_from_spec(spec: GeneratorSpec) -> Instance:
    obj = generate(spec)
    if isinstance(obj, UnitIntervalInstance):
        return Instance(spec.label, build_interval_graph(obj), obj)
    return Instance(spec.label, obj)


def instance_from_file(path: Path) -> Instance:
    text = path.read_text()
    head = next((l.split() for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")), [])
    if head[:2] == ["p", "uim"]:
        obj = parse_intervals(text)
        return Instance(path.name, build_interval_graph(obj), obj)
    return Instance(path.name, parse_graph(text))


def instances_from_dir(directory: Path) -> list[Instance]:
    return [instance_from_file(p) for p in sorted(directory.iterdir()) if p.is_file()]
