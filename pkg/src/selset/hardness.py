"""Monotone 3-CNF to bichromatic graph, plus the assignment/subset converters.

Fixed id layout: variable i owns ids 6(i-1)+1 .. 6i in the order
x1, x2, x3, nx1, nx2, nx3 (positive literal path, then negative); clause j
owns 6n+3(j-1)+1 .. 6n+3j in the order c1, c2, c3. Color 1 is red and
color 2 blue.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import ColoredGraph, is_selective

RED, BLUE = 1, 2


class CnfError(ValueError):
    pass


class SubsetDecodeError(ValueError):
    """A subset that cannot be turned back into an assignment; ``reason`` says why."""

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(f"{reason}: {message}")


@dataclass(frozen=True)
class Clause:
    positive: bool
    variables: tuple[int, int, int]

    def satisfied(self, assignment: Sequence[bool]) -> bool:
        vals = [assignment[v - 1] for v in self.variables]
        return any(vals) if self.positive else not all(vals)

    def literals(self) -> list[int]:
        return [v if self.positive else -v for v in self.variables]


@dataclass(frozen=True)
class MonotoneCnf:
    nvars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise CnfError("formula needs at least one variable")
        for cl in self.clauses:
            if len(cl.variables) != 3:
                raise CnfError(f"clause {cl.literals()} does not have exactly 3 literals")
            if len(set(cl.variables)) != 3:
                raise CnfError(f"clause {cl.literals()} repeats a variable")
            if not all(1 <= v <= self.nvars for v in cl.variables):
                raise CnfError(f"clause {cl.literals()} uses a variable outside 1..{self.nvars}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @classmethod
    def from_literals(cls, nvars: int, clauses: Iterable[Sequence[int]]) -> "MonotoneCnf":
        out = []
        for lits in clauses:
            lits = list(lits)
            if len(lits) != 3:
                raise CnfError(f"clause {lits} does not have exactly 3 literals")
            if 0 in lits:
                raise CnfError(f"clause {lits} contains literal 0")
            if len({l > 0 for l in lits}) != 1:
                raise CnfError(f"clause {lits} mixes positive and negative literals")
            out.append(Clause(lits[0] > 0, tuple(abs(l) for l in lits)))
        return cls(nvars, tuple(out))

    def satisfied(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.nvars:
            raise CnfError(f"assignment has {len(assignment)} values for {self.nvars} variables")
        return all(cl.satisfied(assignment) for cl in self.clauses)

    def satisfying_assignments(self):
        """Every satisfying assignment, by 2^n enumeration (tiny formulas only)."""
        for bits in itertools.product((False, True), repeat=self.nvars):
            if self.satisfied(bits):
                yield bits

    def is_satisfiable(self) -> bool:
        return next(self.satisfying_assignments(), None) is not None


def parse_monotone_cnf(text: str | bytes) -> MonotoneCnf:
    """DIMACS ``p cnf n m`` with one 3-literal clause per line, each ending in 0."""
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] in ("c", "%") or tok[0].startswith("#"):
            continue
        if tok[0] == "p":
            if header is not None or len(tok) != 4 or tok[1] != "cnf":
                raise CnfError(f"line {lineno}: malformed header, expected 'p cnf <n> <m>'")
            try:
                header = (int(tok[2]), int(tok[3]))
            except ValueError:
                raise CnfError(f"line {lineno}: malformed header") from None
            continue
        if header is None:
            raise CnfError(f"line {lineno}: clause before 'p cnf' header")
        try:
            lits = [int(t) for t in tok]
        except ValueError:
            raise CnfError(f"line {lineno}: non-integer literal") from None
        if lits[-1] != 0:
            raise CnfError(f"line {lineno}: clause not terminated by 0")
        lits = lits[:-1]
        if len(lits) != 3:
            raise CnfError(f"line {lineno}: clause size {len(lits)}, expected 3")
        if 0 in lits:
            raise CnfError(f"line {lineno}: literal 0 inside clause")
        if len({l > 0 for l in lits}) != 1:
            raise CnfError(f"line {lineno}: mixed-polarity clause {lits}")
        if len({abs(l) for l in lits}) != 3:
            raise CnfError(f"line {lineno}: repeated variable in clause {lits}")
        if max(abs(l) for l in lits) > header[0]:
            raise CnfError(f"line {lineno}: variable outside 1..{header[0]}")
        clauses.append(lits)
    if header is None:
        raise CnfError("missing 'p cnf' header")
    if len(clauses) != header[1]:
        raise CnfError(f"header declares {header[1]} clauses, body has {len(clauses)}")
    return MonotoneCnf.from_literals(header[0], clauses)


def format_cnf(cnf: MonotoneCnf) -> str:
    out = [f"p cnf {cnf.nvars} {cnf.m}"]
    out.extend(" ".join(map(str, cl.literals())) + " 0" for cl in cnf.clauses)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class VertexMap:
    """Gadget vertex ids: ``x[i]``/``nx[i]`` are the positive/negative literal paths."""

    x: tuple[tuple[int, int, int], ...]
    nx: tuple[tuple[int, int, int], ...]
    c: tuple[tuple[int, int, int], ...]

    @classmethod
    def layout(cls, nvars: int, m: int) -> "VertexMap":
        x = tuple(tuple(6 * i + k for k in (1, 2, 3)) for i in range(nvars))
        nx = tuple(tuple(6 * i + k for k in (4, 5, 6)) for i in range(nvars))
        c = tuple(tuple(6 * nvars + 3 * j + k for k in (1, 2, 3)) for j in range(m))
        return cls(x, nx, c)

    @property
    def total(self) -> int:
        return 6 * len(self.x) + 3 * len(self.c)

    def check(self) -> None:
        ids = [v for grp in (self.x, self.nx, self.c) for t in grp for v in t]
        if sorted(ids) != list(range(1, len(ids) + 1)):
            raise CnfError("vertex map ids are not a bijection onto 1..6n+3m")


def reduce_to_graph(
    cnf: MonotoneCnf, clause_colors: str = "two", *, require_connected: bool = True
) -> tuple[ColoredGraph, VertexMap]:
    """Build the 6n+3m vertex, 8n+5m edge gadget graph.

    ``clause_colors="distinct"`` gives each clause's {c1, c2} pair its own color
    2 + j instead of red. The output is disconnected when some variable
    appears in no clause; pass ``require_connected=False`` to accept that.
    """
    if clause_colors not in ("two", "distinct"):
        raise CnfError(f"clause_colors must be 'two' or 'distinct', not {clause_colors!r}")
    vmap = VertexMap.layout(cnf.nvars, cnf.m)
    colors = [0] * vmap.total
    edges = []
    for (x1, x2, x3), (n1, n2, n3) in zip(vmap.x, vmap.nx):
        colors[x1 - 1] = colors[n1 - 1] = RED
        for v in (x2, x3, n2, n3):
            colors[v - 1] = BLUE
        edges += [(x1, x2), (x2, x3), (n1, n2), (n2, n3)]
        edges += [(x1, n1), (x2, n3), (x3, n2), (x3, n3)]
    for j, (cl, (c1, c2, c3)) in enumerate(zip(cnf.clauses, vmap.c), 1):
        pair = RED if clause_colors == "two" else 2 + j
        colors[c1 - 1] = colors[c2 - 1] = pair
        colors[c3 - 1] = BLUE
        edges += [(c1, c2), (c2, c3)]
        lit_path = vmap.x if cl.positive else vmap.nx
        edges += [(c3, lit_path[v - 1][2]) for v in cl.variables]
    g = ColoredGraph.from_edges(vmap.total, colors, edges, connected=require_connected)
    return g, vmap


def assignment_to_subset(cnf: MonotoneCnf, assignment: Sequence[bool], vmap: VertexMap) -> list[int]:
    """x_i true -> {x1, x3}, false -> {nx1, nx3}; plus c1 of every clause."""
    assignment = [bool(b) for b in assignment]
    if not cnf.satisfied(assignment):
        bad = [j + 1 for j, cl in enumerate(cnf.clauses) if not cl.satisfied(assignment)]
        raise CnfError(f"assignment does not satisfy clauses {bad}")
    out = []
    for val, xs, nxs in zip(assignment, vmap.x, vmap.nx):
        path = xs if val else nxs
        out += [path[0], path[2]]
    out += [c[0] for c in vmap.c]
    return sorted(out)


def subset_to_assignment(
    cnf: MonotoneCnf, subset: Iterable[int], vmap: VertexMap, graph: ColoredGraph | None = None
) -> list[bool]:
    """Decode a size-(2n+m) selective subset back into a satisfying assignment.

    The subset must take one of {x1, nx1} and one of {x3, nx3} from each
    variable gadget, nothing else from it, and one of {c1, c2} from each
    clause gadget. x_i is read as true iff x3 is taken.
    """
    subset = set(subset)
    if graph is None:
        graph, _ = reduce_to_graph(cnf, require_connected=False)
    if len(subset) != 2 * cnf.nvars + cnf.m:
        raise SubsetDecodeError(
            "wrong-size", f"subset has {len(subset)} vertices, expected 2n+m = {2 * cnf.nvars + cnf.m}"
        )
    verdict = is_selective(graph, subset)
    if not verdict:
        raise SubsetDecodeError("not-selective", f"vertex {verdict.witness} has no same-colored nearest neighbor")
    assignment = []
    for i, (xs, nxs) in enumerate(zip(vmap.x, vmap.nx), 1):
        red = subset & {xs[0], nxs[0]}
        third = subset & {xs[2], nxs[2]}
        middle = subset & {xs[1], nxs[1]}
        if len(red) != 1 or len(third) != 1 or middle:
            raise SubsetDecodeError("not-decomposable", f"variable gadget {i} does not match the pattern")
        assignment.append(xs[2] in third)
    for j, cs in enumerate(vmap.c, 1):
        if len(subset & {cs[0], cs[1]}) != 1 or cs[2] in subset:
            raise SubsetDecodeError("not-decomposable", f"clause gadget {j} does not match the pattern")
    if not cnf.satisfied(assignment):
        raise SubsetDecodeError("not-satisfying", "decoded assignment does not satisfy the formula")
    return assignment


# ---------------------------------------------------------------- text formats


def format_vertex_map(vmap: VertexMap) -> str:
    out = []
    out += [f"x {i} {a} {b} {c}" for i, (a, b, c) in enumerate(vmap.x, 1)]
    out += [f"nx {i} {a} {b} {c}" for i, (a, b, c) in enumerate(vmap.nx, 1)]
    out += [f"c {j} {a} {b} {c}" for j, (a, b, c) in enumerate(vmap.c, 1)]
    return "\n".join(out) + "\n"


def parse_vertex_map(text: str) -> VertexMap:
    groups: dict[str, dict[int, tuple[int, int, int]]] = {"x": {}, "nx": {}, "c": {}}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0].startswith("#"):
            continue
        if tok[0] not in groups or len(tok) != 5:
            raise CnfError(f"line {lineno}: malformed map line")
        try:
            idx, *ids = (int(t) for t in tok[1:])
        except ValueError:
            raise CnfError(f"line {lineno}: non-integer field") from None
        if idx in groups[tok[0]]:
            raise CnfError(f"line {lineno}: duplicate {tok[0]} {idx}")
        groups[tok[0]][idx] = tuple(ids)

    def ordered(kind):
        g = groups[kind]
        if sorted(g) != list(range(1, len(g) + 1)):
            raise CnfError(f"map {kind} entries are not numbered 1..{len(g)}")
        return tuple(g[i] for i in range(1, len(g) + 1))

    vmap = VertexMap(ordered("x"), ordered("nx"), ordered("c"))
    if len(vmap.x) != len(vmap.nx):
        raise CnfError("map has different numbers of x and nx entries")
    vmap.check()
    return vmap


def parse_assignment(text: str, nvars: int) -> list[bool]:
    """DIMACS-style literals (``1 -2 3``, optional ``v`` prefixes and trailing 0)."""
    lits = []
    for raw in text.splitlines():
        tok = raw.split()
        if not tok or tok[0] in ("c", "s") or tok[0].startswith("#"):
            continue
        lits += [int(t) for t in tok if t != "v"]
    lits = [l for l in lits if l != 0]
    vals: dict[int, bool] = {}
    for l in lits:
        v = abs(l)
        if not 1 <= v <= nvars:
            raise CnfError(f"assignment literal {l} outside 1..{nvars}")
        if v in vals and vals[v] != (l > 0):
            raise CnfError(f"variable {v} assigned both ways")
        vals[v] = l > 0
    if len(vals) != nvars:
        missing = sorted(set(range(1, nvars + 1)) - set(vals))
        raise CnfError(f"assignment misses variables {missing}")
    return [vals[v] for v in range(1, nvars + 1)]


def format_assignment(assignment: Sequence[bool]) -> str:
    return " ".join(str(i if b else -i) for i, b in enumerate(assignment, 1)) + " 0\n"
