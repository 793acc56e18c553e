"""Minimum selective subsets on vertex-colored graphs.

Exact solvers for trees and unit interval graphs, a greedy set-cover
approximation for general graphs, a brute-force oracle, and a generator of
hard instances from monotone 3-CNF formulas.
"""

from .boundary import BoundaryPartition, boundary_partition, boundary_partitions
from .brute import BlockTooLargeError, OracleConfig, exact_block, exact_mss
from .graph import (
    Block,
    ColoredGraph,
    GraphError,
    GraphFormatError,
    SelectiveSubset,
    Verdict,
    block_lower_bound,
    blocks,
    format_graph,
    format_subset,
    hop_distance,
    is_selective,
    is_selective_fast,
    nearest_set,
    parse_graph,
    parse_subset,
)
from .hardness import (
    MonotoneCnf,
    VertexMap,
    assignment_to_subset,
    parse_monotone_cnf,
    reduce_to_graph,
    subset_to_assignment,
)
from .interval import (
    UnitIntervalInstance,
    build_interval_graph,
    parse_intervals,
    solve_unit_interval,
)
from .kernels import BACKEND
from .setcover import SetCoverInstance, approx_mss, greedy_set_cover, to_set_cover
from .tree import NotATreeError, RootedSubtree, solve_tree, subtrees

__version__ = "0.1.0"
