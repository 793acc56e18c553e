"""Kernel dispatch.

With numba on, every kernel is the compiled loop from ``loops``. With it off
(``SELSET_DISABLE_NUMBA=1`` or numba missing), kernels that vectorize come
from ``vectorized``; the inherently sequential sweeps fall back to the same
loops run by the interpreter.
"""

from .._accel import NUMBA_ENABLED
from . import loops, vectorized

if NUMBA_ENABLED:
    rooted_bfs = loops.rooted_bfs
    block_labels = loops.block_labels
    boundary_flags = loops.boundary_flags
    tree_select = loops.tree_select
    tree_prepare = loops.tree_prepare
else:
    rooted_bfs = vectorized.rooted_bfs
    block_labels = vectorized.block_labels
    boundary_flags = vectorized.boundary_flags
    tree_select = vectorized.tree_select
    tree_prepare = vectorized.tree_prepare

interval_structure = loops.interval_structure
interval_sweep = loops.interval_sweep
first_violation = loops.first_violation
block_violation = loops.block_violation
first_hitting_combination = loops.first_hitting_combination

BACKEND = "numba" if NUMBA_ENABLED else "numpy"

__all__ = [
    "BACKEND",
    "block_labels",
    "block_violation",
    "boundary_flags",
    "first_hitting_combination",
    "first_violation",
    "interval_structure",
    "interval_sweep",
    "loops",
    "rooted_bfs",
    "tree_prepare",
    "tree_select",
    "vectorized",
]
