import importlib.util
import os
import subprocess
import sys

import numpy as np
import pytest

from selset import kernels
from selset._accel import NUMBA_ENABLED

SCRIPT = r"""
import numpy as np
from selset import BACKEND, solve_tree, solve_unit_interval, build_interval_graph, is_selective
from selset.generate import GeneratorSpec, generate
out = [BACKEND]
for s in range(40):
    t = generate(GeneratorSpec("random-tree", 60, 3, s))
    out.append(" ".join(map(str, solve_tree(t).members)))
    i = generate(GeneratorSpec("random-unit-interval", 60, 3, s, 3))
    out.append(" ".join(map(str, solve_unit_interval(i).members)))
print("\n".join(out))
"""


def _run(flag):
    env = dict(os.environ)
    env.pop("SELSET_DISABLE_NUMBA", None)
    if flag:
        env["SELSET_DISABLE_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, "-c", SCRIPT], capture_output=True, text=True, env=env, check=True)
    return proc.stdout.splitlines()


def test_fallback_flag_selects_numpy_and_matches():
    slow = _run(True)
    assert slow[0] == "numpy"
    fast = _run(False)
    assert fast[0] == ("numba" if importlib.util.find_spec("numba") else "numpy")
    assert fast[1:] == slow[1:]


def test_backend_tag():
    assert kernels.BACKEND in ("numba", "numpy")


@pytest.mark.skipif(not NUMBA_ENABLED, reason="numba not active")
def test_py_func_available_for_every_loop_kernel():
    from selset.kernels import loops

    for name in ("rooted_bfs", "block_labels", "boundary_flags", "tree_prepare", "tree_select",
                 "interval_structure", "interval_sweep", "first_violation", "block_violation"):
        assert callable(getattr(loops, name).py_func)


def test_vectorized_kernels_match_loops_on_general_graphs():
    from selset.kernels import loops, vectorized
    from instances import small_graphs

    for g in small_graphs(60, seed=4, nmax=30):
        a = loops.block_labels(g.indptr, g.indices, g.colors, g.n)
        b = vectorized.block_labels(g.indptr, g.indices, g.colors, g.n)
        assert np.array_equal(a[0], b[0]) and a[1] == b[1]
        assert np.array_equal(
            loops.boundary_flags(g.indptr, g.indices, g.colors, g.n),
            vectorized.boundary_flags(g.indptr, g.indices, g.colors, g.n),
        )
        for root in (1, g.n):
            x = loops.rooted_bfs(g.indptr, g.indices, g.n, root)
            y = vectorized.rooted_bfs(g.indptr, g.indices, g.n, root)
            assert all(np.array_equal(p, q) for p, q in zip(x, y))
