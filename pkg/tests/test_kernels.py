import os
import subprocess
import sys

import numpy as np
import pytest

from sga import _kernels
from sga.tables import Dihedral, DirectProduct, GraphExtension, Metacyclic, Symmetric, Cyclic, realize

needs_numba = pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")

TABLES = [realize(r) for r in (Cyclic(12), Symmetric(4), DirectProduct(Dihedral(8), Cyclic(3)),
                                GraphExtension(Metacyclic(7, 3, 2), (-1, 1)))]


@needs_numba
@pytest.mark.parametrize("g", TABLES, ids=lambda g: str(g.n))
def test_backends_agree(g):
    np_, nb = _kernels.numpy_impl, _kernels.numba_impl
    assert np_.is_associative(g.mul) == nb.is_associative(g.mul) is True
    assert np.array_equal(np_.element_orders(g.mul, g.identity), nb.element_orders(g.mul, g.identity))
    rng = np.random.default_rng(0)
    for _ in range(20):
        gens = rng.choice(g.n, size=rng.integers(0, 3), replace=False)
        seed = np.zeros(g.n, dtype=np.bool_)
        seed[g.identity] = True
        assert np.array_equal(np_.closure(g.mul, gens, seed), nb.closure(g.mul, gens, seed))


@needs_numba
def test_backends_agree_on_non_associative():
    rng = np.random.default_rng(1)
    mul = np.array([rng.permutation(6) for _ in range(6)], dtype=np.int64)
    assert _kernels.numpy_impl.is_associative(mul) == _kernels.numba_impl.is_associative(mul)
    bad = np.array([[0, 1, 2], [1, 2, 0], [2, 1, 0]], dtype=np.int64)
    assert not _kernels.numpy_impl.is_associative(bad)
    assert not _kernels.numba_impl.is_associative(bad)


def test_env_flag_selects_numpy():
    env = dict(os.environ, SGA_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from sga import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_active_backend_is_known():
    assert _kernels.BACKEND in ("numba", "numpy")
