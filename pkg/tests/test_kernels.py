import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from seifnet import _kernels
from seifnet.classify import closed_form_indices

needs_numba = pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba unavailable")


def test_numpy_grid_agrees_with_scalar():
    r = np.arange(-12, 13)
    g = _kernels.knm_index_grid(r, r, use_numba=False)
    assert np.array_equal(g[:3], g[3:])
    assert tuple(g[:3, 0, 0]) == tuple(t[2] for t in closed_form_indices(-12, -12))


@needs_numba
def test_backends_agree_on_grid():
    r = np.arange(-60, 61)
    assert np.array_equal(_kernels.knm_index_grid(r, r, use_numba=True),
                          _kernels.knm_index_grid(r, r, use_numba=False))


@needs_numba
@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 50), st.integers(0, 200)),
                min_size=3, max_size=3), st.integers(-300, 300), st.integers(2, 40))
def test_backends_agree_on_witness(targets, d, bound):
    slopes = [d - 1, d - 2, d - 3]
    assert _kernels.torus_witness(targets, slopes, bound, use_numba=True) == \
        _kernels.torus_witness(targets, slopes, bound, use_numba=False)


@pytest.mark.parametrize("use_numba", [False, pytest.param(True, marks=needs_numba)])
def test_witness_finds_torus_knots(use_numba):
    for p, q in ((-3, 2), (5, 2), (-7, 3), (11, 4)):
        d = 6
        targets = [sorted((abs(p), q, abs(p * q - r))) for r in (d - 1, d - 2, d - 3)]
        found = _kernels.torus_witness(targets, [d - 1, d - 2, d - 3], 20, use_numba)
        assert found is not None
        fp, fq = found
        # the first witness in search order reproduces the same data
        assert [sorted((abs(fp), fq, abs(fp * fq - r))) for r in (d - 1, d - 2, d - 3)] == targets


def test_range_checks():
    with pytest.raises(OverflowError):
        _kernels.knm_index_grid([10 ** 6], [1])
    with pytest.raises(OverflowError):
        _kernels.torus_witness([(2, 3, 5)] * 3, [1, 2, 3], 10 ** 5)
    with pytest.raises(OverflowError):
        _kernels.torus_witness([(2, 3, 5)] * 3, [2 ** 60, 2, 3], 10)


def test_env_flag_disables_numba():
    env = dict(os.environ, SEIFNET_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from seifnet import _kernels; print(_kernels.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_requesting_missing_numba(monkeypatch):
    monkeypatch.setattr(_kernels, "HAS_NUMBA", False)
    with pytest.raises(RuntimeError):
        _kernels.knm_index_grid([0], [0], use_numba=True)
