"""Vectorised integer kernels for parameter sweeps.

Each kernel has a numba ``@njit`` implementation and a pure-numpy fallback.
Numba is used when importable unless ``SEIFNET_DISABLE_NUMBA=1``.  All
arithmetic is int64; inputs are range-checked so nothing can wrap.
"""
from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

# |m|, |n| bound keeping n(m+2)(m+6) far below 2**63
GRID_LIMIT = 10 ** 5
# bound on |p| for the torus-knot search and on the surgery slopes it sees
SEARCH_BOUND_LIMIT = 10 ** 4
SLOPE_LIMIT = 2 ** 53


def _numba_wanted() -> bool:
    return os.environ.get("SEIFNET_DISABLE_NUMBA", "").lower() not in ("1", "true", "yes")


try:
    if not _numba_wanted():
        raise ImportError
    from numba import njit
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def backend() -> str:
    return "numba" if HAS_NUMBA else "numpy"


def _check_grid(ms, ns):
    if ms.size and int(np.abs(ms).max()) > GRID_LIMIT:
        raise OverflowError(f"|m| exceeds {GRID_LIMIT}")
    if ns.size and int(np.abs(ns).max()) > GRID_LIMIT:
        raise OverflowError(f"|n| exceeds {GRID_LIMIT}")


# -- closed forms and the homology path over an (m, n) grid --------------------

def _closed_np(m, n):
    a = np.abs(n * (m + 2) * (m + 6) + m + n + 6)
    b = np.abs(3 * n * (m + 3) - 2 * n + 3)
    c = np.abs(2 * n * (m + 4) - 3 * n + 2)
    return a, b, c


def _homology_np(m, n):
    # meridian role: image of -1/n is (n*s + 1)[l'] + (n*s*m + n + m)[mu'],
    # s = m + 2, paired with the knot fiber [l'] - 6[mu']
    s = m + 2
    lam, mu = n * s + 1, n * s * m + n + m
    x = np.abs(mu * 1 - lam * -6)
    # moved s_-3: image (-n)[l] + (n(m+3) + 1)[mu] against -3[l] + 2[mu]
    lam, mu = -n, n * (m + 3) + 1
    y = np.abs(mu * -3 - lam * 2)
    # moved s_2: image (-n)[l] + (n(m+4) + 1)[mu] against 2[l] - 3[mu]
    lam, mu = -n, n * (m + 4) + 1
    z = np.abs(mu * 2 - lam * -3)
    return x, y, z


if HAS_NUMBA:
    @njit(cache=True)
    def _grid_nb(ms, ns, out):
        for i in range(ms.size):
            m = ms[i]
            for j in range(ns.size):
                n = ns[j]
                out[0, i, j] = abs(n * (m + 2) * (m + 6) + m + n + 6)
                out[1, i, j] = abs(3 * n * (m + 3) - 2 * n + 3)
                out[2, i, j] = abs(2 * n * (m + 4) - 3 * n + 2)
                s = m + 2
                lam = n * s + 1
                mu = n * s * m + n + m
                out[3, i, j] = abs(mu + 6 * lam)
                mu = n * (m + 3) + 1
                out[4, i, j] = abs(-3 * mu + 2 * n)
                mu = n * (m + 4) + 1
                out[5, i, j] = abs(2 * mu - 3 * n)


def knm_index_grid(ms, ns, use_numba: bool | None = None) -> np.ndarray:
    """Array ``(6, len(ms), len(ns))``: rows 0-2 are the closed-form third
    indices a, b, c; rows 3-5 the same indices via slope images and the
    intersection pairing."""
    ms = np.asarray(ms, dtype=np.int64)
    ns = np.asarray(ns, dtype=np.int64)
    _check_grid(ms, ns)
    if use_numba is None:
        use_numba = HAS_NUMBA
    if use_numba and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but unavailable")
    if use_numba:
        out = np.empty((6, ms.size, ns.size), dtype=np.int64)
        _grid_nb(ms, ns, out)
        return out
    m, n = np.meshgrid(ms, ns, indexing="ij")
    return np.stack(_closed_np(m, n) + _homology_np(m, n))


# -- brute-force torus-knot search --------------------------------------------

@lru_cache(maxsize=8)
def _pq_table(bound: int):
    """Candidate (p, q) in search order: q ascending, |p| ascending, p < 0 first."""
    rows = []
    for q in range(2, bound):
        ap = np.arange(q + 1, bound + 1, dtype=np.int64)
        ap = ap[np.gcd(ap, q) == 1]
        ps = np.empty(2 * ap.size, dtype=np.int64)
        ps[0::2], ps[1::2] = -ap, ap
        rows.append(np.stack([ps, np.full_like(ps, q)]))
    if not rows:
        return np.empty((2, 0), dtype=np.int64)
    return np.concatenate(rows, axis=1)


def _witness_np(targets, slopes, bound):
    p, q = _pq_table(bound)
    ok = np.ones(p.size, dtype=bool)
    ap = np.abs(p)
    for t, r in zip(targets, slopes):
        third = np.abs(p * q - r)
        trip = np.sort(np.stack([ap, q, third], axis=1), axis=1)
        ok &= (trip == np.asarray(t, dtype=np.int64)).all(axis=1)
        if not ok.any():
            return None
    k = int(np.argmax(ok))
    return int(p[k]), int(q[k])


if HAS_NUMBA:
    @njit(cache=True)
    def _gcd_nb(a, b):
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _witness_nb(targets, slopes, bound):
        for q in range(2, bound):
            for ap in range(q + 1, bound + 1):
                if _gcd_nb(ap, q) != 1:
                    continue
                for sgn in (-1, 1):
                    p = sgn * ap
                    ok = True
                    for i in range(3):
                        x0, x1, x2 = ap, q, abs(p * q - slopes[i])
                        if x0 > x1:
                            x0, x1 = x1, x0
                        if x1 > x2:
                            x1, x2 = x2, x1
                        if x0 > x1:
                            x0, x1 = x1, x0
                        if x0 != targets[i, 0] or x1 != targets[i, 1] or x2 != targets[i, 2]:
                            ok = False
                            break
                    if ok:
                        return p, q
        return 0, 0


def torus_witness(targets, slopes, bound: int, use_numba: bool | None = None):
    """First ``(p, q)`` with ``2 <= q < |p| <= bound``, ``gcd(p, q) = 1`` and
    ``sorted(|p|, q, |pq - slopes[i]|) == targets[i]`` for every ``i``."""
    if bound > SEARCH_BOUND_LIMIT:
        raise OverflowError(f"search bound exceeds {SEARCH_BOUND_LIMIT}")
    if any(abs(int(r)) >= SLOPE_LIMIT for r in slopes):
        raise OverflowError("surgery slope too large for int64 search")
    tg = np.array([sorted(t) for t in targets], dtype=np.int64)
    sl = np.array(slopes, dtype=np.int64)
    if use_numba is None:
        use_numba = HAS_NUMBA
    if use_numba and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but unavailable")
    if use_numba:
        p, q = _witness_nb(tg, sl, bound)
        return None if q == 0 else (int(p), int(q))
    return _witness_np(tg, sl, bound)
