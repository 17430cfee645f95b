"""Row reduction kernels over GF(2), with and without numba.

Set ``RHFK_DISABLE_NUMBA=1`` to force the pure numpy path.  Both kernels
reduce a uint8 matrix in place to reduced row echelon form and return the
pivot columns; they produce identical output.

Numba is imported and the kernel compiled on first use, and only matrices
with at least ``NUMBA_MIN_SIZE`` entries are sent to it: below that the
numpy kernel is fast enough that JIT start-up would dominate.
"""

from __future__ import annotations

import importlib.util
import os

import numpy as np

_FLAG = os.environ.get("RHFK_DISABLE_NUMBA", "").strip().lower()
DISABLED = _FLAG in {"1", "true", "yes", "on"}

AVAILABLE = importlib.util.find_spec("numba") is not None
NUMBA_MIN_SIZE = 4096


def rref_numpy(A: np.ndarray) -> np.ndarray:
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hits = np.flatnonzero(A[r:, c])
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        rows = np.flatnonzero(A[:, c])
        rows = rows[rows != r]
        if rows.size:
            A[rows] ^= A[r]
        pivots.append(c)
        r += 1
    return np.asarray(pivots, dtype=np.int64)


def _rref_packed(W, ncols):
    """Reduce a row-packed matrix (64 columns per uint64 word, little-endian bits)."""
    nrows, nwords = W.shape
    pivots = np.empty(min(nrows, ncols), dtype=np.int64)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        p = -1
        for i in range(r, nrows):
            if W[i, w] & bit:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for k in range(w, nwords):
                t = W[r, k]
                W[r, k] = W[p, k]
                W[p, k] = t
        for i in range(nrows):
            if i != r and W[i, w] & bit:
                for k in range(w, nwords):
                    W[i, k] ^= W[r, k]
        pivots[r] = c
        r += 1
    return pivots[:r]


def pack_rows(A: np.ndarray) -> np.ndarray:
    B = np.packbits(A, axis=1, bitorder="little")
    pad = (-B.shape[1]) % 8
    if pad or B.shape[1] == 0:
        B = np.concatenate([B, np.zeros((B.shape[0], pad or 8), dtype=np.uint8)], axis=1)
    return np.ascontiguousarray(B).view(np.uint64)


_jit = None


def _rref_numba(A: np.ndarray) -> np.ndarray:
    global _jit
    if _jit is None:
        from numba import njit

        _jit = njit(cache=True)(_rref_packed)
    W = pack_rows(A)
    piv = _jit(W, A.shape[1])
    A[:] = np.unpackbits(W.view(np.uint8), axis=1, count=A.shape[1], bitorder="little")
    return piv


rref_numba = _rref_numba if AVAILABLE else None
USE_NUMBA = AVAILABLE and not DISABLED


def rref_inplace(A: np.ndarray) -> np.ndarray:
    if USE_NUMBA and A.size >= NUMBA_MIN_SIZE:
        return rref_numba(A)
    return rref_numpy(A)
