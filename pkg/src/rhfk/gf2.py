"""Linear algebra over the two-element field on uint8 numpy arrays.

Subspaces are passed around as matrices whose columns span them.
"""

from __future__ import annotations

import numpy as np

from ._accel import rref_inplace


def as_gf2(M) -> np.ndarray:
    return (np.asarray(M, dtype=np.int64) & 1).astype(np.uint8)


def rref(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    R = np.array(M, dtype=np.uint8, copy=True)
    piv = rref_inplace(R)
    return R, piv


def rank(M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(rref(M)[1])


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] == 0 or B.shape[0] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    # float64 products go through BLAS and are exact for inner dimensions below 2^53
    P = A.astype(np.float64) @ B.astype(np.float64)
    return (P.astype(np.int64) & 1).astype(np.uint8)


def nullspace(M: np.ndarray) -> np.ndarray:
    """Columns spanning {x : M x = 0}; one per free column, lowest index first."""
    m, n = M.shape
    R, piv = rref(M)
    free = [c for c in range(n) if c not in set(piv.tolist())]
    N = np.zeros((n, len(free)), dtype=np.uint8)
    for k, f in enumerate(free):
        N[f, k] = 1
        for r, p in enumerate(piv):
            N[p, k] = R[r, f]
    return N


def column_basis(M: np.ndarray) -> np.ndarray:
    """The earliest linearly independent columns of M."""
    if M.shape[1] == 0:
        return M.copy()
    _, piv = rref(M)
    return M[:, piv]


def solve(M: np.ndarray, B: np.ndarray) -> np.ndarray | None:
    """Some X with M X = B, or None if any column of B is outside the span."""
    m, n = M.shape
    k = B.shape[1]
    if n == 0:
        return np.zeros((0, k), dtype=np.uint8) if not B.any() else None
    aug = np.concatenate([M, B], axis=1).astype(np.uint8)
    R, piv = rref(aug)
    if any(p >= n for p in piv):
        return None
    X = np.zeros((n, k), dtype=np.uint8)
    for r, p in enumerate(piv):
        X[p] = R[r, n:]
    return X


def in_span(M: np.ndarray, v: np.ndarray) -> bool:
    if v.ndim == 1:
        v = v[:, None]
    return solve(M, v) is not None


def intersect(U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Column basis of span(U) ∩ span(V)."""
    if U.shape[1] == 0 or V.shape[1] == 0:
        return np.zeros((U.shape[0], 0), dtype=np.uint8)
    N = nullspace(np.concatenate([U, V], axis=1))
    W = matmul(U, N[: U.shape[1]])
    return column_basis(W)


def preimage(F: np.ndarray, S: np.ndarray) -> np.ndarray:
    """Column basis of {x : F x ∈ span(S)}."""
    n = F.shape[1]
    if S.shape[1] == 0:
        return nullspace(F)
    N = nullspace(np.concatenate([F, S], axis=1))
    return column_basis(N[:n])
