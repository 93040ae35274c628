"""Dense linear algebra over a GF.

Matrices are 2-D ``int64`` numpy arrays of element codes; every function
takes the field as its first argument.
"""
from __future__ import annotations

import numpy as np

from .gf import GF


def as_matrix(F: GF, rows) -> np.ndarray:
    M = np.array(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M[None, :]
    if M.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    if M.size and (M.min() < 0 or M.max() >= F.q):
        raise ValueError(f"entries out of range for {F!r}")
    return M


def rref(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot search goes left to right; the pivot row is the first row at or
    below the current one with a nonzero entry in that column.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = F.mul(R[r], F.inv(int(R[r, c])))
        col = R[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if len(others):
            R[others] = F.sub(R[others], F.mul(col[others, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: GF, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def kernel_basis(F: GF, M) -> np.ndarray:
    """Rows spanning the right null space ``{x : M x^T = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for r, pc in enumerate(pivots):
            K[i, pc] = F.neg(int(R[r, f]))
    return K


def row_space_equal(F: GF, A, B) -> bool:
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError("column counts differ")
    RA, pa = rref(F, A)
    RB, pb = rref(F, B)
    return pa == pb and np.array_equal(RA[: len(pa)], RB[: len(pb)])


def transpose(M) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(M).T)


def matmul(F: GF, A, B) -> np.ndarray:
    return F.matmul(np.asarray(A), np.asarray(B))
