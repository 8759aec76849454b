"""Exact dense linear algebra over F_p (numpy int64, no rounding anywhere)."""

from __future__ import annotations

import numpy as np


def inv_mod(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("inverse of 0 mod p")
    return pow(x, p - 2, p)


def rref(mat: np.ndarray, p: int):
    """Reduced row echelon form mod p; returns (R, pivot_columns)."""
    A = np.array(mat, dtype=np.int64) % p
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * inv_mod(int(A[r, c]), p)) % p
        rows = np.nonzero(A[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def solve(A: np.ndarray, b: np.ndarray, p: int):
    """One solution of A x = b mod p, or None if inconsistent."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64)) % p
    b = np.asarray(b, dtype=np.int64) % p
    m, n = A.shape
    aug = np.concatenate([A, b.reshape(m, 1)], axis=1)
    R, pivots = rref(aug, p)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, n]
    return x


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the right nullspace of A mod p."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64)) % p
    m, n = A.shape
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-R[r, c]) % p
    return basis
