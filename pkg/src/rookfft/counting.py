"""Multiply-add accounting for the transform algorithms.

One operation is a single complex multiplication followed by a complex
addition; a plain addition also counts as one.  Multiplication by a
structurally-known identity matrix is free, and the sparse-apply helpers
charge exactly one operation per stored nonzero per vector entry, which is
what makes the divide-and-conquer bounds hold with their stated constants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Triplets = tuple[tuple[int, int, float], ...]


@dataclass
class OpCounter:
    multiply_adds: int = 0

    def add(self, k: int) -> None:
        self.multiply_adds += k


def sparse_triplets(M: np.ndarray) -> Triplets:
    """(row, col, value) triplets of the nonzero entries of M."""
    rows, cols = np.nonzero(M)
    return tuple((int(r), int(c), float(M[r, c])) for r, c in zip(rows, cols))


def left_apply(sp: Triplets, A: np.ndarray, counter: OpCounter) -> np.ndarray:
    """sp @ A for a square sparse matrix; costs nnz·(columns of A)."""
    out = np.zeros(A.shape, dtype=complex)
    for r, c, v in sp:
        out[r] += v * A[c]
    counter.add(len(sp) * A.shape[1])
    return out


def right_apply(A: np.ndarray, sp: Triplets, counter: OpCounter) -> np.ndarray:
    """A @ sp for a square sparse matrix; costs nnz·(rows of A)."""
    out = np.zeros(A.shape, dtype=complex)
    for r, c, v in sp:
        out[:, c] += v * A[:, r]
    counter.add(len(sp) * A.shape[0])
    return out


def accumulate(acc: np.ndarray | None, B: np.ndarray, counter: OpCounter) -> np.ndarray:
    """Running matrix sum; the first term is an assignment and costs nothing."""
    if acc is None:
        return B.astype(complex, copy=True)
    counter.add(B.size)
    acc += B
    return acc


def scaled_accumulate(acc: np.ndarray, c: complex, M: np.ndarray, counter: OpCounter) -> None:
    """acc += c·M, the inner step of a naive transform; costs size(M)."""
    counter.add(M.size)
    acc += c * M


def block_diag(mats: list[np.ndarray], dim: int) -> np.ndarray:
    """Assemble sub-blocks down the diagonal; pure data movement, zero cost."""
    out = np.zeros((dim, dim), dtype=complex)
    at = 0
    for M in mats:
        d = M.shape[0]
        out[at : at + d, at : at + d] = M
        at += d
    if at != dim:
        raise ValueError(f"blocks fill {at} of {dim} dimensions")
    return out
