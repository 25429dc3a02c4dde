"""Dense linear algebra over the two-element field on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np


def as_gf2(a) -> np.ndarray:
    return np.asarray(a, dtype=np.int64).astype(np.uint8) & 1


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    return (a.astype(np.int64) @ b.astype(np.int64) % 2).astype(np.uint8)


def rank(a: np.ndarray) -> int:
    m = as_gf2(a).copy()
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(m[r:, c])[0]
        if pivots.size == 0:
            continue
        p = r + pivots[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        below = np.nonzero(m[:, c])[0]
        for q in below:
            if q != r:
                m[q] ^= m[r]
        r += 1
    return r


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
