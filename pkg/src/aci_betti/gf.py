"""Dense linear algebra over GF(p) on int64 numpy arrays.

Entries stay in [0, p). Products of two entries must fit in int64, so p is
limited to 31 bits (see :data:`MAX_PRIME`).
"""

from __future__ import annotations

import numpy as np

from aci_betti.errors import InvalidInput

MAX_PRIME = 2**31 - 1


def as_field(a: np.ndarray | list, p: int) -> np.ndarray:
    if not 2 <= p <= MAX_PRIME:
        raise InvalidInput(f"prime {p} is outside 2..{MAX_PRIME}")
    m = np.asarray(a, dtype=np.int64)
    if m.ndim != 2:
        raise InvalidInput(f"expected a 2-d matrix, got shape {m.shape}")
    return m % p


def row_reduce(a: np.ndarray | list, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (nonzero rows only) and its pivot columns."""
    m = as_field(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(m[r:, c])[0]
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        factors = m[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(factors[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: np.ndarray | list, p: int) -> int:
    """Rank by forward elimination only."""
    m = as_field(a, p).copy()
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(m[r:, c])[0]
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        below = r + 1 + np.nonzero(m[r + 1 :, c])[0]
        if below.size:
            factors = (m[below, c] * pow(int(m[r, c]), -1, p)) % p
            m[below] = (m[below] - np.outer(factors, m[r])) % p
        r += 1
    return r


def nullspace(a: np.ndarray | list, p: int) -> np.ndarray:
    """Rows form a basis of {x : a @ x = 0}."""
    m = as_field(a, p)
    cols = m.shape[1]
    reduced, pivots = row_reduce(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, pivots] = (-reduced[:, free].T) % p
    return basis


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 dot products overflow once p^2 * inner dimension passes 2^63
    if (p - 1) ** 2 * max(a.shape[-1], 1) >= 2**63:
        return ((a.astype(object) @ b.astype(object)) % p).astype(np.int64)
    return (a @ b) % p
