"""Numeric eigenvalues by cyclic Jacobi rotations, and exact rank by Bareiss elimination."""

from __future__ import annotations

import math

import numpy as np


def jacobi_eigenvalues(a, tol: float = 1e-9, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, ascending.

    Cyclic-by-row Jacobi: each sweep annihilates every off-diagonal pair once.
    Stops when the off-diagonal Frobenius norm falls below ``tol`` times the
    matrix norm (or absolutely below ``tol`` for the zero matrix).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if not np.allclose(a, a.T):
        raise ValueError("matrix must be symmetric")
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        # measured directly: ||A||^2 - ||diag A||^2 cancels and stalls near sqrt(eps)
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J on rows/cols p and q
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.diag(a))


def bareiss_rank(rows) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    m = [[int(x) for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        pv = prow[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            if f == 0:
                # Bareiss still needs the scaled update to keep later divisions exact
                m[r] = [(pv * x) // prev for x in row]
                continue
            m[r] = [(pv * x - f * y) // prev for x, y in zip(row, prow)]
        prev = pv
        rank += 1
    return rank
