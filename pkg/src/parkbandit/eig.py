"""Symmetric eigendecomposition via cyclic Jacobi rotations.

Written for the small D x D Gram matrices of the bandit history (D <= 8).
Returns M = U' diag(lambda) U with the rows of U orthonormal eigenvectors
and eigenvalues sorted descending. Convergence is declared when the
off-diagonal Frobenius mass drops below 1e-12 times the Frobenius norm of
the input; a warm-start basis from the previous decomposition of a nearby
matrix typically cuts the sweep count to one or two.
"""

import math

from .errors import NumericalFailure

OFFDIAG_TOLERANCE = 1e-12
MAX_SWEEP_FACTOR = 100


def _frobenius(matrix: list[list[float]]) -> float:
    return math.sqrt(sum(v * v for row in matrix for v in row))


def _offdiag_mass(a: list[list[float]], d: int) -> float:
    total = 0.0
    for p in range(d):
        row = a[p]
        for q in range(p + 1, d):
            total += row[q] * row[q]
    return math.sqrt(2.0 * total)


def _matmul(a: list[list[float]], b: list[list[float]]) -> list[list[float]]:
    n, k, m = len(a), len(b), len(b[0])
    out = [[0.0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(k):
            scale = ai[j]
            if scale == 0.0:
                continue
            bj = b[j]
            for col in range(m):
                oi[col] += scale * bj[col]
    return out


def _transpose(a: list[list[float]]) -> list[list[float]]:
    return [list(col) for col in zip(*a)]


def jacobi_eigh(matrix, warm_start=None) -> tuple[list[list[float]], list[float]]:
    """Diagonalize a symmetric matrix; returns (U rows = eigenvectors, lambdas).

    `warm_start` is an optional row-orthonormal basis (the U of a previous,
    nearby matrix) used as the starting rotation. Raises NumericalFailure
    if 100 * D^2 full sweeps do not reach the off-diagonal tolerance.
    """
    d = len(matrix)
    m = [[float(v) for v in row] for row in matrix]
    norm = _frobenius(m)
    if norm == 0.0:
        identity = [[1.0 if i == j else 0.0 for j in range(d)] for i in range(d)]
        return identity, [0.0] * d

    if warm_start is None:
        a = m
        u = [[1.0 if i == j else 0.0 for j in range(d)] for i in range(d)]
    else:
        u = [list(row) for row in warm_start]
        a = _matmul(_matmul(u, m), _transpose(u))
        # re-symmetrize against roundoff drift
        for p in range(d):
            for q in range(p + 1, d):
                mean = 0.5 * (a[p][q] + a[q][p])
                a[p][q] = mean
                a[q][p] = mean

    threshold = OFFDIAG_TOLERANCE * norm
    max_sweeps = MAX_SWEEP_FACTOR * d * d
    for _ in range(max_sweeps):
        if _offdiag_mass(a, d) < threshold:
            break
        for p in range(d):
            for q in range(p + 1, d):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                app = a[p][p]
                aqq = a[q][q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = 0.0
                a[q][p] = 0.0
                ap = a[p]
                aq = a[q]
                for j in range(d):
                    if j == p or j == q:
                        continue
                    apj = ap[j]
                    aqj = aq[j]
                    ap[j] = c * apj - s * aqj
                    aq[j] = s * apj + c * aqj
                    a[j][p] = ap[j]
                    a[j][q] = aq[j]
                up = u[p]
                uq = u[q]
                for j in range(d):
                    upj = up[j]
                    uqj = uq[j]
                    up[j] = c * upj - s * uqj
                    uq[j] = s * upj + c * uqj
    else:
        raise NumericalFailure(
            f"no convergence after {max_sweeps} sweeps (D={d})"
        )

    lambdas = [a[i][i] for i in range(d)]
    order = sorted(range(d), key=lambda i: -lambdas[i])
    return [u[i] for i in order], [lambdas[i] for i in order]
