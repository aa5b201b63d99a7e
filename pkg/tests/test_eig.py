"""Cyclic Jacobi eigensolver against closed forms and a library oracle."""

import math
import random

import numpy as np
import pytest

from parkbandit.eig import jacobi_eigh


def random_psd(rng: random.Random, d: int, t: int) -> list[list[float]]:
    x = [[rng.uniform(0.0, 1.0) for _ in range(t)] for _ in range(d)]
    return [
        [sum(x[i][s] * x[j][s] for s in range(t)) for j in range(d)]
        for i in range(d)
    ]


def reconstruct(u, lams):
    d = len(lams)
    return [
        [
            sum(u[k][i] * lams[k] * u[k][j] for k in range(d))
            for j in range(d)
        ]
        for i in range(d)
    ]


def rel_recon_error(m, u, lams):
    rebuilt = reconstruct(u, lams)
    num = math.sqrt(
        sum((rebuilt[i][j] - m[i][j]) ** 2 for i in range(len(m)) for j in range(len(m)))
    )
    den = math.sqrt(sum(v * v for row in m for v in row))
    return num / den


def test_two_by_two_closed_form():
    # [[2,1],[1,3]] has eigenvalues (5 +- sqrt(5)) / 2
    u, lams = jacobi_eigh([[2.0, 1.0], [1.0, 3.0]])
    hi = (5 + math.sqrt(5)) / 2
    lo = (5 - math.sqrt(5)) / 2
    assert lams[0] == pytest.approx(hi, abs=1e-12)
    assert lams[1] == pytest.approx(lo, abs=1e-12)
    for lam, row in zip(lams, u):
        # eigenvector residual (M - lam I) v = 0
        r0 = (2 - lam) * row[0] + 1 * row[1]
        r1 = 1 * row[0] + (3 - lam) * row[1]
        assert abs(r0) < 1e-10 and abs(r1) < 1e-10


def test_diagonal_matrix_sorted_descending():
    u, lams = jacobi_eigh([[1.0, 0.0, 0.0], [0.0, 5.0, 0.0], [0.0, 0.0, 3.0]])
    assert lams == [5.0, 3.0, 1.0]


def test_zero_matrix():
    u, lams = jacobi_eigh([[0.0, 0.0], [0.0, 0.0]])
    assert lams == [0.0, 0.0]
    assert u == [[1.0, 0.0], [0.0, 1.0]]


def test_eigenvalues_match_library_oracle():
    rng = random.Random(2203)
    for _ in range(200):
        d = rng.randint(1, 8)
        m = random_psd(rng, d, rng.randint(1, 12))
        _, lams = jacobi_eigh(m)
        expected = sorted(np.linalg.eigvalsh(np.array(m)), reverse=True)
        assert lams == pytest.approx(expected, abs=1e-9)


def test_reconstruction_and_orthonormality():
    rng = random.Random(915)
    for _ in range(200):
        d = rng.randint(2, 8)
        m = random_psd(rng, d, rng.randint(1, 12))
        u, lams = jacobi_eigh(m)
        assert rel_recon_error(m, u, lams) < 1e-10
        gram = np.array(u) @ np.array(u).T
        assert np.abs(gram - np.eye(d)).max() < 1e-10
        assert lams == sorted(lams, reverse=True)


def test_eigenvalues_nonnegative_for_gram_matrices():
    rng = random.Random(33)
    for _ in range(50):
        d = rng.randint(1, 6)
        m = random_psd(rng, d, rng.randint(1, 10))
        _, lams = jacobi_eigh(m)
        assert all(lam > -1e-9 for lam in lams)


def test_warm_start_gives_same_answer():
    rng = random.Random(58)
    m = random_psd(rng, 5, 9)
    u0, lams0 = jacobi_eigh(m)
    # perturb slightly, restart from the previous basis
    bumped = [[v + (1e-4 if i == j else 0.0) for j, v in enumerate(row)]
              for i, row in enumerate(m)]
    cold_u, cold_lams = jacobi_eigh(bumped)
    warm_u, warm_lams = jacobi_eigh(bumped, warm_start=u0)
    assert warm_lams == pytest.approx(cold_lams, abs=1e-9)
    assert rel_recon_error(bumped, warm_u, warm_lams) < 1e-10


def test_near_degenerate_pair():
    m = [[1.0 + 1e-13, 1e-14], [1e-14, 1.0]]
    u, lams = jacobi_eigh(m)
    assert rel_recon_error(m, u, lams) < 1e-10
