"""The LinRel linear bandit: history, UCB scoring, and arm selection.

Selection history is a D x t matrix X of pulled feature vectors and a
reward vector R. Scoring eigendecomposes X X' = U' diag(lambda) U, maps an
arm's features into the eigenbasis (z = U x), splits coordinates at the
eigenvalue threshold 1, and forms

    a_i   = X' U' pinv(Lambda_large) (large part of z)
    sigma = ||a_i|| sqrt(ln(2 T K / delta)) + ||v_i||
    ucb_i = R . a_i + sigma

where v_i is the small-eigenvalue remainder of z. The first D pulls are
forced exploration: greedy growth of the span of selected columns.

The printed source this follows typesets sigma with unbalanced parentheses;
the additive reading above is the default, and the alternative grouping
||a|| (sqrt(...) + ||v||) stays available via sigma_grouping="scaled".
"""

import random
from dataclasses import dataclass, replace

import numpy as np

from .eig import jacobi_eigh
from .errors import HorizonExhausted, InvalidHorizon, InvalidParams, RewardOutOfRange
from .features import CandidateArm

RIDGE_EPSILON = 1e-6
EIG_SPLIT = 1.0

SIGMA_GROUPINGS = ("ruled", "scaled")


@dataclass(frozen=True)
class BanditState:
    d: int
    T: int
    K: int
    delta: float
    X: tuple = ()          # t columns, each a length-d tuple
    R: tuple = ()
    w_hat: tuple = ()

    @property
    def t(self) -> int:
        return len(self.X)

    def x_matrix(self) -> np.ndarray:
        if not self.X:
            return np.zeros((self.d, 0))
        return np.array(self.X, dtype=float).T

    def rewards(self) -> np.ndarray:
        return np.array(self.R, dtype=float)


@dataclass(frozen=True)
class UcbScore:
    arm_index: int
    estimate: float
    width: float
    ucb: float
    a_norm: float
    v_norm: float


def new_state(d: int, T: int, K: int, delta: float) -> BanditState:
    if d < 1:
        raise InvalidParams(f"d must be >= 1, got {d}")
    if T < 1:
        raise InvalidParams(f"T must be >= 1, got {T}")
    if K < 1:
        raise InvalidParams(f"K must be >= 1, got {K}")
    if not 0.0 < delta < 1.0:
        raise InvalidParams(f"delta must be in (0,1), got {delta}")
    return BanditState(d=d, T=T, K=K, delta=delta, w_hat=(0.0,) * d)


def eigendecompose_history(state: BanditState) -> tuple[np.ndarray, np.ndarray]:
    """X X' = U' diag(lambdas) U, rows of U orthonormal, lambdas descending."""
    x = state.x_matrix()
    gram = x @ x.T
    u, lambdas = jacobi_eigh(gram.tolist())
    return np.array(u), np.array(lambdas)


def compute_coefficients(state: BanditState, u: np.ndarray, lambdas: np.ndarray,
                         x_i) -> tuple[np.ndarray, float]:
    """a_i (length t) and the misrepresentation norm ||v_i|| for one arm."""
    x_i = np.asarray(x_i, dtype=float)
    z = u @ x_i
    large = lambdas >= EIG_SPLIT
    inv = np.zeros_like(lambdas)
    np.divide(1.0, lambdas, out=inv, where=large)
    y = u.T @ (z * inv * large)
    a = state.x_matrix().T @ y
    v_norm = float(np.linalg.norm(z[~large]))
    return a, v_norm


def _exploration_factor(T: int, k_arms: int, delta: float) -> float:
    argument = 2.0 * T * k_arms / delta
    if argument <= 1.0:
        raise InvalidHorizon(f"2TK/delta = {argument} <= 1")
    return float(np.sqrt(np.log(argument)))


def _width(a_norm: float, v_norm: float, factor: float, grouping: str) -> float:
    if grouping == "scaled":
        return a_norm * (factor + v_norm)
    return a_norm * factor + v_norm


def ucb_scores(state: BanditState, arms: list[CandidateArm],
               sigma_grouping: str = "ruled") -> list[UcbScore]:
    """Estimate + exploration width per arm; K in the width = len(arms)."""
    if sigma_grouping not in SIGMA_GROUPINGS:
        raise InvalidParams(f"unknown sigma grouping: {sigma_grouping}")
    factor = _exploration_factor(state.T, len(arms), state.delta)
    u, lambdas = eigendecompose_history(state)
    x = state.x_matrix()
    rewards = state.rewards()

    features = np.array([arm.features for arm in arms], dtype=float)
    z = features @ u.T                      # one row of eigenbasis coords per arm
    large = lambdas >= EIG_SPLIT
    inv = np.zeros_like(lambdas)
    np.divide(1.0, lambdas, out=inv, where=large)
    a_mat = (z * inv * large) @ u @ x       # rows a_i
    estimates = a_mat @ rewards
    a_norms = np.linalg.norm(a_mat, axis=1)
    v_norms = np.linalg.norm(z[:, ~large], axis=1)

    scores = []
    for i in range(len(arms)):
        width = _width(float(a_norms[i]), float(v_norms[i]), factor, sigma_grouping)
        estimate = float(estimates[i])
        scores.append(
            UcbScore(
                arm_index=i,
                estimate=estimate,
                width=width,
                ucb=estimate + width,
                a_norm=float(a_norms[i]),
                v_norm=float(v_norms[i]),
            )
        )
    return scores


def _forced_exploration(state: BanditState, arms: list[CandidateArm],
                        m: int, rng: random.Random) -> list[int]:
    """Greedily grow the span of selected columns; ties broken by seeded rng."""
    basis: list[np.ndarray] = []
    x = state.x_matrix()
    for col in x.T:
        _extend_basis(basis, col)
    features = [np.asarray(arm.features, dtype=float) for arm in arms]
    chosen: list[int] = []
    available = list(range(len(arms)))
    while available and len(chosen) < m:
        residuals = []
        for idx in available:
            r = _residual(basis, features[idx])
            residuals.append(float(np.linalg.norm(r)))
        best = max(residuals)
        tied = [
            available[i]
            for i, value in enumerate(residuals)
            if best - value <= 1e-12 * max(1.0, best)
        ]
        pick = tied[rng.randrange(len(tied))]
        chosen.append(pick)
        available.remove(pick)
        _extend_basis(basis, features[pick])
    return chosen


def _residual(basis: list[np.ndarray], vector: np.ndarray) -> np.ndarray:
    r = vector.astype(float).copy()
    for b in basis:
        r -= (r @ b) * b
    return r


def _extend_basis(basis: list[np.ndarray], vector: np.ndarray) -> None:
    r = _residual(basis, vector)
    norm = np.linalg.norm(r)
    if norm > 1e-10:
        basis.append(r / norm)


def select_arms(state: BanditState, arms: list[CandidateArm], m: int,
                rng_seed: int, sigma_grouping: str = "ruled") -> list[int]:
    """Indices of the next arms to pull, best first, length min(m, K)."""
    if not arms:
        return []
    m = min(m, len(arms))
    rng = random.Random(rng_seed)
    if state.t < state.d:
        return _forced_exploration(state, arms, m, rng)
    scores = ucb_scores(state, arms, sigma_grouping)
    ranked = sorted(
        scores, key=lambda s: (-s.ucb, -s.estimate, s.arm_index)
    )
    return [s.arm_index for s in ranked[:m]]


def update(state: BanditState, arm: CandidateArm, reward: float) -> BanditState:
    """Append one pull to the history and refresh the reporting estimate."""
    if state.t >= state.T:
        raise HorizonExhausted(f"t = T = {state.T}")
    if not 0.0 <= reward <= 1.0:
        raise RewardOutOfRange(f"reward {reward} outside [0,1]")
    column = tuple(float(v) for v in arm.features)
    if len(column) != state.d:
        raise InvalidParams(
            f"arm dimension {len(column)} != state dimension {state.d}"
        )
    new_x = state.X + (column,)
    new_r = state.R + (float(reward),)
    x = np.array(new_x, dtype=float).T
    gram = x @ x.T + RIDGE_EPSILON * np.eye(state.d)
    w_hat = np.linalg.solve(gram, x @ np.array(new_r))
    return replace(state, X=new_x, R=new_r, w_hat=tuple(float(v) for v in w_hat))


# --- state snapshots ------------------------------------------------------

def state_to_text(state: BanditState) -> str:
    """Versioned text snapshot; floats via repr for exact round-tripping."""
    lines = [
        f"linrel v1 D={state.d} t={state.t} T={state.T} "
        f"K={state.K} delta={state.delta!r}"
    ]
    for column, reward in zip(state.X, state.R):
        parts = [repr(v) for v in column] + [repr(reward)]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def state_from_text(text: str) -> BanditState:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidParams("empty snapshot")
    header = lines[0].split()
    if header[:2] != ["linrel", "v1"]:
        raise InvalidParams(f"unrecognized snapshot header: {lines[0]!r}")
    fields = dict(part.split("=", 1) for part in header[2:])
    d = int(fields["D"])
    t = int(fields["t"])
    state = new_state(
        d=d, T=int(fields["T"]), K=int(fields["K"]), delta=float(fields["delta"])
    )
    if len(lines) - 1 != t:
        raise InvalidParams(f"snapshot body has {len(lines) - 1} rows, header says {t}")
    for line in lines[1:]:
        values = [float(v) for v in line.split()]
        if len(values) != d + 1:
            raise InvalidParams(f"snapshot row has {len(values)} values, want {d + 1}")
        arm = CandidateArm(phrase="", features=tuple(values[:d]), domain_id="")
        state = update(state, arm, values[d])
    return state


def save_state(state: BanditState, path) -> None:
    from pathlib import Path

    Path(path).write_text(state_to_text(state), encoding="utf-8")


def load_state(path) -> BanditState:
    from pathlib import Path

    return state_from_text(Path(path).read_text(encoding="utf-8"))
