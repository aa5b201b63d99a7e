"""Synthetic linear environment for benchmarking the bandit policy.

Rewards are x . w_star plus Gaussian noise, clipped to [0,1]. The weight
vector is a fixed constant; arm feature vectors are drawn per seed. A
uniform-random policy run under the same environment is the baseline.
"""

from dataclasses import dataclass

import numpy as np

from . import linrel
from .features import CandidateArm

# fixed ground-truth weights, deliberately uneven so arm quality spreads
W_STAR = (0.35, 0.05, 0.03, 0.02, 0.05, 0.05, 0.10, 0.35)


@dataclass
class SyntheticConfig:
    d: int = 8
    k: int = 20
    horizon: int = 500
    noise: float = 0.1
    delta: float = 0.05
    sigma_grouping: str = "ruled"
    m_per_round: int = 1


def make_arms(seed: int, d: int, k: int) -> list[CandidateArm]:
    rng = np.random.default_rng(seed)
    feats = rng.uniform(0.0, 1.0, size=(k, d))
    return [
        CandidateArm(phrase=f"arm-{i}", features=tuple(feats[i]), domain_id="synthetic")
        for i in range(k)
    ]


def expected_reward(arm: CandidateArm, w_star=None) -> float:
    return float(np.dot(arm.features, W_STAR if w_star is None else w_star))


def _observe(arm: CandidateArm, rng, noise: float) -> float:
    r = expected_reward(arm) + rng.normal(0.0, noise)
    return float(min(1.0, max(0.0, r)))


def linrel_run(config: SyntheticConfig, seed: int) -> list[float]:
    """Observed per-pull rewards for the bandit policy."""
    arms = make_arms(seed, config.d, config.k)
    noise_rng = np.random.default_rng(seed + 1_000_003)
    state = linrel.new_state(config.d, config.horizon, config.k, config.delta)
    rewards = []
    for t in range(config.horizon):
        picks = linrel.select_arms(
            state, arms, config.m_per_round,
            rng_seed=seed * config.horizon + t,
            sigma_grouping=config.sigma_grouping,
        )
        arm = arms[picks[0]]
        r = _observe(arm, noise_rng, config.noise)
        state = linrel.update(state, arm, r)
        rewards.append(r)
    return rewards


def uniform_run(config: SyntheticConfig, seed: int) -> list[float]:
    """Observed per-pull rewards for a uniform-random policy."""
    arms = make_arms(seed, config.d, config.k)
    noise_rng = np.random.default_rng(seed + 1_000_003)
    pick_rng = np.random.default_rng(seed + 7_777_777)
    return [
        _observe(arms[int(pick_rng.integers(config.k))], noise_rng, config.noise)
        for _ in range(config.horizon)
    ]


def run_benchmark(config: SyntheticConfig | None = None, seeds: int = 50,
                  base_seed: int = 0) -> dict:
    """Mean cumulative rewards for both policies plus learning diagnostics."""
    config = config or SyntheticConfig()
    linrel_total = 0.0
    uniform_total = 0.0
    leading = 0.0
    trailing = 0.0
    window = min(100, config.horizon)
    for i in range(seeds):
        seed = base_seed + i
        lr = linrel_run(config, seed)
        ur = uniform_run(config, seed)
        linrel_total += sum(lr)
        uniform_total += sum(ur)
        leading += sum(lr[:window]) / window
        trailing += sum(lr[-window:]) / window
    linrel_mean = linrel_total / seeds
    uniform_mean = uniform_total / seeds
    return {
        "seeds": seeds,
        "horizon": config.horizon,
        "linrel_cumulative_mean": linrel_mean,
        "uniform_cumulative_mean": uniform_mean,
        "improvement": (linrel_mean - uniform_mean) / uniform_mean,
        "leading_window_mean": leading / seeds,
        "trailing_window_mean": trailing / seeds,
    }
