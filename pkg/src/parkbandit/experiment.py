"""Closed-loop experiment: simulated assessors judging bandit selections
over an archived corpus, iteration after iteration.

The simulated assessor shares a ground-truth weighting over the eight
features. A phrase that is an arm of the domain is worth its feature dot
product; a phrase that never appears on the page is worth nothing. Scores
are round(5 * quality) plus uniform {-1, 0, +1} noise, clamped to 0..5.
"""

import random
from dataclasses import dataclass

from .corpus import CorpusModel
from .eventlog import MemoryLog
from .feedback import domain_seed
from .service import JudgeService

# what the simulated judges actually reward
W_TRUE = (0.30, 0.20, 0.05, 0.05, 0.05, 0.10, 0.10, 0.15)


@dataclass
class ExperimentConfig:
    iterations: int = 6
    assessors: int = 5
    m: int = 5
    horizon: int = 30
    delta: float = 0.05
    trap_rate: float = 0.1
    batch: int = 10
    sigma_grouping: str = "ruled"


def perceived_quality(model: CorpusModel, domain_id: str, phrase: str,
                      w_true=None) -> float:
    w = W_TRUE if w_true is None else w_true
    entry = model.domains.get(domain_id)
    if entry is None:
        return 0.0
    for arm in entry.arms:
        if arm.phrase == phrase:
            return sum(x * wi for x, wi in zip(arm.features, w))
    return 0.0


def assessor_score(quality: float, rng: random.Random) -> int:
    base = round(5.0 * quality) + rng.choice((-1, 0, 1))
    return max(0, min(5, base))


def consensus_score(quality: float) -> int:
    """The noise-free answer; trap gold scores are anchored to this."""
    return max(0, min(5, round(5.0 * quality)))


def run_experiment(model: CorpusModel, config: ExperimentConfig | None = None,
                   seed: int = 0, log=None) -> list[dict]:
    """Six (by default) full iterations; returns the iteration reports."""
    config = config or ExperimentConfig()
    svc = JudgeService(
        model, log if log is not None else MemoryLog(),
        horizon=config.horizon, delta=config.delta,
        sigma_grouping=config.sigma_grouping,
    )
    reports = []
    for round_no in range(1, config.iterations + 1):
        iteration = svc.open_iteration(
            seed=domain_seed(seed, f"iteration:{round_no}"),
            m=config.m, trap_rate=config.trap_rate,
        )
        for idx in range(config.assessors):
            assessor_id = f"sim-{idx}"
            rng = random.Random(
                domain_seed(seed, f"assessor:{round_no}:{assessor_id}")
            )
            while True:
                batch = svc.next_tasks(assessor_id, config.batch)
                if not batch:
                    break
                for task in batch:
                    quality = perceived_quality(
                        model, task["domain_id"], task["phrase"]
                    )
                    svc.submit_judgment(
                        assessor_id, task["task_id"], assessor_score(quality, rng)
                    )
        reports.append(svc.close_iteration(iteration))
    return reports


def precision_series(reports: list[dict]) -> list[float]:
    return [r["precision"] for r in reports]
