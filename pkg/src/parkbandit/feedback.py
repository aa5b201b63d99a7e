"""The crowdsourced feedback loop: plan selections, turn judgments into
rewards, update the per-domain bandits, and assemble iteration reports.

Rewards are mean(score)/5 over distinct assessors, withheld below the
minimum assessor count. Assessors who trigger too many traps are excluded
retroactively: none of their judgments reach aggregation.
"""

import hashlib
import json
from dataclasses import dataclass, field as dc_field

from . import linrel
from .agreement import AgreementStats, iteration_agreement
from .features import CandidateArm, FEATURE_LABELS

MIN_ASSESSORS = 2
TRAP_THRESHOLD = 0.3
TRAP_TRIGGER_DISTANCE = 2
MIN_TRAPS_FOR_FLAG = 5
VALID_SCORES = frozenset(range(6))


@dataclass(frozen=True)
class Judgment:
    task_id: str
    domain_id: str
    phrase: str
    assessor_id: str
    score: int
    is_trap: bool = False
    trap_expected: int | None = None
    submitted_at: float = 0.0

    def to_payload(self) -> dict:
        return {
            "task_id": self.task_id,
            "domain_id": self.domain_id,
            "phrase": self.phrase,
            "assessor_id": self.assessor_id,
            "score": self.score,
            "is_trap": self.is_trap,
            "trap_expected": self.trap_expected,
            "submitted_at": self.submitted_at,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "Judgment":
        return cls(
            task_id=payload["task_id"],
            domain_id=payload["domain_id"],
            phrase=payload["phrase"],
            assessor_id=payload["assessor_id"],
            score=int(payload["score"]),
            is_trap=bool(payload["is_trap"]),
            trap_expected=payload.get("trap_expected"),
            submitted_at=payload.get("submitted_at", 0.0),
        )


@dataclass(frozen=True)
class IterationReport:
    iteration: int
    precision: float
    per_domain_scores: dict
    weights: dict
    agreement: AgreementStats
    excluded_assessors: tuple
    exhausted_domains: tuple = ()


def domain_seed(base_seed: int, domain_id: str) -> int:
    """Stable per-domain RNG seed (process-hash-independent)."""
    digest = hashlib.sha256(f"{base_seed}:{domain_id}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def task_id_for(seed: int, iteration: int, index: int,
                domain_id: str, phrase: str) -> str:
    """Opaque, replay-stable task id.

    Salted with the iteration seed so clients cannot reconstruct ids and
    probe which ones were minted for traps.
    """
    preimage = f"{seed}:{iteration}:{index}:{domain_id}:{phrase}"
    return hashlib.sha256(preimage.encode()).hexdigest()[:16]


def plan_iteration(domains: list[str], m: int, states: dict, arms_by_domain: dict,
                   rng_seed: int = 0,
                   sigma_grouping: str = "ruled") -> list[tuple[str, list[str]]]:
    """Per-domain top-m selections; unusable domains get an empty phrase list."""
    plan = []
    for domain_id in domains:
        arms = arms_by_domain.get(domain_id) or []
        if not arms:
            plan.append((domain_id, []))
            continue
        state = states[domain_id]
        picks = linrel.select_arms(
            state, arms, m, domain_seed(rng_seed, domain_id), sigma_grouping
        )
        plan.append((domain_id, [arms[i].phrase for i in picks]))
    return plan


def aggregate_rewards(judgments: list[Judgment],
                      min_assessors: int = MIN_ASSESSORS) -> dict:
    """(domain_id, phrase) -> mean(score)/5 over distinct assessors.

    Traps never aggregate; items with fewer than `min_assessors` distinct
    assessors are withheld this iteration.
    """
    scores: dict[tuple, dict] = {}
    for j in judgments:
        if j.is_trap:
            continue
        scores.setdefault((j.domain_id, j.phrase), {})[j.assessor_id] = j.score
    rewards = {}
    for key, by_assessor in scores.items():
        if len(by_assessor) < min_assessors:
            continue
        rewards[key] = sum(by_assessor.values()) / (5.0 * len(by_assessor))
    return rewards


def trap_triggered(score: int, trap_expected: int) -> bool:
    return abs(score - trap_expected) >= TRAP_TRIGGER_DISTANCE


def flag_careless(judgments: list[Judgment],
                  trap_threshold: float = TRAP_THRESHOLD) -> list[str]:
    """Assessors whose triggered/judged-trap ratio crosses the threshold.

    Requires at least 5 judged traps before flagging anyone.
    """
    assigned: dict[str, int] = {}
    triggered: dict[str, int] = {}
    for j in judgments:
        if not j.is_trap or j.trap_expected is None:
            continue
        assigned[j.assessor_id] = assigned.get(j.assessor_id, 0) + 1
        if trap_triggered(j.score, j.trap_expected):
            triggered[j.assessor_id] = triggered.get(j.assessor_id, 0) + 1
    flagged = [
        assessor
        for assessor, total in assigned.items()
        if total >= MIN_TRAPS_FOR_FLAG
        and triggered.get(assessor, 0) / total >= trap_threshold
    ]
    return sorted(flagged)


def apply_rewards(rewards: dict, states: dict, arms_by_domain: dict,
                  iteration: int, agreement: AgreementStats,
                  excluded_assessors: list[str]) -> tuple[dict, IterationReport]:
    """One bandit update per rewarded (domain, phrase), deterministic order.

    Domains that run out of horizon are dropped from the returned state map
    and listed on the report.
    """
    new_states = dict(states)
    exhausted: list[str] = []
    for domain_id, phrase in sorted(rewards):
        if domain_id in exhausted:
            continue
        arm = _find_arm(arms_by_domain.get(domain_id) or [], phrase)
        if arm is None:
            continue
        try:
            new_states[domain_id] = linrel.update(
                new_states[domain_id], arm, rewards[(domain_id, phrase)]
            )
        except linrel.HorizonExhausted:
            exhausted.append(domain_id)
            new_states.pop(domain_id, None)

    per_domain: dict[str, list[float]] = {}
    for (domain_id, _phrase), reward in rewards.items():
        per_domain.setdefault(domain_id, []).append(reward * 5.0)
    per_domain_scores = {
        d: sum(values) / len(values) for d, values in sorted(per_domain.items())
    }
    precision = (
        sum(rewards.values()) / len(rewards) if rewards else 0.0
    )
    weights = _mean_weights(new_states)
    report = IterationReport(
        iteration=iteration,
        precision=precision,
        per_domain_scores=per_domain_scores,
        weights=weights,
        agreement=agreement,
        excluded_assessors=tuple(excluded_assessors),
        exhausted_domains=tuple(exhausted),
    )
    return new_states, report


def _find_arm(arms: list[CandidateArm], phrase: str) -> CandidateArm | None:
    for arm in arms:
        if arm.phrase == phrase:
            return arm
    return None


def _mean_weights(states: dict) -> dict:
    """Average each w_hat dimension across domains, labeled per feature."""
    if not states:
        return {label: 0.0 for label in FEATURE_LABELS}
    n = len(states)
    sums = [0.0] * len(FEATURE_LABELS)
    for state in states.values():
        for i, value in enumerate(state.w_hat):
            sums[i] += value
    return {label: sums[i] / n for i, label in enumerate(FEATURE_LABELS)}


def run_iteration(iteration: int, judgments: list[Judgment], states: dict,
                  arms_by_domain: dict, min_assessors: int = MIN_ASSESSORS,
                  trap_threshold: float = TRAP_THRESHOLD) -> tuple[dict, IterationReport]:
    """Close the books on one iteration: flag, filter, aggregate, update."""
    flagged = flag_careless(judgments, trap_threshold)
    usable = [j for j in judgments if j.assessor_id not in set(flagged)]
    rewards = aggregate_rewards(usable, min_assessors)
    agreement = iteration_agreement(usable)
    return apply_rewards(
        rewards, states, arms_by_domain, iteration, agreement, flagged
    )


# --- deterministic serialization -----------------------------------------

def report_to_dict(report: IterationReport) -> dict:
    agreement = report.agreement
    return {
        "iteration": report.iteration,
        "precision": report.precision,
        "per_domain_scores": dict(sorted(report.per_domain_scores.items())),
        "weights": {label: report.weights[label] for label in FEATURE_LABELS},
        "agreement": {
            "cohen_mean": agreement.cohen_mean,
            "cohen_pairs": agreement.cohen_pairs,
            "fleiss": agreement.fleiss,
            "n_items": agreement.n_items,
            "n_categories": agreement.n_categories,
        },
        "excluded_assessors": list(report.excluded_assessors),
        "exhausted_domains": list(report.exhausted_domains),
    }


def report_to_json(report: IterationReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, separators=(",", ":"))
