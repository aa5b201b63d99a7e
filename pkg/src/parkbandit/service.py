"""Judging workflow service: task serving, score collection, iteration
close-out.

All state is a pure function of the append-only event log. Opening an
iteration logs the plan, the chosen traps and the seed; every accepted
judgment is logged; closing logs the computed report. A restarted service
replays the log and arrives at identical bandit states, reports and task
books. Reads (task serving) derive everything on the fly and log nothing.

Trap opacity: wire-form tasks carry only task_id, domain_id, phrase and a
snapshot URL. Task ids are hashes salted with the iteration seed, so a
client cannot probe whether an id encodes a trap.
"""

import math
import random
from dataclasses import dataclass
from pathlib import Path

from . import feedback, linrel
from .corpus import CorpusModel
from .errors import (
    AssessorFlagged,
    DuplicateJudgment,
    InvalidParams,
    InvalidScore,
    IterationAlreadyOpen,
    NoOpenIteration,
    UnknownTask,
)
from .eventlog import ITERATION_CLOSE, ITERATION_START, JUDGMENT, EventLog, MemoryLog
from .feedback import Judgment, domain_seed

TASK_OPEN = "Open"
TASK_JUDGED = "Judged"
TASK_EXPIRED = "Expired"

DEFAULT_HORIZON = 100
DEFAULT_DELTA = 0.05
DEFAULT_BATCH = 10


@dataclass
class Task:
    task_id: str
    iteration: int
    domain_id: str
    phrase: str
    snapshot_ref: str
    is_trap: bool = False
    trap_expected: int | None = None
    status: str = TASK_OPEN

    def wire_form(self) -> dict:
        # trap fields never leave the server
        return {
            "task_id": self.task_id,
            "domain_id": self.domain_id,
            "phrase": self.phrase,
            "snapshot_url": self.snapshot_ref,
        }


class JudgeService:
    """Core workflow, HTTP-free. The web layer is a thin adapter."""

    def __init__(self, corpus: CorpusModel, log=None,
                 horizon: int = DEFAULT_HORIZON, delta: float = DEFAULT_DELTA,
                 min_assessors: int = feedback.MIN_ASSESSORS,
                 trap_threshold: float = feedback.TRAP_THRESHOLD,
                 sigma_grouping: str = "ruled",
                 state_dir: str | Path | None = None):
        self.corpus = corpus
        self.log = log if log is not None else MemoryLog()
        self.horizon = horizon
        self.delta = delta
        self.min_assessors = min_assessors
        self.trap_threshold = trap_threshold
        self.sigma_grouping = sigma_grouping
        self.state_dir = Path(state_dir) if state_dir is not None else None

        self.arms_by_domain = corpus.arms_by_domain()
        self.states: dict[str, linrel.BanditState] = {
            d: linrel.new_state(
                len(feedback.FEATURE_LABELS), horizon, len(arms), delta
            )
            for d, arms in self.arms_by_domain.items()
            if arms
        }
        self.trap_pool = self._load_trap_pool()

        self.iteration_counter = 0
        self.open_id: int | None = None
        self.open_seed = 0
        self.tasks: dict[str, Task] = {}
        self.judgments: list[Judgment] = []
        self.judged: dict[str, set] = {}        # assessor -> task_ids
        self.judged_pairs: dict[str, set] = {}  # assessor -> (domain, phrase)
        self.trap_record: dict[str, list] = {}  # assessor -> triggered flags
        self.flagged: set[str] = set()
        self.reports: dict[int, dict] = {}
        self._replay()

    # -- construction helpers ---------------------------------------------

    def _load_trap_pool(self) -> list[tuple]:
        path = self.corpus.corpus_dir / "traps.json"
        if not path.is_file():
            return []
        import json

        entries = json.loads(path.read_text(encoding="utf-8"))
        pool = [
            (e["domain_id"], e["phrase"], int(e["gold_score"])) for e in entries
        ]
        for _domain, _phrase, gold in pool:
            if gold not in feedback.VALID_SCORES:
                raise InvalidParams(f"trap gold score out of range: {gold}")
        return sorted(pool)

    # -- iteration lifecycle ----------------------------------------------

    def open_iteration(self, seed: int, m: int, trap_rate: float = 0.1) -> int:
        if self.open_id is not None:
            raise IterationAlreadyOpen(f"iteration {self.open_id} still open")
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise InvalidParams(f"seed must be an integer, got {seed!r}")
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InvalidParams(f"m must be a positive integer, got {m!r}")
        if not 0.0 <= trap_rate <= 1.0:
            raise InvalidParams(f"trap_rate outside [0,1]: {trap_rate}")

        domains = sorted(self.states)
        plan = feedback.plan_iteration(
            domains, m, self.states, self.arms_by_domain,
            rng_seed=seed, sigma_grouping=self.sigma_grouping,
        )
        traps = self._select_traps(plan, seed, trap_rate)
        iteration = self.iteration_counter + 1
        self.log.append(ITERATION_START, {
            "iteration": iteration,
            "seed": seed,
            "m": m,
            "trap_rate": trap_rate,
            "plan": [[d, phrases] for d, phrases in plan],
            "traps": [list(t) for t in traps],
        })
        self._materialize_iteration(iteration, seed, plan, traps)
        return iteration

    def _select_traps(self, plan, seed: int, trap_rate: float) -> list[tuple]:
        # a trap duplicating a planned (domain, phrase) would mint two
        # tasks for the same pair; keep task pairs unique per iteration
        planned = {(d, p) for d, phrases in plan for p in phrases}
        pool = [t for t in self.trap_pool if (t[0], t[1]) not in planned]
        n_tasks = sum(len(phrases) for _d, phrases in plan)
        wanted = max(math.ceil(trap_rate * n_tasks), feedback.MIN_TRAPS_FOR_FLAG)
        wanted = min(wanted, len(pool))
        rng = random.Random(domain_seed(seed, "trap-selection"))
        return sorted(rng.sample(pool, wanted))

    def _materialize_iteration(self, iteration, seed, plan, traps) -> None:
        self.iteration_counter = iteration
        self.open_id = iteration
        self.open_seed = seed
        self.tasks = {}
        self.judgments = []
        self.judged = {}
        self.judged_pairs = {}
        self.trap_record = {}
        index = 0
        for domain_id, phrases in plan:
            for phrase in phrases:
                self._add_task(iteration, seed, index, domain_id, phrase)
                index += 1
        for domain_id, phrase, gold in traps:
            self._add_task(iteration, seed, index, domain_id, phrase,
                           is_trap=True, trap_expected=gold)
            index += 1

    def _add_task(self, iteration, seed, index, domain_id, phrase,
                  is_trap=False, trap_expected=None) -> None:
        task_id = feedback.task_id_for(seed, iteration, index, domain_id, phrase)
        self.tasks[task_id] = Task(
            task_id=task_id,
            iteration=iteration,
            domain_id=domain_id,
            phrase=phrase,
            snapshot_ref=f"/api/snapshots/{domain_id}",
            is_trap=is_trap,
            trap_expected=trap_expected,
        )

    # -- task serving ------------------------------------------------------

    def next_tasks(self, assessor_id: str, batch: int = DEFAULT_BATCH) -> list[dict]:
        if self.open_id is None:
            raise NoOpenIteration("no iteration open")
        if not assessor_id:
            raise InvalidParams("assessor id must be non-empty")
        if batch < 1:
            raise InvalidParams(f"batch must be >= 1, got {batch}")
        if assessor_id in self.flagged:
            raise AssessorFlagged(assessor_id)

        order = sorted(self.tasks)
        rng = random.Random(domain_seed(self.open_seed, f"order:{assessor_id}"))
        rng.shuffle(order)
        done = self.judged.get(assessor_id, set())
        done_pairs = set(self.judged_pairs.get(assessor_id, set()))
        out = []
        for task_id in order:
            task = self.tasks[task_id]
            pair = (task.domain_id, task.phrase)
            if task.status != TASK_OPEN or task_id in done or pair in done_pairs:
                continue
            done_pairs.add(pair)
            out.append(task.wire_form())
            if len(out) >= batch:
                break
        return out

    def snapshot_html(self, domain_id: str) -> bytes:
        entry = self.corpus.domains.get(domain_id)
        if entry is None:
            raise UnknownTask(f"no snapshot for {domain_id}")
        return entry.record.html_source

    # -- judgments ---------------------------------------------------------

    def submit_judgment(self, assessor_id: str, task_id: str, score) -> dict:
        if self.open_id is None:
            raise NoOpenIteration("no iteration open")
        if not assessor_id:
            raise InvalidParams("assessor id must be non-empty")
        if assessor_id in self.flagged:
            raise AssessorFlagged(assessor_id)
        if not isinstance(score, int) or isinstance(score, bool) \
                or score not in feedback.VALID_SCORES:
            raise InvalidScore(f"score must be an integer 0-5, got {score!r}")
        task = self.tasks.get(task_id)
        if task is None or task.iteration != self.open_id:
            raise UnknownTask(task_id)
        if task.status != TASK_OPEN:
            raise UnknownTask(f"{task_id} is {task.status}")
        if task_id in self.judged.get(assessor_id, set()):
            raise DuplicateJudgment(f"{assessor_id} already judged {task_id}")
        pair = (task.domain_id, task.phrase)
        if pair in self.judged_pairs.get(assessor_id, set()):
            raise DuplicateJudgment(
                f"{assessor_id} already judged {pair[1]!r} on {pair[0]}"
            )

        judgment = Judgment(
            task_id=task_id,
            domain_id=task.domain_id,
            phrase=task.phrase,
            assessor_id=assessor_id,
            score=score,
            is_trap=task.is_trap,
            trap_expected=task.trap_expected,
        )
        self.log.append(JUDGMENT, {
            "iteration": self.open_id, **judgment.to_payload()
        })
        self._apply_judgment(judgment)
        return {"accepted": True, "flagged": assessor_id in self.flagged}

    def _apply_judgment(self, judgment: Judgment) -> None:
        self.judgments.append(judgment)
        self.judged.setdefault(judgment.assessor_id, set()).add(judgment.task_id)
        self.judged_pairs.setdefault(judgment.assessor_id, set()).add(
            (judgment.domain_id, judgment.phrase)
        )
        if judgment.is_trap and judgment.trap_expected is not None:
            hits = self.trap_record.setdefault(judgment.assessor_id, [])
            hits.append(
                feedback.trap_triggered(judgment.score, judgment.trap_expected)
            )
            if len(hits) >= feedback.MIN_TRAPS_FOR_FLAG and \
                    sum(hits) / len(hits) >= self.trap_threshold:
                self.flagged.add(judgment.assessor_id)

    # -- close-out ---------------------------------------------------------

    def close_iteration(self, iteration_id: int) -> dict:
        if self.open_id is None:
            raise NoOpenIteration("no iteration open")
        if iteration_id != self.open_id:
            raise UnknownTask(f"iteration {iteration_id} is not open")

        self.states, report = feedback.run_iteration(
            iteration_id, self.judgments, self.states, self.arms_by_domain,
            self.min_assessors, self.trap_threshold,
        )
        report_dict = feedback.report_to_dict(report)
        self.log.append(ITERATION_CLOSE, {
            "iteration": iteration_id, "report": report_dict
        })
        self._finish_iteration(iteration_id, report_dict)
        return report_dict

    def _finish_iteration(self, iteration_id: int, report_dict: dict) -> None:
        self.flagged.update(report_dict["excluded_assessors"])
        judged_ids = {j.task_id for j in self.judgments}
        for task in self.tasks.values():
            task.status = TASK_JUDGED if task.task_id in judged_ids else TASK_EXPIRED
        self.reports[iteration_id] = report_dict
        self.open_id = None
        self._write_state_snapshots()

    def report(self, iteration: int) -> dict:
        if iteration not in self.reports:
            raise UnknownTask(f"no report for iteration {iteration}")
        return self.reports[iteration]

    def _write_state_snapshots(self) -> None:
        if self.state_dir is None:
            return
        self.state_dir.mkdir(parents=True, exist_ok=True)
        for domain_id, state in sorted(self.states.items()):
            linrel.save_state(state, self.state_dir / f"{domain_id}.txt")

    # -- replay ------------------------------------------------------------

    def _replay(self) -> None:
        for event in self.log.read():
            kind = event["type"]
            if kind == ITERATION_START:
                plan = [(d, list(phrases)) for d, phrases in event["plan"]]
                traps = [tuple(t) for t in event["traps"]]
                self._materialize_iteration(
                    event["iteration"], event["seed"], plan, traps
                )
            elif kind == JUDGMENT:
                payload = {k: v for k, v in event.items()
                           if k not in ("type", "iteration")}
                self._apply_judgment(Judgment.from_payload(payload))
            elif kind == ITERATION_CLOSE:
                iteration = event["iteration"]
                self.states, report = feedback.run_iteration(
                    iteration, self.judgments, self.states,
                    self.arms_by_domain, self.min_assessors,
                    self.trap_threshold,
                )
                self._finish_iteration(iteration, feedback.report_to_dict(report))
