/** One assessor working through one batch of tasks.
 *
 * The session is a small state machine; the DOM layer subscribes and
 * redraws on every transition. Tasks are shown strictly in the order the
 * server returned them. Submissions go through the queue, so losing the
 * connection does not stop the assessor: the judgment is parked and the
 * session advances, and a later flush delivers everything in order.
 *
 * A flagged verdict from the server (403, or flagged:true on an ack) is
 * terminal: the session ends and no further requests of any kind are made.
 */

import { ApiError, JudgeApi, NetworkError } from "./api.js";
import { SubmissionQueue } from "./queue.js";
import { isScore, type Score, type TaskView, type WireTask } from "./types.js";

export type Phase = "idle" | "loading" | "scoring" | "done" | "ended";

export interface SessionState {
  phase: Phase;
  assessorId: string;
  task: TaskView | null;
  snapshotHtml: string | null;
  snapshotFailed: boolean;
  selected: Score | null;
  pendingCount: number;
  notice: string | null;
}

export const DEFAULT_BATCH = 10;

export class JudgeSession {
  private phase: Phase = "idle";
  private tasks: WireTask[] = [];
  private cursor = 0;
  private snapshotHtml: string | null = null;
  private snapshotFailed = false;
  private selected: Score | null = null;
  private notice: string | null = null;
  private listeners = new Set<(s: SessionState) => void>();
  private readonly queue: SubmissionQueue;
  private readonly batch: number;

  constructor(
    private readonly api: JudgeApi,
    readonly assessorId: string,
    opts: { batch?: number; queue?: SubmissionQueue } = {},
  ) {
    if (!assessorId) throw new Error("session needs an assessor id");
    this.batch = opts.batch ?? DEFAULT_BATCH;
    this.queue = opts.queue ?? new SubmissionQueue();
  }

  subscribe(listener: (s: SessionState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  state(): SessionState {
    const task = this.currentTask();
    return {
      phase: this.phase,
      assessorId: this.assessorId,
      task,
      snapshotHtml: this.snapshotHtml,
      snapshotFailed: this.snapshotFailed,
      selected: this.selected,
      pendingCount: this.queue.size(),
      notice: this.notice,
    };
  }

  private currentTask(): TaskView | null {
    const wire = this.tasks[this.cursor];
    if (this.phase !== "scoring" || !wire) return null;
    return {
      ...wire,
      position_in_batch: this.cursor + 1,
      batch_size: this.tasks.length,
    };
  }

  private notify(): void {
    const snapshot = this.state();
    for (const fn of this.listeners) fn(snapshot);
  }

  private end(notice: string): void {
    this.phase = "ended";
    this.tasks = [];
    this.snapshotHtml = null;
    this.snapshotFailed = false;
    this.selected = null;
    this.notice = notice;
    this.notify();
  }

  /** Fetch a batch and show its first task. Reusable from the done screen. */
  async start(): Promise<void> {
    if (this.phase === "ended" || this.phase === "loading") return;
    this.phase = "loading";
    this.notice = null;
    this.notify();
    let tasks: WireTask[];
    try {
      tasks = await this.api.fetchTasks(this.assessorId, this.batch);
    } catch (err) {
      if (err instanceof ApiError && err.status === 403) {
        this.end("Your judging session has been closed.");
        return;
      }
      this.phase = "idle";
      this.notice =
        err instanceof NetworkError
          ? "Cannot reach the server. Try again in a moment."
          : err instanceof ApiError
            ? `No tasks available (${err.code}).`
            : "Unexpected error while loading tasks.";
      this.notify();
      return;
    }
    if (tasks.length === 0) {
      this.phase = "done";
      this.notice = "No tasks available right now.";
      this.notify();
      return;
    }
    this.tasks = tasks;
    this.cursor = 0;
    await this.enterTask();
  }

  private async enterTask(): Promise<void> {
    this.phase = "scoring";
    this.selected = null;
    this.snapshotHtml = null;
    this.snapshotFailed = false;
    this.notice = null;
    this.notify();
    const task = this.tasks[this.cursor];
    if (!task) return;
    const taskId = task.task_id;
    let html: string | null = null;
    let failed = false;
    try {
      html = await this.api.fetchSnapshot(task.snapshot_url);
    } catch {
      failed = true;
    }
    // the assessor may have moved on (or been flagged) while we fetched
    if (this.phase !== "scoring" || this.tasks[this.cursor]?.task_id !== taskId) {
      return;
    }
    if (failed) {
      this.snapshotFailed = true;
      this.notice = "page failed to load";
      if (this.selected === null) this.selected = 0;
    } else {
      this.snapshotHtml = html;
    }
    this.notify();
  }

  /** Pick a score for the current task. Overrides any pre-selection. */
  select(score: number): void {
    if (this.phase !== "scoring" || !isScore(score)) return;
    this.selected = score;
    this.notify();
  }

  /** Route a keyboard key; digits 0-5 select the matching score. */
  pressKey(key: string): void {
    if (key.length === 1 && key >= "0" && key <= "5") {
      this.select(Number(key));
    }
  }

  /**
   * Queue the chosen score, push the queue at the server, and move on.
   * Offline is not an error here: the judgment stays queued and the
   * session advances so the assessor keeps working.
   */
  async submitAndAdvance(): Promise<void> {
    const task = this.tasks[this.cursor];
    if (this.phase !== "scoring" || this.selected === null || !task) return;
    this.queue.enqueue(task.task_id, this.selected);
    const outcome = await this.queue.flush((job) =>
      this.api.submitJudgment(this.assessorId, job.task_id, job.score),
    );
    if (this.phase !== "scoring") return;
    if (outcome.kind === "flagged") {
      this.end("Your judging session has been closed.");
      return;
    }
    this.cursor += 1;
    if (this.cursor >= this.tasks.length) {
      this.phase = "done";
      this.snapshotHtml = null;
      this.snapshotFailed = false;
      this.selected = null;
      this.notice =
        outcome.kind === "offline"
          ? "Batch finished. Some judgments are still queued and will be retried."
          : "Batch finished.";
      this.notify();
      return;
    }
    await this.enterTask();
  }

  /** Re-deliver queued judgments, e.g. from a window "online" event. */
  async retryPending(): Promise<void> {
    if (this.phase === "ended" || this.queue.size() === 0) return;
    const outcome = await this.queue.flush((job) =>
      this.api.submitJudgment(this.assessorId, job.task_id, job.score),
    );
    if (outcome.kind === "flagged") {
      this.end("Your judging session has been closed.");
      return;
    }
    this.notify();
  }
}
