/** Pending judgments waiting on the server.
 *
 * Strictly ordered: a submission never overtakes an earlier one, so a flush
 * walks from the head and stops at the first transport failure. The next
 * flush resumes from the same place. At most one entry per task_id, and a
 * 409 from the server means the judgment is already stored, so the retry
 * after a dropped connection lands exactly once.
 */

import { ApiError, NetworkError } from "./api.js";

export interface PendingJudgment {
  task_id: string;
  score: number;
}

export interface QueueStore {
  read(): PendingJudgment[];
  write(jobs: PendingJudgment[]): void;
}

export function memoryStore(): QueueStore {
  let jobs: PendingJudgment[] = [];
  return {
    read: () => jobs.slice(),
    write: (next) => {
      jobs = next.slice();
    },
  };
}

// localStorage when usable, memory otherwise (private mode, quota, no DOM).
export function browserStore(key = "judge-ui:pending"): QueueStore {
  const fallback = memoryStore();
  let storage: Storage | null = null;
  try {
    storage = typeof localStorage === "undefined" ? null : localStorage;
  } catch {
    storage = null;
  }
  if (!storage) return fallback;
  const ls = storage;
  return {
    read: () => {
      try {
        const raw = JSON.parse(ls.getItem(key) ?? "[]") as unknown;
        if (!Array.isArray(raw)) return [];
        return raw.filter(
          (j): j is PendingJudgment =>
            !!j &&
            typeof (j as PendingJudgment).task_id === "string" &&
            typeof (j as PendingJudgment).score === "number",
        );
      } catch {
        return fallback.read();
      }
    },
    write: (jobs) => {
      fallback.write(jobs);
      try {
        ls.setItem(key, JSON.stringify(jobs));
      } catch {
        // quota or disabled storage; memory copy still holds the queue
      }
    },
  };
}

export type FlushOutcome =
  | { kind: "drained" }
  | { kind: "offline"; remaining: number }
  | { kind: "flagged" };

export type SendFn = (job: PendingJudgment) => Promise<{ flagged: boolean }>;

export class SubmissionQueue {
  // flushes are chained so two callers can never interleave sends
  private tail: Promise<unknown> = Promise.resolve();

  constructor(private readonly store: QueueStore = memoryStore()) {}

  pending(): PendingJudgment[] {
    return this.store.read();
  }

  size(): number {
    return this.store.read().length;
  }

  enqueue(taskId: string, score: number): boolean {
    const jobs = this.store.read();
    if (jobs.some((j) => j.task_id === taskId)) return false;
    jobs.push({ task_id: taskId, score });
    this.store.write(jobs);
    return true;
  }

  clear(): void {
    this.store.write([]);
  }

  flush(send: SendFn): Promise<FlushOutcome> {
    const run = this.tail.then(() => this.drain(send));
    this.tail = run.catch(() => undefined);
    return run;
  }

  private remove(taskId: string): void {
    this.store.write(this.store.read().filter((j) => j.task_id !== taskId));
  }

  private async drain(send: SendFn): Promise<FlushOutcome> {
    for (;;) {
      const jobs = this.store.read();
      const head = jobs[0];
      if (!head) return { kind: "drained" };
      let flagged = false;
      try {
        const ack = await send(head);
        flagged = ack.flagged;
      } catch (err) {
        if (err instanceof NetworkError) {
          // nothing reached the server; keep the whole line for later
          return { kind: "offline", remaining: jobs.length };
        }
        if (err instanceof ApiError && err.status === 403) {
          // the server refuses this assessor outright; nothing queued can
          // ever land, so drop the lot
          this.clear();
          return { kind: "flagged" };
        }
        if (err instanceof ApiError) {
          // 409 duplicate: already stored server-side, delivery done.
          // 400/404: permanently refused; keeping it would wedge the line.
          this.remove(head.task_id);
          continue;
        }
        throw err;
      }
      this.remove(head.task_id);
      if (flagged) {
        // the judgment landed but the assessor is now locked out
        this.clear();
        return { kind: "flagged" };
      }
    }
  }
}
