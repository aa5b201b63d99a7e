import { describe, expect, it } from "vitest";

import { ApiError, NetworkError } from "../src/api.js";
import {
  browserStore,
  memoryStore,
  SubmissionQueue,
  type PendingJudgment,
} from "../src/queue.js";

function recordingSend(log: PendingJudgment[], opts?: { failTasks?: Set<string>; flagOn?: string }) {
  return async (job: PendingJudgment) => {
    if (opts?.failTasks?.has(job.task_id)) {
      throw new NetworkError(new TypeError("fetch failed"));
    }
    if (opts?.flagOn === job.task_id) {
      log.push(job);
      return { flagged: true };
    }
    log.push(job);
    return { flagged: false };
  };
}

describe("SubmissionQueue", () => {
  it("delivers jobs in enqueue order", async () => {
    const q = new SubmissionQueue();
    q.enqueue("a", 3);
    q.enqueue("b", 0);
    q.enqueue("c", 5);
    const sent: PendingJudgment[] = [];
    const outcome = await q.flush(recordingSend(sent));
    expect(outcome).toEqual({ kind: "drained" });
    expect(sent.map((j) => j.task_id)).toEqual(["a", "b", "c"]);
    expect(q.size()).toBe(0);
  });

  it("keeps one entry per task id", () => {
    const q = new SubmissionQueue();
    expect(q.enqueue("a", 3)).toBe(true);
    expect(q.enqueue("a", 5)).toBe(false);
    expect(q.pending()).toEqual([{ task_id: "a", score: 3 }]);
  });

  it("stops at the first connection failure and keeps order", async () => {
    const q = new SubmissionQueue();
    q.enqueue("a", 1);
    q.enqueue("b", 2);
    q.enqueue("c", 3);
    const sent: PendingJudgment[] = [];
    const outcome = await q.flush(
      recordingSend(sent, { failTasks: new Set(["b"]) }),
    );
    expect(outcome).toEqual({ kind: "offline", remaining: 2 });
    expect(sent.map((j) => j.task_id)).toEqual(["a"]);
    // b and c both still queued, b still first
    expect(q.pending().map((j) => j.task_id)).toEqual(["b", "c"]);

    const later: PendingJudgment[] = [];
    await q.flush(recordingSend(later));
    expect(later.map((j) => j.task_id)).toEqual(["b", "c"]);
  });

  it("treats a 409 as already delivered", async () => {
    const q = new SubmissionQueue();
    q.enqueue("a", 4);
    q.enqueue("b", 2);
    const sent: PendingJudgment[] = [];
    const outcome = await q.flush(async (job) => {
      if (job.task_id === "a") {
        throw new ApiError(409, "DuplicateJudgment", "already judged a");
      }
      sent.push(job);
      return { flagged: false };
    });
    expect(outcome).toEqual({ kind: "drained" });
    expect(sent.map((j) => j.task_id)).toEqual(["b"]);
    expect(q.size()).toBe(0);
  });

  it("drops a permanently refused job instead of wedging the line", async () => {
    const q = new SubmissionQueue();
    q.enqueue("gone", 2);
    q.enqueue("b", 1);
    const sent: PendingJudgment[] = [];
    const outcome = await q.flush(async (job) => {
      if (job.task_id === "gone") {
        throw new ApiError(404, "UnknownTask", "gone");
      }
      sent.push(job);
      return { flagged: false };
    });
    expect(outcome).toEqual({ kind: "drained" });
    expect(sent.map((j) => j.task_id)).toEqual(["b"]);
  });

  it("reports flagged and clears the queue on a 403", async () => {
    const q = new SubmissionQueue();
    q.enqueue("a", 1);
    q.enqueue("b", 2);
    const outcome = await q.flush(async () => {
      throw new ApiError(403, "AssessorFlagged", "locked out");
    });
    expect(outcome).toEqual({ kind: "flagged" });
    expect(q.size()).toBe(0);
  });

  it("reports flagged when the ack itself carries the flag", async () => {
    const q = new SubmissionQueue();
    q.enqueue("a", 1);
    q.enqueue("b", 2);
    const sent: PendingJudgment[] = [];
    const outcome = await q.flush(recordingSend(sent, { flagOn: "a" }));
    expect(outcome).toEqual({ kind: "flagged" });
    // a landed before the lockout; b can never land
    expect(sent.map((j) => j.task_id)).toEqual(["a"]);
    expect(q.size()).toBe(0);
  });

  it("serializes overlapping flushes", async () => {
    const q = new SubmissionQueue();
    q.enqueue("a", 1);
    q.enqueue("b", 2);
    const sent: string[] = [];
    const slowSend = async (job: PendingJudgment) => {
      await new Promise((r) => setTimeout(r, 1));
      sent.push(job.task_id);
      return { flagged: false };
    };
    await Promise.all([q.flush(slowSend), q.flush(slowSend)]);
    expect(sent).toEqual(["a", "b"]);
  });

  it("persists through a storage-backed store", () => {
    const store = browserStore("judge-ui:test-pending");
    try {
      const q1 = new SubmissionQueue(store);
      q1.enqueue("a", 3);
      const q2 = new SubmissionQueue(browserStore("judge-ui:test-pending"));
      expect(q2.pending()).toEqual([{ task_id: "a", score: 3 }]);
    } finally {
      store.write([]);
    }
  });

  it("memory store hands out copies, not its internal array", () => {
    const store = memoryStore();
    store.write([{ task_id: "a", score: 1 }]);
    const read = store.read();
    read.push({ task_id: "b", score: 2 });
    expect(store.read()).toHaveLength(1);
  });
});
