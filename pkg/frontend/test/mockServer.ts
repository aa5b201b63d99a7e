/** In-memory stand-in for the judging service.
 *
 * Speaks the same wire protocol the real server does: a bare JSON array
 * from /api/tasks, {accepted, flagged} acks from /api/judgments, error
 * bodies of the form {"error": Name, "detail": text} with the service's
 * status codes (400 invalid score, 403 flagged assessor, 404 unknown ids,
 * 409 duplicates). Fault injection covers the two transport failures the
 * client must survive: fully offline, and a connection dropped after the
 * server already stored the judgment.
 */

import type { FetchLike, ResponseLike } from "../src/api.js";
import type { WireTask } from "../src/types.js";

export interface StoredJudgment {
  assessor_id: string;
  task_id: string;
  score: unknown;
}

function jsonResponse(status: number, body: unknown): ResponseLike {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    json: () => Promise.resolve(JSON.parse(JSON.stringify(body))),
    text: () => Promise.resolve(JSON.stringify(body)),
  };
}

function htmlResponse(html: string): ResponseLike {
  return {
    ok: true,
    status: 200,
    statusText: "200",
    json: () => Promise.reject(new Error("not json")),
    text: () => Promise.resolve(html),
  };
}

function errorResponse(status: number, name: string, detail: string): ResponseLike {
  return jsonResponse(status, { error: name, detail });
}

// what a browser fetch throws when the connection fails
function connectionError(): Error {
  return new TypeError("fetch failed");
}

export function makeTasks(n: number, prefix = "t"): WireTask[] {
  const tasks: WireTask[] = [];
  for (let i = 0; i < n; i++) {
    const domain = `domain-${i % 7}.example`;
    tasks.push({
      task_id: `${prefix}${String(i).padStart(3, "0")}`,
      domain_id: domain,
      phrase: `keyword ${i}`,
      snapshot_url: `/api/snapshots/${domain}`,
    });
  }
  return tasks;
}

export class MockJudgeServer {
  judgments: StoredJudgment[] = [];
  flagged = new Set<string>();
  /** flag the assessor once this many of their judgments are stored */
  flagAfter: number | null = null;
  /** reject requests before touching any state */
  offline = false;
  /** process these many judgment requests, then fail their responses */
  dropResponses = 0;
  /** snapshot requests fail for these domain ids */
  brokenSnapshots = new Set<string>();
  /** every URL seen, in order; lets tests assert "no further requests" */
  requestLog: string[] = [];
  /** every score received in a judgment POST, accepted or not */
  scoresSeen: unknown[] = [];

  constructor(private readonly tasks: WireTask[]) {}

  readonly fetch: FetchLike = async (url, init) => {
    this.requestLog.push(url);
    if (this.offline) throw connectionError();
    const u = new URL(url, "http://judge.test");
    const path = u.pathname;

    if (path === "/api/tasks") {
      return this.handleTasks(u);
    }
    if (path.startsWith("/api/snapshots/")) {
      return this.handleSnapshot(path.slice("/api/snapshots/".length));
    }
    if (path === "/api/judgments" && init?.method === "POST") {
      return this.handleJudgment(String(init.body ?? ""));
    }
    return errorResponse(404, "UnknownTask", `no route for ${path}`);
  };

  private handleTasks(u: URL): ResponseLike {
    const assessor = u.searchParams.get("assessor") ?? "";
    const batch = Number(u.searchParams.get("batch") ?? "10");
    if (!assessor) {
      return errorResponse(400, "InvalidParams", "assessor id must be non-empty");
    }
    if (this.flagged.has(assessor)) {
      return errorResponse(403, "AssessorFlagged", assessor);
    }
    const done = new Set(
      this.judgments
        .filter((j) => j.assessor_id === assessor)
        .map((j) => j.task_id),
    );
    const out = this.tasks
      .filter((t) => !done.has(t.task_id))
      .slice(0, batch)
      .map((t) => ({ ...t }));
    return jsonResponse(200, out);
  }

  private handleSnapshot(domainId: string): ResponseLike {
    if (this.brokenSnapshots.has(domainId)) {
      return errorResponse(404, "UnknownTask", `no snapshot for ${domainId}`);
    }
    return htmlResponse(
      `<html><head><title>${domainId}</title></head><body>archived ${domainId}</body></html>`,
    );
  }

  private handleJudgment(rawBody: string): ResponseLike {
    let body: Record<string, unknown>;
    try {
      body = JSON.parse(rawBody) as Record<string, unknown>;
    } catch {
      return errorResponse(400, "InvalidParams", "body must be a JSON object");
    }
    const assessor = body.assessor_id;
    const taskId = body.task_id;
    const score = body.score;
    this.scoresSeen.push(score);
    if (typeof assessor !== "string" || typeof taskId !== "string") {
      return errorResponse(400, "InvalidParams", "assessor_id and task_id must be strings");
    }
    if (this.flagged.has(assessor)) {
      return errorResponse(403, "AssessorFlagged", assessor);
    }
    if (
      typeof score !== "number" ||
      !Number.isInteger(score) ||
      score < 0 ||
      score > 5
    ) {
      return errorResponse(400, "InvalidScore", `score must be an integer 0-5, got ${String(score)}`);
    }
    if (!this.tasks.some((t) => t.task_id === taskId)) {
      return errorResponse(404, "UnknownTask", taskId);
    }
    if (
      this.judgments.some(
        (j) => j.assessor_id === assessor && j.task_id === taskId,
      )
    ) {
      return errorResponse(409, "DuplicateJudgment", `${assessor} already judged ${taskId}`);
    }

    this.judgments.push({ assessor_id: assessor, task_id: taskId, score });
    const mine = this.judgments.filter((j) => j.assessor_id === assessor).length;
    if (this.flagAfter !== null && mine >= this.flagAfter) {
      this.flagged.add(assessor);
    }
    if (this.dropResponses > 0) {
      // the judgment is stored but the reply never arrives
      this.dropResponses -= 1;
      throw connectionError();
    }
    return jsonResponse(200, {
      accepted: true,
      flagged: this.flagged.has(assessor),
    });
  }
}
