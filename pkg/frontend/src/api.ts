/** Typed client for the judging service HTTP API.
 *
 * Every call funnels through one request helper so failures stay uniform:
 * HTTP error bodies ({"error": ..., "detail": ...}) become ApiError and
 * transport failures become NetworkError. Callers branch on those two.
 */

import type { JudgmentAck, WireTask } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ApiError";
  }
}

export class NetworkError extends Error {
  constructor(cause: unknown) {
    super("request did not reach the server");
    this.name = "NetworkError";
    this.cause = cause;
  }
}

// Structural subset of Response; lets tests hand back plain objects.
export interface ResponseLike {
  ok: boolean;
  status: number;
  statusText: string;
  json(): Promise<unknown>;
  text(): Promise<string>;
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<ResponseLike>;

interface ErrorBody {
  error?: unknown;
  detail?: unknown;
}

export class JudgeApi {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string = "",
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request(
    path: string,
    init?: RequestInit,
  ): Promise<ResponseLike> {
    let res: ResponseLike;
    try {
      res = await this.fetchFn(this.baseUrl + path, init);
    } catch (cause) {
      throw new NetworkError(cause);
    }
    if (!res.ok) {
      let code = "HttpError";
      let detail = res.statusText;
      try {
        const body = (await res.json()) as ErrorBody;
        if (body && typeof body.error === "string") {
          code = body.error;
          if (typeof body.detail === "string") detail = body.detail;
        }
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(res.status, code, detail);
    }
    return res;
  }

  async fetchTasks(assessorId: string, batch?: number): Promise<WireTask[]> {
    const query = new URLSearchParams({ assessor: assessorId });
    if (batch !== undefined) query.set("batch", String(batch));
    const res = await this.request(`/api/tasks?${query.toString()}`);
    const raw = (await res.json()) as unknown;
    if (!Array.isArray(raw)) return [];
    // copy exactly the wire fields; anything extra is dropped on the floor
    return raw.map((t: Record<string, unknown>) => ({
      task_id: String(t.task_id),
      domain_id: String(t.domain_id),
      phrase: String(t.phrase),
      snapshot_url: String(t.snapshot_url),
    }));
  }

  async fetchSnapshot(snapshotUrl: string): Promise<string> {
    const res = await this.request(snapshotUrl);
    return res.text();
  }

  async submitJudgment(
    assessorId: string,
    taskId: string,
    score: number,
  ): Promise<JudgmentAck> {
    const res = await this.request("/api/judgments", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({
        assessor_id: assessorId,
        task_id: taskId,
        score,
      }),
    });
    const body = (await res.json()) as Record<string, unknown>;
    return {
      accepted: body.accepted === true,
      flagged: body.flagged === true,
    };
  }
}
