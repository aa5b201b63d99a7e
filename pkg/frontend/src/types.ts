/** Wire shapes shared with the judging service. */

// A task as the server sends it. Exactly these four fields; the client
// must not retain anything beyond them, whatever the server adds later.
export interface WireTask {
  task_id: string;
  domain_id: string;
  phrase: string;
  snapshot_url: string;
}

// What the screen renders: the wire task plus the assessor's place in the
// current batch. Derived locally, never sent back.
export interface TaskView extends WireTask {
  position_in_batch: number;
  batch_size: number;
}

export interface JudgmentAck {
  accepted: boolean;
  flagged: boolean;
}

export type Score = 0 | 1 | 2 | 3 | 4 | 5;

export const SCORES: readonly Score[] = [0, 1, 2, 3, 4, 5];

export function isScore(value: unknown): value is Score {
  return (
    typeof value === "number" &&
    Number.isInteger(value) &&
    value >= 0 &&
    value <= 5
  );
}
