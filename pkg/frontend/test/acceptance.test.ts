/** End-to-end flow checks, driven through the mounted DOM like a scripted
 * browser session: clicks and key presses only, with the server side played
 * by the wire-faithful stand-in from mockServer.ts.
 */

import { afterEach, describe, expect, it } from "vitest";

import { JudgeApi } from "../src/api.js";
import { SubmissionQueue } from "../src/queue.js";
import { JudgeSession } from "../src/session.js";
import { mountJudgeUi } from "../src/view.js";
import { MockJudgeServer, makeTasks } from "./mockServer.js";

function rig(taskCount: number, batch: number) {
  const server = new MockJudgeServer(makeTasks(taskCount));
  const api = new JudgeApi("", server.fetch);
  const queue = new SubmissionQueue();
  const session = new JudgeSession(api, "scripted", { batch, queue });
  const root = document.createElement("div");
  document.body.appendChild(root);
  const unmount = mountJudgeUi(root, session);
  return { server, queue, session, root, unmount };
}

async function until(cond: () => boolean, ms = 1000): Promise<void> {
  const deadline = Date.now() + ms;
  while (!cond()) {
    if (Date.now() > deadline) throw new Error("condition not reached");
    await new Promise((r) => setTimeout(r, 1));
  }
}

function clickScore(root: HTMLElement, score: number): void {
  root
    .querySelector<HTMLButtonElement>(`button[data-score="${score}"]`)!
    .click();
}

function clickSubmit(root: HTMLElement): void {
  root.querySelector<HTMLButtonElement>("button.submit")!.click();
}

afterEach(() => {
  document.body.innerHTML = "";
});

describe("scripted assessor session", () => {
  it("completes a 10-task batch with only 0-5 scores, in server order", async () => {
    const { server, session, root, unmount } = rig(10, 10);
    await session.start();

    for (let i = 0; i < 10; i++) {
      await until(() =>
        root.querySelector(".progress")?.textContent === `Task ${i + 1} of 10`,
      );
      const score = i % 6; // walks through every score including 0 and 5
      if (i % 2 === 0) {
        clickScore(root, score);
      } else {
        document.dispatchEvent(new KeyboardEvent("keydown", { key: String(score) }));
      }
      clickSubmit(root);
    }
    await until(() => session.state().phase === "done");

    expect(root.textContent).toContain("Batch complete");
    expect(server.judgments).toHaveLength(10);
    expect(server.judgments.map((j) => j.task_id)).toEqual(
      makeTasks(10).map((t) => t.task_id),
    );
    for (const s of server.scoresSeen) {
      expect(typeof s).toBe("number");
      expect(Number.isInteger(s)).toBe(true);
      expect(s as number).toBeGreaterThanOrEqual(0);
      expect(s as number).toBeLessThanOrEqual(5);
    }
    unmount();
  });

  it("reaches a terminal screen when the server flags the assessor mid-batch", async () => {
    const { server, session, root, unmount } = rig(10, 10);
    server.flagAfter = 4;
    await session.start();

    for (let i = 0; i < 4; i++) {
      await until(() => session.state().task?.position_in_batch === i + 1);
      clickScore(root, 3);
      clickSubmit(root);
      await until(
        () =>
          session.state().phase === "ended" ||
          (session.state().task?.position_in_batch ?? 0) > i + 1,
      );
    }
    expect(session.state().phase).toBe("ended");
    expect(root.textContent).toContain("Session ended");
    expect(root.querySelectorAll("button")).toHaveLength(0);

    // nothing the assessor does afterwards produces another request
    const frozen = server.requestLog.length;
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "2" }));
    await session.start();
    await session.retryPending();
    await session.submitAndAdvance();
    expect(server.requestLog.length).toBe(frozen);
    unmount();
  });

  it("delivers exactly one judgment per task across a dropped-connection retry", async () => {
    const { server, queue, session, root, unmount } = rig(6, 6);
    await session.start();

    // two clean submissions
    for (let i = 0; i < 2; i++) {
      await until(() => session.state().task?.position_in_batch === i + 1);
      clickScore(root, 4);
      clickSubmit(root);
      await until(() => (session.state().task?.position_in_batch ?? 9) > i + 1);
    }

    // the third one is stored server-side but its response is lost
    server.dropResponses = 1;
    clickScore(root, 1);
    clickSubmit(root);
    await until(() => session.state().task?.position_in_batch === 4);
    expect(queue.size()).toBe(1);
    expect(server.judgments).toHaveLength(3);

    // connection is back; the retry of t002 goes out before t003 and the
    // server's 409 settles it without storing a second copy
    clickScore(root, 2);
    clickSubmit(root);
    await until(() => session.state().task?.position_in_batch === 5);
    expect(queue.size()).toBe(0);

    for (let i = 4; i < 6; i++) {
      await until(() => session.state().task?.position_in_batch === i + 1);
      clickScore(root, 5);
      clickSubmit(root);
    }
    await until(() => session.state().phase === "done");

    const perTask = new Map<string, number>();
    for (const j of server.judgments) {
      perTask.set(j.task_id, (perTask.get(j.task_id) ?? 0) + 1);
    }
    expect([...perTask.values()]).toEqual([1, 1, 1, 1, 1, 1]);
    // and delivery order matched task order despite the retry
    expect(server.judgments.map((j) => j.task_id)).toEqual(
      makeTasks(6).map((t) => t.task_id),
    );
    unmount();
  });
});
