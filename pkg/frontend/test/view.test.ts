import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { JudgeApi } from "../src/api.js";
import { RUBRIC_TEXT } from "../src/rubric.js";
import { JudgeSession } from "../src/session.js";
import { mountJudgeUi } from "../src/view.js";
import { MockJudgeServer, makeTasks } from "./mockServer.js";

function domRig(taskCount: number, opts: { batch?: number } = {}) {
  const server = new MockJudgeServer(makeTasks(taskCount));
  const api = new JudgeApi("", server.fetch);
  const session = new JudgeSession(api, "alice", { batch: opts.batch ?? 10 });
  const root = document.createElement("div");
  document.body.appendChild(root);
  const unmount = mountJudgeUi(root, session);
  return { server, session, root, unmount };
}

let cleanup: (() => void)[] = [];

beforeEach(() => {
  cleanup = [];
});

afterEach(() => {
  for (const fn of cleanup) fn();
  document.body.innerHTML = "";
});

describe("judge UI", () => {
  it("renders exactly six score options, 0 labeled as the failure score", async () => {
    const { session, root, unmount } = domRig(2);
    cleanup.push(unmount);
    await session.start();

    const options = root.querySelectorAll("button[data-score]");
    expect(options).toHaveLength(6);
    const values = [...options].map((b) => b.getAttribute("data-score"));
    expect(values).toEqual(["0", "1", "2", "3", "4", "5"]);
    const zero = [...options].find((b) => b.getAttribute("data-score") === "0")!;
    expect(zero.textContent).toContain("failure / page broken");
  });

  it("shows the fixed rubric text beside every task", async () => {
    const { session, root, unmount } = domRig(1);
    cleanup.push(unmount);
    await session.start();
    const rubric = root.querySelector(".rubric-text");
    expect(rubric?.textContent).toBe(RUBRIC_TEXT);
    expect(rubric?.textContent).toContain("If the page fails to load, give a 0");
  });

  it("keeps submit disabled until a score is chosen", async () => {
    const { session, root, unmount } = domRig(1);
    cleanup.push(unmount);
    await session.start();

    const submit = () => root.querySelector<HTMLButtonElement>("button.submit")!;
    expect(submit().disabled).toBe(true);
    root
      .querySelector<HTMLButtonElement>('button[data-score="4"]')!
      .click();
    expect(submit().disabled).toBe(false);
    expect(
      root
        .querySelector('button[data-score="4"]')!
        .getAttribute("aria-pressed"),
    ).toBe("true");
  });

  it("selects scores from digit keys 0-5 and ignores others", async () => {
    const { session, root, unmount } = domRig(1);
    cleanup.push(unmount);
    await session.start();

    document.dispatchEvent(new KeyboardEvent("keydown", { key: "5" }));
    expect(session.state().selected).toBe(5);
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "8" }));
    expect(session.state().selected).toBe(5);
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "0" }));
    expect(session.state().selected).toBe(0);
    expect(root.querySelector('button[data-score="0"]')!.className).toContain(
      "selected",
    );
  });

  it("shows the task's keyword, domain and batch position", async () => {
    const { session, root, unmount } = domRig(3, { batch: 3 });
    cleanup.push(unmount);
    await session.start();
    expect(root.querySelector(".phrase")?.textContent).toBe("keyword 0");
    expect(root.querySelector(".domain")?.textContent).toBe("domain-0.example");
    expect(root.querySelector(".progress")?.textContent).toBe("Task 1 of 3");
  });

  it("confines the archived page to a sandboxed iframe", async () => {
    const { session, root, unmount } = domRig(1);
    cleanup.push(unmount);
    await session.start();
    const frame = root.querySelector("iframe.snapshot-frame")!;
    expect(frame.getAttribute("sandbox")).toBe("");
    expect(frame.getAttribute("srcdoc")).toContain("archived domain-0.example");
  });

  it("annotates a failed snapshot and pre-selects the failure score", async () => {
    const { server, session, root, unmount } = domRig(1);
    cleanup.push(unmount);
    server.brokenSnapshots.add("domain-0.example");
    await session.start();
    expect(root.querySelector(".snapshot-error")?.textContent).toBe(
      "page failed to load",
    );
    expect(
      root.querySelector('button[data-score="0"]')!.getAttribute("aria-pressed"),
    ).toBe("true");
    // still overridable by hand
    root.querySelector<HTMLButtonElement>('button[data-score="3"]')!.click();
    expect(session.state().selected).toBe(3);
  });

  it("walks to the next task on submit", async () => {
    const { session, root, unmount } = domRig(2, { batch: 2 });
    cleanup.push(unmount);
    await session.start();
    root.querySelector<HTMLButtonElement>('button[data-score="2"]')!.click();
    root.querySelector<HTMLButtonElement>("button.submit")!.click();
    await new Promise((r) => setTimeout(r, 0));
    expect(root.querySelector(".progress")?.textContent).toBe("Task 2 of 2");
    expect(root.querySelector(".phrase")?.textContent).toBe("keyword 1");
  });

  it("replaces the whole screen with a terminal notice when flagged", async () => {
    const { server, session, root, unmount } = domRig(4, { batch: 4 });
    cleanup.push(unmount);
    server.flagAfter = 1;
    await session.start();
    session.select(3);
    await session.submitAndAdvance();

    expect(root.textContent).toContain("Session ended");
    expect(root.querySelectorAll("button[data-score]")).toHaveLength(0);
    expect(root.querySelector("button.submit")).toBeNull();
  });

  it("renders nothing from the server beyond the wire fields", async () => {
    const { session, root, unmount } = domRig(1);
    cleanup.push(unmount);
    await session.start();
    // the screen carries the keyword, the domain and the archived page;
    // there is no place for any other per-task information
    const text = root.textContent ?? "";
    expect(text).toContain("keyword 0");
    expect(text).toContain("domain-0.example");
    expect(text).not.toContain("t000");
  });

  it("unmount stops rendering and key handling", async () => {
    const { session, root, unmount } = domRig(1);
    await session.start();
    unmount();
    expect(root.textContent).toBe("");
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "4" }));
    expect(session.state().selected).toBeNull();
  });
});
