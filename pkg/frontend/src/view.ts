/** DOM layer. Renders the session state and forwards clicks and keys.
 *
 * The whole screen is rebuilt on every state change; the state is tiny and
 * this keeps the markup honest (no stale widgets). All server text goes in
 * through textContent, and the archived page is confined to a sandboxed
 * iframe with scripts disabled.
 */

import { RUBRIC_TEXT, SCORE_LABELS } from "./rubric.js";
import type { JudgeSession, SessionState } from "./session.js";
import { SCORES } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderScoring(
  doc: Document,
  state: SessionState,
  session: JudgeSession,
): HTMLElement {
  const task = state.task;
  if (!task) return el(doc, "div");

  const main = el(doc, "main", "judge-main");

  const snapPane = el(doc, "section", "snapshot-pane");
  if (state.snapshotFailed) {
    snapPane.appendChild(
      el(doc, "div", "snapshot-error", "page failed to load"),
    );
  } else if (state.snapshotHtml !== null) {
    const frame = el(doc, "iframe", "snapshot-frame");
    frame.setAttribute("sandbox", "");
    frame.setAttribute("title", "archived page");
    frame.setAttribute("srcdoc", state.snapshotHtml);
    snapPane.appendChild(frame);
  } else {
    snapPane.appendChild(el(doc, "div", "snapshot-loading", "loading page"));
  }
  main.appendChild(snapPane);

  const pane = el(doc, "aside", "score-pane");
  pane.appendChild(
    el(
      doc,
      "div",
      "progress",
      `Task ${task.position_in_batch} of ${task.batch_size}`,
    ),
  );
  pane.appendChild(el(doc, "div", "domain", task.domain_id));
  pane.appendChild(el(doc, "div", "phrase", task.phrase));
  if (state.notice) {
    pane.appendChild(el(doc, "div", "notice", state.notice));
  }

  const scores = el(doc, "div", "scores");
  scores.setAttribute("role", "radiogroup");
  scores.setAttribute("aria-label", "relevance score");
  for (const score of SCORES) {
    const btn = el(doc, "button", "score-option", `${score}`);
    btn.setAttribute("type", "button");
    btn.setAttribute("data-score", String(score));
    btn.setAttribute("aria-pressed", state.selected === score ? "true" : "false");
    if (state.selected === score) btn.classList.add("selected");
    const label = SCORE_LABELS[score];
    if (label) {
      btn.appendChild(el(doc, "span", "score-label", label));
    }
    btn.addEventListener("click", () => session.select(score));
    scores.appendChild(btn);
  }
  pane.appendChild(scores);

  const submit = el(doc, "button", "submit", "Submit and next");
  submit.setAttribute("type", "button");
  submit.disabled = state.selected === null;
  submit.addEventListener("click", () => {
    void session.submitAndAdvance();
  });
  pane.appendChild(submit);

  if (state.pendingCount > 0) {
    pane.appendChild(
      el(
        doc,
        "div",
        "pending-badge",
        `${state.pendingCount} judgment(s) queued for retry`,
      ),
    );
  }

  const rubric = el(doc, "details", "rubric");
  rubric.setAttribute("open", "");
  rubric.appendChild(el(doc, "summary", undefined, "Scoring instructions"));
  rubric.appendChild(el(doc, "pre", "rubric-text", RUBRIC_TEXT));
  pane.appendChild(rubric);

  main.appendChild(pane);
  return main;
}

function renderNotice(
  doc: Document,
  className: string,
  title: string,
  state: SessionState,
  extra?: HTMLElement,
): HTMLElement {
  const box = el(doc, "div", className);
  box.appendChild(el(doc, "h2", undefined, title));
  if (state.notice) box.appendChild(el(doc, "p", "notice", state.notice));
  if (extra) box.appendChild(extra);
  return box;
}

function render(
  root: HTMLElement,
  state: SessionState,
  session: JudgeSession,
): void {
  const doc = root.ownerDocument;
  root.textContent = "";

  const app = el(doc, "div", "judge-app");
  const header = el(doc, "header", "judge-header");
  header.appendChild(el(doc, "span", "assessor", `Judging as ${state.assessorId}`));
  app.appendChild(header);

  switch (state.phase) {
    case "idle": {
      const retry = el(doc, "button", "start", "Load tasks");
      retry.addEventListener("click", () => void session.start());
      app.appendChild(renderNotice(doc, "screen-idle", "Ready", state, retry));
      break;
    }
    case "loading":
      app.appendChild(renderNotice(doc, "screen-loading", "Loading tasks", state));
      break;
    case "scoring":
      app.appendChild(renderScoring(doc, state, session));
      break;
    case "done": {
      const next = el(doc, "button", "next-batch", "Load next batch");
      next.addEventListener("click", () => void session.start());
      app.appendChild(
        renderNotice(doc, "screen-done", "Batch complete", state, next),
      );
      break;
    }
    case "ended":
      app.appendChild(
        renderNotice(doc, "screen-ended", "Session ended", state),
      );
      break;
  }
  root.appendChild(app);
}

/** Mount the UI under root; returns an unmount function. */
export function mountJudgeUi(root: HTMLElement, session: JudgeSession): () => void {
  const doc = root.ownerDocument;
  const onKey = (ev: KeyboardEvent) => {
    // ignore keys aimed at form fields
    const target = ev.target as HTMLElement | null;
    if (target && /^(input|textarea|select)$/i.test(target.tagName)) return;
    session.pressKey(ev.key);
  };
  doc.addEventListener("keydown", onKey);
  const unsubscribe = session.subscribe((state) => render(root, state, session));
  render(root, session.state(), session);
  return () => {
    unsubscribe();
    doc.removeEventListener("keydown", onKey);
    root.textContent = "";
  };
}
