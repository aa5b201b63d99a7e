/** Browser entry point.
 *
 * Serve the compiled bundle from any static host on the same origin as the
 * judging API (or pass an explicit base URL). The page needs a
 * #judge-root element and an ?assessor=<id> query parameter.
 */

import { JudgeApi } from "./api.js";
import { browserStore, SubmissionQueue } from "./queue.js";
import { JudgeSession } from "./session.js";
import { mountJudgeUi } from "./view.js";

export function boot(
  root: HTMLElement,
  assessorId: string,
  baseUrl = "",
): JudgeSession {
  const api = new JudgeApi(baseUrl);
  const queue = new SubmissionQueue(
    browserStore(`judge-ui:pending:${assessorId}`),
  );
  const session = new JudgeSession(api, assessorId, { queue });
  mountJudgeUi(root, session);
  window.addEventListener("online", () => {
    void session.retryPending();
  });
  void session.start();
  return session;
}

const rootEl =
  typeof document === "undefined" ? null : document.getElementById("judge-root");
if (rootEl) {
  const assessor = new URLSearchParams(window.location.search).get("assessor");
  if (assessor) {
    boot(rootEl, assessor);
  } else {
    rootEl.textContent = "Missing ?assessor=<your id> in the URL.";
  }
}
