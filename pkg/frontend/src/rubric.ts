/** Fixed assessor instructions. Every session shows the same text. */

export const SCORE_LABELS: Readonly<Record<number, string>> = {
  0: "failure / page broken",
  1: "unrelated",
  2: "loosely related",
  3: "somewhat related",
  4: "clearly related",
  5: "exact match",
};

export const RUBRIC_TEXT = `How to score

Look at the archived page on the left and the keyword shown beside it.
Rate how relevant the keyword is to what that page offers:

  5  exact match: the keyword is precisely what the page is about
  4  clearly related to the page's topic or offer
  3  somewhat related
  2  loosely related, only a weak connection
  1  unrelated to the page
  0  failure: the page is broken, empty, or did not load,
     or the keyword is empty or unreadable

Judge the keyword against the page you actually see, not against what
the domain name suggests. If the page fails to load, give a 0.
Each task is scored on its own; there is no need to compare keywords
with each other.`;
