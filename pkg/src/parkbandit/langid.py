"""Character 3-gram naive-Bayes language identification.

Profiles are built once, at first use, from the seed texts bundled under
data/lang/<code>.txt. Classification scores a text's trigrams against each
profile with add-one smoothing and a uniform prior; the reported confidence
is the softmax-normalized posterior of the winning language.
"""

import math
from pathlib import Path

from .errors import Undetectable

_LANG_DIR = Path(__file__).parent / "data" / "lang"

MIN_ALPHABETIC = 20


def _normalize(text: str) -> str:
    chars = [c.lower() if c.isalpha() else " " for c in text]
    return " ".join("".join(chars).split())


def _trigrams(text: str):
    padded = f" {text} "
    for i in range(len(padded) - 2):
        gram = padded[i : i + 3]
        if gram != "   ":
            yield gram


class _Profiles:
    def __init__(self, lang_dir: Path):
        self.counts: dict[str, dict[str, int]] = {}
        self.totals: dict[str, int] = {}
        vocabulary: set[str] = set()
        for path in sorted(lang_dir.glob("*.txt")):
            code = path.stem
            grams: dict[str, int] = {}
            for gram in _trigrams(_normalize(path.read_text(encoding="utf-8"))):
                grams[gram] = grams.get(gram, 0) + 1
            self.counts[code] = grams
            self.totals[code] = sum(grams.values())
            vocabulary.update(grams)
        self.vocab_size = len(vocabulary)

    def log_likelihood(self, code: str, grams: list[str]) -> float:
        counts = self.counts[code]
        denom = self.totals[code] + self.vocab_size
        return sum(
            math.log((counts.get(g, 0) + 1) / denom) for g in grams
        )


_profiles: _Profiles | None = None


def _load_profiles() -> _Profiles:
    global _profiles
    if _profiles is None:
        _profiles = _Profiles(_LANG_DIR)
    return _profiles


def detect_language(text: str) -> tuple[str, float]:
    """Return (ISO-639-1 code, confidence in [0,1]) for the given text.

    Raises Undetectable when the text has fewer than 20 alphabetic characters.
    """
    if sum(1 for c in text if c.isalpha()) < MIN_ALPHABETIC:
        raise Undetectable(f"need >= {MIN_ALPHABETIC} alphabetic characters")
    profiles = _load_profiles()
    grams = list(_trigrams(_normalize(text)))
    scores = {
        code: profiles.log_likelihood(code, grams) for code in profiles.counts
    }
    best = max(scores, key=lambda c: (scores[c], c))
    # softmax-normalized posterior, stabilized against underflow
    peak = scores[best]
    total = sum(math.exp(s - peak) for s in scores.values())
    return best, 1.0 / total
