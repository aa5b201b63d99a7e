"""Two-stage part-of-speech tagger: lexicon lookup, then suffix rules.

Stage one looks the lowercased surface form up in the bundled tag lexicon
(word<TAB>tag, one entry per line). Stage two falls back to suffix rules
for unknown words:

    -ness / -tion / -ment  -> Noun
    -ize  / -ate           -> Verb
    -ous  / -ful / -able   -> Adjective
    capitalized in source  -> Noun
    otherwise              -> Other
"""

from enum import Enum
from pathlib import Path

_DATA_DIR = Path(__file__).parent / "data"


class Pos(Enum):
    NOUN = "Noun"
    VERB = "Verb"
    ADJECTIVE = "Adjective"
    OTHER = "Other"


_TAG_NAMES = {
    "noun": Pos.NOUN,
    "verb": Pos.VERB,
    "adjective": Pos.ADJECTIVE,
    "other": Pos.OTHER,
}

_lexicon: dict[str, Pos] | None = None


def _load_lexicon() -> dict[str, Pos]:
    global _lexicon
    if _lexicon is None:
        table = {}
        raw = (_DATA_DIR / "tag_lexicon.txt").read_text(encoding="utf-8")
        for line in raw.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, _, tag = line.partition("\t")
            table[word] = _TAG_NAMES[tag]
        _lexicon = table
    return _lexicon


_NOUN_SUFFIXES = ("ness", "tion", "ment")
_VERB_SUFFIXES = ("ize", "ate")
_ADJ_SUFFIXES = ("ous", "ful", "able")


def tag(surface: str) -> Pos:
    """Tag one token. `surface` is the form as it appeared in the source."""
    word = surface.lower()
    lexicon = _load_lexicon()
    if word in lexicon:
        return lexicon[word]
    if word.endswith(_NOUN_SUFFIXES):
        return Pos.NOUN
    if word.endswith(_VERB_SUFFIXES):
        return Pos.VERB
    if word.endswith(_ADJ_SUFFIXES):
        return Pos.ADJECTIVE
    if surface[:1].isupper():
        return Pos.NOUN
    return Pos.OTHER
