"""Tokenization, candidate phrase extraction, and the corpus IDF store.

The pipeline is English-only: segment on Unicode word boundaries, lowercase,
drop punctuation and pure-number tokens, remove stopwords, stem with Porter,
and POS-tag. Candidates are all unigrams plus 2-3-gram NP-chunks (maximal
noun sequences, optionally adjective-prefixed, over positionally contiguous
tokens of a single field).
"""

import math
import re
from dataclasses import dataclass, field as dc_field
from enum import Enum
from pathlib import Path

from . import porter
from .errors import UnsupportedLanguage
from .ingest import FieldedDocument
from .postag import Pos, tag


class Field(Enum):
    TITLE = "title"
    CONTENT = "content"
    META_KEYWORDS = "meta_keywords"
    META_DESCRIPTION = "meta_description"
    HEADERS = "headers"
    ANCHORS = "anchors"


FIELD_ORDER = (
    Field.TITLE,
    Field.CONTENT,
    Field.META_KEYWORDS,
    Field.META_DESCRIPTION,
    Field.HEADERS,
    Field.ANCHORS,
)


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    pos: Pos
    field: Field
    position: int


@dataclass
class Candidate:
    phrase: str
    per_field_tf: dict
    is_np_chunk: bool
    df: int
    head_pos: Pos

    def total_tf(self) -> int:
        return sum(self.per_field_tf.values())


@dataclass(frozen=True)
class IdfStore:
    doc_count: int = 0
    df: dict = dc_field(default_factory=dict)


_STOPWORDS_PATH = Path(__file__).parent / "data" / "stopwords_en.txt"
_stopwords: frozenset[str] | None = None


def stopwords() -> frozenset[str]:
    global _stopwords
    if _stopwords is None:
        words = _STOPWORDS_PATH.read_text(encoding="utf-8").split()
        _stopwords = frozenset(words)
    return _stopwords


_WORD_RE = re.compile(r"\w+(?:'\w+)*")

SUPPORTED_LANGUAGES = frozenset({"en"})


def _segment(text: str) -> list[str]:
    return _WORD_RE.findall(text.replace("’", "'"))


def tokenize(doc: FieldedDocument) -> list[Token]:
    """Turn a fielded document into stemmed, tagged, stopword-free tokens."""
    if doc.language not in SUPPORTED_LANGUAGES:
        raise UnsupportedLanguage(doc.language or "(none)")
    stops = stopwords()
    tokens: list[Token] = []
    for f in FIELD_ORDER:
        # positions index the raw word segmentation, so removed stopwords
        # leave gaps that NP-chunks may not bridge
        for position, raw in enumerate(_segment(doc.field_text(f.value))):
            lower = raw.lower()
            if lower.replace("'", "").isdigit():
                continue
            if lower in stops:
                continue
            tokens.append(
                Token(
                    surface=lower,
                    stem=porter.stem(lower),
                    pos=tag(raw),
                    field=f,
                    position=position,
                )
            )
    return tokens


def _zero_tf() -> dict:
    return {f: 0 for f in FIELD_ORDER}


def _chunk_runs(tokens: list[Token]) -> list[list[Token]]:
    """Maximal Adj*Noun+ runs over positionally contiguous tokens."""
    runs: list[list[Token]] = []
    current: list[Token] = []
    seen_noun = False
    for tok in tokens:
        extends = (
            current
            and tok.position == current[-1].position + 1
            and (tok.pos is Pos.NOUN or (tok.pos is Pos.ADJECTIVE and not seen_noun))
        )
        if extends:
            current.append(tok)
            seen_noun = seen_noun or tok.pos is Pos.NOUN
            continue
        if seen_noun and len(current) >= 2:
            runs.append(current)
        if tok.pos in (Pos.NOUN, Pos.ADJECTIVE):
            current = [tok]
            seen_noun = tok.pos is Pos.NOUN
        else:
            current = []
            seen_noun = False
    if seen_noun and len(current) >= 2:
        runs.append(current)
    return runs


def _subchunks(run: list[Token]):
    """All 2-3-gram subspans of a run that are themselves Adj*Noun+."""
    for size in (2, 3):
        for start in range(len(run) - size + 1):
            span = run[start : start + size]
            if span[-1].pos is not Pos.NOUN:
                continue
            ok = True
            noun_seen = False
            for tok in span:
                if tok.pos is Pos.NOUN:
                    noun_seen = True
                elif noun_seen:
                    ok = False
                    break
            if ok:
                yield span


def extract_candidates(tokens: list[Token], idf: IdfStore) -> list[Candidate]:
    """Unigrams plus NP-chunk 2-3-grams, deduplicated, first-occurrence order."""
    stops = stopwords()
    by_phrase: dict[str, Candidate] = {}

    def add(phrase: str, f: Field, is_chunk: bool, head: Pos) -> None:
        if phrase.rsplit(" ", 1)[-1] in stops:
            return
        cand = by_phrase.get(phrase)
        if cand is None:
            cand = Candidate(
                phrase=phrase,
                per_field_tf=_zero_tf(),
                is_np_chunk=is_chunk,
                df=idf.df.get(phrase, 0),
                head_pos=head,
            )
            by_phrase[phrase] = cand
        cand.per_field_tf[f] += 1

    for f in FIELD_ORDER:
        field_tokens = [t for t in tokens if t.field is f]
        for tok in field_tokens:
            add(tok.stem, f, False, tok.pos)
        for run in _chunk_runs(field_tokens):
            for span in _subchunks(run):
                phrase = " ".join(t.stem for t in span)
                add(phrase, f, True, span[-1].pos)

    return list(by_phrase.values())


def update_idf(idf: IdfStore, candidates: list[Candidate]) -> IdfStore:
    """Fold one document's candidates into the corpus store (functional)."""
    df = dict(idf.df)
    for phrase in {c.phrase for c in candidates}:
        df[phrase] = df.get(phrase, 0) + 1
    return IdfStore(doc_count=idf.doc_count + 1, df=df)


def idf_component(df: int, doc_count: int) -> float:
    """BM25-style smoothed IDF, non-negative by construction."""
    df = min(max(df, 0), doc_count)
    return math.log(1.0 + (doc_count - df + 0.5) / (df + 0.5))


def tfidf(candidate: Candidate, f: Field, idf: IdfStore) -> float:
    return candidate.per_field_tf[f] * idf_component(candidate.df, idf.doc_count)
