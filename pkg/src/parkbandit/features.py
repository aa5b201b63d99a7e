"""Assemble the 8-dimensional feature vector for every candidate arm.

Dimension order: [bm25f, tfidf_title, tfidf_content, tfidf_meta_keywords,
tfidf_meta_description, tfidf_headers, tfidf_anchors, pos_indicator].
The 7 continuous features are max-normalized per document so each column's
maximum over arms is exactly 1 (or stays all-zero).
"""

from dataclasses import dataclass

from .bm25f import Bm25fParams, bm25f_score, field_lengths
from .ingest import FieldedDocument
from .postag import Pos
from .textpipe import Candidate, FIELD_ORDER, IdfStore, Token, tfidf

D = 8

FEATURE_LABELS = (
    "bm25f",
    "tfidf_title",
    "tfidf_content",
    "tfidf_meta_keywords",
    "tfidf_meta_description",
    "tfidf_headers",
    "tfidf_anchors",
    "pos_indicator",
)

N_CONTINUOUS = 7


@dataclass(frozen=True)
class CandidateArm:
    phrase: str
    features: tuple
    domain_id: str


def featurize(candidates: list[Candidate], doc: FieldedDocument,
              params: Bm25fParams, idf: IdfStore,
              tokens: list[Token] | None = None,
              doc_field_lens: dict | None = None) -> list[CandidateArm]:
    """Raw features, then per-document max-normalization of the continuous 7."""
    if doc_field_lens is None:
        doc_field_lens = field_lengths(tokens or [])
    raw: list[list[float]] = []
    for cand in candidates:
        row = [bm25f_score(cand, doc_field_lens, params, idf)]
        row.extend(tfidf(cand, f, idf) for f in FIELD_ORDER)
        row.append(
            1.0 if (cand.head_pos is Pos.NOUN or cand.is_np_chunk) else 0.0
        )
        raw.append(row)

    for col in range(N_CONTINUOUS):
        peak = max((row[col] for row in raw), default=0.0)
        if peak > 0.0:
            for row in raw:
                row[col] /= peak

    return [
        CandidateArm(phrase=cand.phrase, features=tuple(row), domain_id=doc.domain_id)
        for cand, row in zip(candidates, raw)
    ]
