"""Load an archived-domain corpus and turn every usable domain into bandit
arms.

Two passes over the corpus directory: the first collects candidate phrases
and per-field lengths to finalize document frequencies and field-length
averages, the second featurizes against those corpus statistics. Domains
that cannot be processed (decode failures, non-English pages, empty field
sets) are skipped and recorded with a reason rather than aborting the
whole build.
"""

import dataclasses
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import bm25f, ingest, langid, textpipe
from .errors import (
    DecodeError,
    EmptyBody,
    FetchError,
    Undetectable,
    UnsupportedLanguage,
    UnusableDomain,
)
from .features import CandidateArm, featurize


@dataclass
class DomainEntry:
    domain_id: str
    record: ingest.DomainRecord
    doc: ingest.FieldedDocument
    tokens: list
    candidates: list
    field_lens: dict
    arms: list = dc_field(default_factory=list)


@dataclass
class CorpusModel:
    corpus_dir: Path
    params: bm25f.Bm25fParams
    idf: textpipe.IdfStore
    domains: dict
    skipped: dict

    def domain_ids(self) -> list[str]:
        return sorted(self.domains)

    def arms_by_domain(self) -> dict:
        return {d: entry.arms for d, entry in self.domains.items()}


def _document_text(doc: ingest.FieldedDocument) -> str:
    return " ".join(doc.field_text(f) for f in ingest.FieldedDocument.FIELDS)


def load_domain(corpus_dir: str | Path, domain_id: str):
    """One domain: record -> encoding -> fields -> language -> tokens."""
    record = ingest.load_corpus_record(corpus_dir, domain_id)
    encoding = ingest.detect_encoding(record)
    doc = ingest.parse_fields(record, encoding, "und")
    if doc.unusable:
        raise UnusableDomain(f"{domain_id}: no visible text in any field")
    language, _confidence = langid.detect_language(_document_text(doc))
    doc = dataclasses.replace(doc, language=language)
    tokens = textpipe.tokenize(doc)
    return record, doc, tokens


def build_corpus(corpus_dir: str | Path,
                 config_text: str | None = None) -> CorpusModel:
    root = Path(corpus_dir)
    if not root.is_dir():
        raise FetchError(f"corpus directory not found: {root}")
    domain_ids = sorted(
        p.name for p in root.iterdir() if (p / "page.html").is_file()
    )

    entries: dict[str, DomainEntry] = {}
    skipped: dict[str, str] = {}
    tracker = bm25f.FieldLengthTracker()
    idf = textpipe.IdfStore()
    for domain_id in domain_ids:
        try:
            record, doc, tokens = load_domain(root, domain_id)
        except (FetchError, EmptyBody, DecodeError, Undetectable,
                UnsupportedLanguage, UnusableDomain) as exc:
            skipped[domain_id] = f"{type(exc).__name__}: {exc}"
            continue
        field_lens = bm25f.field_lengths(tokens)
        tracker.add_document(field_lens)
        # first extraction only feeds document frequencies; df on these
        # candidate objects is discarded
        idf = textpipe.update_idf(idf, textpipe.extract_candidates(tokens, idf))
        entries[record.domain_id] = DomainEntry(
            domain_id=record.domain_id,
            record=record,
            doc=doc,
            tokens=tokens,
            candidates=[],
            field_lens=field_lens,
        )

    if config_text is not None:
        params = bm25f.Bm25fParams.from_config_text(config_text, tracker.avg_field_len)
    else:
        params = bm25f.Bm25fParams.default(tracker.avg_field_len)

    for entry in entries.values():
        entry.candidates = textpipe.extract_candidates(entry.tokens, idf)
        entry.arms = featurize(
            entry.candidates, entry.doc, params, idf,
            doc_field_lens=entry.field_lens,
        )

    return CorpusModel(
        corpus_dir=root,
        params=params,
        idf=idf,
        domains=entries,
        skipped=skipped,
    )
