"""End-to-end corpus build over the archived-domain fixture tree.

The fixture corpus has 22 domain directories: 20 usable English pages, one
German page, and one blank parked page. Everything here checks the wiring
between ingest, textpipe, bm25f and featurize at corpus scope; the
per-module arithmetic is covered in the dedicated test files.
"""

from pathlib import Path

import pytest

from parkbandit.bm25f import FIELD_ORDER
from parkbandit.corpus import build_corpus
from parkbandit.errors import FetchError
from parkbandit.features import FEATURE_LABELS

from conftest import CORPUS_DIR

USABLE = 20


def test_usable_domain_count(corpus_model):
    assert len(corpus_model.domains) == USABLE
    ids = corpus_model.domain_ids()
    assert ids == sorted(ids)
    assert len(ids) == USABLE
    assert all(ids)
    assert "cheapflights-hub.com" in ids


def test_skipped_domains_carry_reasons(corpus_model):
    skipped = corpus_model.skipped
    assert set(skipped) == {"berlin-mietwagen.de", "blank-parked.com"}
    # German page fails the language gate, blank page has no visible text
    assert skipped["berlin-mietwagen.de"].startswith("UnsupportedLanguage:")
    assert skipped["blank-parked.com"].startswith("UnusableDomain:")
    for reason in skipped.values():
        name, _, detail = reason.partition(":")
        assert name.isidentifier() and detail.strip()


def test_skipped_domains_not_in_model(corpus_model):
    assert not set(corpus_model.skipped) & set(corpus_model.domains)
    assert corpus_model.idf.doc_count == len(corpus_model.domains)


def test_df_matches_recount_over_entries(corpus_model):
    # document frequency of a phrase is the number of usable domains whose
    # candidate set contains it; recount from scratch
    recount = {}
    for entry in corpus_model.domains.values():
        for phrase in {c.phrase for c in entry.candidates}:
            recount[phrase] = recount.get(phrase, 0) + 1
    assert corpus_model.idf.df == recount


def test_df_bounds(corpus_model):
    n = corpus_model.idf.doc_count
    for phrase, df in corpus_model.idf.df.items():
        assert 1 <= df <= n, phrase


def test_candidates_annotated_with_final_df(corpus_model):
    for entry in corpus_model.domains.values():
        for cand in entry.candidates:
            assert cand.df == corpus_model.idf.df.get(cand.phrase, 0)


def test_avg_field_len_is_corpus_mean(corpus_model):
    entries = list(corpus_model.domains.values())
    for f in FIELD_ORDER:
        total = sum(e.field_lens.get(f, 0) for e in entries)
        expected = total / len(entries) if total > 0 else 1.0
        assert corpus_model.params.avg_field_len[f] == pytest.approx(expected)
        assert corpus_model.params.avg_field_len[f] > 0


def test_feature_columns_peak_at_unity(corpus_model):
    d = len(FEATURE_LABELS)
    for domain_id, arms in corpus_model.arms_by_domain().items():
        assert arms, domain_id
        for arm in arms:
            assert len(arm.features) == d
            assert all(0.0 <= x <= 1.0 for x in arm.features)
        for col in range(d):
            peak = max(arm.features[col] for arm in arms)
            assert peak in (0.0, 1.0), (domain_id, FEATURE_LABELS[col], peak)


def test_arm_phrases_unique_per_domain(corpus_model):
    for domain_id, arms in corpus_model.arms_by_domain().items():
        phrases = [arm.phrase for arm in arms]
        assert len(phrases) == len(set(phrases)), domain_id


def test_arms_by_domain_mirrors_domains(corpus_model):
    by = corpus_model.arms_by_domain()
    assert set(by) == set(corpus_model.domains)
    for domain_id, arms in by.items():
        assert arms is corpus_model.domains[domain_id].arms


def test_build_is_deterministic(corpus_model):
    again = build_corpus(CORPUS_DIR)
    assert again.skipped == corpus_model.skipped
    assert again.idf.df == corpus_model.idf.df
    assert again.idf.doc_count == corpus_model.idf.doc_count
    for domain_id, entry in corpus_model.domains.items():
        other = again.domains[domain_id].arms
        assert [(a.phrase, a.features) for a in entry.arms] == [
            (a.phrase, a.features) for a in other
        ]


def test_missing_corpus_dir_raises():
    with pytest.raises(FetchError):
        build_corpus(Path("tests/fixtures/no-such-corpus"))


def test_config_text_overrides_defaults():
    text = "\n".join(
        ["k1 = 2.0"]
        + [f"weight.{f.name.lower()} = 1.0" for f in FIELD_ORDER]
        + [f"b.{f.name.lower()} = 0.5" for f in FIELD_ORDER]
    )
    model = build_corpus(CORPUS_DIR, config_text=text)
    assert model.params.k1 == 2.0
    assert all(model.params.field_weights[f] == 1.0 for f in FIELD_ORDER)
    assert all(model.params.field_b[f] == 0.5 for f in FIELD_ORDER)
    # same candidate sets either way; only the scores move
    assert model.idf.df == build_corpus(CORPUS_DIR).idf.df
