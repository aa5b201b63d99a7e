"""Trigram naive-Bayes language detector."""

import pytest

from parkbandit.errors import Undetectable
from parkbandit.langid import MIN_ALPHABETIC, detect_language

GERMAN = (
    "Der schnelle braune Fuchs springt ueber den faulen Hund und laeuft "
    "dann durch den Wald zurueck nach Hause, wo er sich ausruht."
)
FRENCH = (
    "Le renard brun rapide saute par dessus le chien paresseux et court "
    "ensuite vers la maison pour se reposer un moment."
)
SPANISH = (
    "El rapido zorro marron salta sobre el perro perezoso y luego corre "
    "hacia la casa para descansar un rato."
)


def test_english_pangram():
    code, confidence = detect_language(
        "the quick brown fox jumps over the lazy dog"
    )
    assert code == "en"
    assert confidence >= 0.9


def test_short_text_undetectable():
    with pytest.raises(Undetectable):
        detect_language("ab cd")


def test_length_gate_counts_alphabetic_only():
    # 19 letters padded with digits and punctuation still fails
    letters = "abcdefghijklmnopqrs"
    assert sum(c.isalpha() for c in letters) == MIN_ALPHABETIC - 1
    with pytest.raises(Undetectable):
        detect_language(letters + " 12345!!! 67890")


def test_german_paragraph():
    code, confidence = detect_language(GERMAN)
    assert code == "de"
    assert confidence >= 0.9


def test_french_paragraph():
    code, confidence = detect_language(FRENCH)
    assert code == "fr"


def test_spanish_paragraph():
    code, confidence = detect_language(SPANISH)
    assert code == "es"


def test_confidence_in_unit_interval():
    for text in (GERMAN, FRENCH, SPANISH, "water bottle cap " * 5):
        _, confidence = detect_language(text)
        assert 0.0 <= confidence <= 1.0


def test_deterministic():
    assert detect_language(GERMAN) == detect_language(GERMAN)
