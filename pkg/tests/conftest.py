from pathlib import Path

import pytest

from parkbandit.corpus import build_corpus

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_DIR = FIXTURES / "corpus"
MESSY_PAGE = FIXTURES / "html" / "discount-watches.net" / "page.html"


@pytest.fixture(scope="session")
def corpus_model():
    return build_corpus(CORPUS_DIR)
