import pytest

from zberta.evaluation import ReferenceEmbedder
from zberta.nli import ReferenceScorer
from zberta.wordnet import GlossStore, LemmaLexicon, bundled_lexicon_dir


@pytest.fixture(scope="session")
def wordnet_dir():
    return bundled_lexicon_dir()


@pytest.fixture(scope="session")
def lexicon(wordnet_dir):
    return LemmaLexicon.from_dir(wordnet_dir)


@pytest.fixture(scope="session")
def glosses(wordnet_dir):
    return GlossStore.from_dir(wordnet_dir)


@pytest.fixture(scope="session")
def embedder(lexicon):
    return ReferenceEmbedder(lexicon)


@pytest.fixture(scope="session")
def scorer(lexicon):
    return ReferenceScorer(lexicon)
