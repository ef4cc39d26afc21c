"""Intent discovery for out-of-scope utterances.

Candidate action-object intents are mined from dependency parses, ranked
by zero-shot NLI entailment, and evaluated with embedding cosine metrics;
a corpus transformer rewrites intent datasets into NLI form.
"""

from .config import PipelineConfig, make_config, parse_config_file
from .conllu import ParsedUtterance, Token, read_conllu, write_conllu, write_conllu_file
from .dataset import (
    NLIExample,
    SamplerState,
    SplitMix64,
    build_entailed,
    build_negatives,
    extract_key_word,
    transform_corpus,
)
from .errors import (
    ClassificationError,
    ConfigError,
    ConlluParseError,
    CorpusError,
    ExtractionError,
    GlossLookupError,
    InputError,
    ProtocolError,
    SamplingError,
    TransportError,
    TreeValidationError,
    ZbertaError,
)
from .evaluation import (
    ClassStats,
    EmbeddingVector,
    ReferenceEmbedder,
    ThresholdReport,
    cosine,
    evaluate_discovery,
    evaluate_known,
    threshold,
)
from .intents import (
    CandidateIntent,
    extract_arc_candidates,
    extract_degree_candidates,
    generate_intents,
)
from .nli import (
    EntailmentJudgment,
    HypothesisTemplate,
    IntentPrediction,
    ReferenceScorer,
    build_hypotheses,
    classify,
    classify_known,
    score_entailment,
)
from .pipeline import Pipeline
from .wordnet import GlossStore, LemmaLexicon, bundled_lexicon_dir

__version__ = "0.1.0"

__all__ = [
    "CandidateIntent",
    "ClassStats",
    "ClassificationError",
    "ConfigError",
    "ConlluParseError",
    "CorpusError",
    "EmbeddingVector",
    "EntailmentJudgment",
    "ExtractionError",
    "GlossLookupError",
    "GlossStore",
    "HypothesisTemplate",
    "InputError",
    "IntentPrediction",
    "LemmaLexicon",
    "NLIExample",
    "ParsedUtterance",
    "Pipeline",
    "PipelineConfig",
    "ProtocolError",
    "ReferenceEmbedder",
    "ReferenceScorer",
    "SamplerState",
    "SamplingError",
    "SplitMix64",
    "ThresholdReport",
    "Token",
    "TransportError",
    "TreeValidationError",
    "ZbertaError",
    "bundled_lexicon_dir",
    "build_entailed",
    "build_hypotheses",
    "build_negatives",
    "classify",
    "classify_known",
    "cosine",
    "evaluate_discovery",
    "evaluate_known",
    "extract_arc_candidates",
    "extract_degree_candidates",
    "extract_key_word",
    "generate_intents",
    "make_config",
    "parse_config_file",
    "read_conllu",
    "score_entailment",
    "threshold",
    "transform_corpus",
    "write_conllu",
    "write_conllu_file",
]
