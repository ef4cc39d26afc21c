"""Exception hierarchy shared across the pipeline."""


class ZbertaError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(ZbertaError):
    """Invalid or incomplete configuration (missing lexicon, bad flags)."""


class ConlluParseError(ZbertaError):
    """Malformed CoNLL-U input."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class TreeValidationError(ZbertaError):
    """A parse violates the single-root / acyclicity / reference invariants."""


class TransportError(ZbertaError):
    """Network failure, timeout, or non-200 response from a remote backend."""


class ProtocolError(ZbertaError):
    """A remote backend answered with a malformed or invariant-breaking body."""


class InputError(ZbertaError):
    """Caller supplied an argument outside an operation's precondition."""


class ClassificationError(ZbertaError):
    """No candidate could be assigned a usable score."""


class ExtractionError(ZbertaError):
    """No content token available for key-word extraction."""


class GlossLookupError(ZbertaError):
    """Word has no noun or verb sense in the gloss store."""


class SamplingError(ZbertaError):
    """Negative sampling exhausted its rejection budget."""


class CorpusError(ZbertaError):
    """Too many records of a corpus failed to transform."""
