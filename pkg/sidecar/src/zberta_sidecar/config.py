"""Process configuration, sourced from the environment.

Model identifiers are passed to the loaders untouched, so they may be
hub names or local directories. The defaults point at public checkpoints
that approximate the models the pipeline was designed around.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SidecarConfigError

DEFAULT_NLI_MODEL = "roberta-large-mnli"
DEFAULT_EMBED_MODEL = "sentence-transformers/all-MiniLM-L6-v2"
DEFAULT_PARSER_MODEL = "en_core_web_sm"
DEFAULT_PORT = 8100
DEFAULT_BATCH_SIZE = 16


@dataclass(frozen=True)
class SidecarConfig:
    nli_model_id: str = DEFAULT_NLI_MODEL
    embed_model_id: str = DEFAULT_EMBED_MODEL
    parser_model_id: str = DEFAULT_PARSER_MODEL
    port: int = DEFAULT_PORT
    batch_size: int = DEFAULT_BATCH_SIZE

    def __post_init__(self):
        for name in ("nli_model_id", "embed_model_id", "parser_model_id"):
            value = getattr(self, name)
            if not isinstance(value, str) or not value.strip():
                raise SidecarConfigError(f"{name} must be a non-empty string")
        if self.batch_size < 1:
            raise SidecarConfigError(f"batch_size must be at least 1, got {self.batch_size}")
        if not 0 < self.port < 65536:
            raise SidecarConfigError(f"port must be in [1, 65535], got {self.port}")

    @classmethod
    def from_env(cls, environ=os.environ) -> "SidecarConfig":
        """Read NLI_MODEL, EMBED_MODEL, PARSER_MODEL, and PORT; defaults otherwise."""
        kwargs = {}
        for env_name, field in (
            ("NLI_MODEL", "nli_model_id"),
            ("EMBED_MODEL", "embed_model_id"),
            ("PARSER_MODEL", "parser_model_id"),
        ):
            if environ.get(env_name):
                kwargs[field] = environ[env_name]
        if environ.get("PORT"):
            try:
                kwargs["port"] = int(environ["PORT"])
            except ValueError as exc:
                raise SidecarConfigError(
                    f"PORT must be an integer, got {environ['PORT']!r}"
                ) from exc
        return cls(**kwargs)
