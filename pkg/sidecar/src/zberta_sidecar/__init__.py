"""Model sidecar for the zberta intent pipeline.

Serves the three wire protocols the pipeline can consume remotely: a
dependency parser, an NLI scorer, and a sentence embedder, each backed
by a real model chosen through configuration.
"""

from .app import create_app
from .config import SidecarConfig
from .errors import ModelLoadError, SidecarConfigError, SidecarError
from .models import load_embedder, load_nli, load_parser

__all__ = [
    "create_app",
    "SidecarConfig",
    "SidecarError",
    "SidecarConfigError",
    "ModelLoadError",
    "load_nli",
    "load_embedder",
    "load_parser",
]
