"""Pipeline configuration: defaults, flat key=value config files, validation.

Precedence is command line over config file over built-in defaults. The
special wordnet_dir value "bundled" resolves to the lexicon shipped with
the package.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ConfigError
from .nli import DEFAULT_TEMPLATE_PATTERN
from .wordnet import bundled_lexicon_dir

PARSER_MODES = ("conllu-file", "remote")
SCORER_MODES = ("reference", "remote")
EMBEDDER_MODES = ("reference", "remote")

_U64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class PipelineConfig:
    wordnet_dir: Path
    parser: str = "conllu-file"
    parser_endpoint: str | None = None
    scorer: str = "reference"
    scorer_endpoint: str | None = None
    embedder: str = "reference"
    embedder_endpoint: str | None = None
    template: str = DEFAULT_TEMPLATE_PATTERN
    alpha: float = 0.5
    dobj_aliases: tuple[str, ...] = ("dobj", "obj")
    seed: int = 0
    confidence_floor: float = 0.5
    raw_scores: bool = False

    def __post_init__(self):
        if not self.wordnet_dir.is_dir():
            raise ConfigError(f"wordnet_dir {self.wordnet_dir} is not a directory")
        _check_mode("parser", self.parser, PARSER_MODES)
        _check_mode("scorer", self.scorer, SCORER_MODES)
        _check_mode("embedder", self.embedder, EMBEDDER_MODES)
        for name, mode, endpoint in (
            ("parser", self.parser, self.parser_endpoint),
            ("scorer", self.scorer, self.scorer_endpoint),
            ("embedder", self.embedder, self.embedder_endpoint),
        ):
            if mode == "remote" and not endpoint:
                raise ConfigError(f"{name} is remote but {name}_endpoint is not set")
            if mode != "remote" and endpoint:
                raise ConfigError(f"{name}_endpoint is set but {name} is not remote")
        if self.template.count("{}") != 1:
            raise ConfigError(
                f"template must contain exactly one {{}} placeholder: {self.template!r}"
            )
        if self.alpha < 0:
            raise ConfigError(f"alpha must be non-negative, got {self.alpha}")
        if not self.dobj_aliases:
            raise ConfigError("dobj_aliases must name at least one relation")
        if not 0 <= self.seed <= _U64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if not 0.0 <= self.confidence_floor <= 1.0:
            raise ConfigError(
                f"confidence_floor must be in [0, 1], got {self.confidence_floor}"
            )


def _check_mode(name: str, value: str, allowed: tuple[str, ...]) -> None:
    if value not in allowed:
        raise ConfigError(f"{name} must be one of {', '.join(allowed)}; got {value!r}")


def parse_config_file(path: str | Path) -> dict[str, str]:
    """Read a flat key=value config file into raw string values."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    known = {f.name for f in fields(PipelineConfig)}
    values: dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{number}: expected key=value, got {stripped!r}")
        key = key.strip()
        if key not in known:
            raise ConfigError(f"{path}:{number}: unknown config key {key!r}")
        values[key] = value.strip()
    return values


def _coerce_bool(key: str, value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    raise ConfigError(f"config key {key} must be true or false, got {value!r}")


_COERCERS = {
    "wordnet_dir": lambda key, value: value,
    "parser": lambda key, value: value,
    "parser_endpoint": lambda key, value: value,
    "scorer": lambda key, value: value,
    "scorer_endpoint": lambda key, value: value,
    "embedder": lambda key, value: value,
    "embedder_endpoint": lambda key, value: value,
    "template": lambda key, value: value,
    "alpha": lambda key, value: _coerce_number(key, value, float),
    "dobj_aliases": lambda key, value: tuple(
        alias.strip() for alias in value.split(",") if alias.strip()
    ),
    "seed": lambda key, value: _coerce_number(key, value, int),
    "confidence_floor": lambda key, value: _coerce_number(key, value, float),
    "raw_scores": _coerce_bool,
}


def _coerce_number(key: str, value: str, kind):
    try:
        return kind(value)
    except ValueError:
        raise ConfigError(f"config key {key} must be a {kind.__name__}, got {value!r}") from None


def make_config(file_values: dict[str, str] | None = None, **overrides) -> PipelineConfig:
    """Build a validated PipelineConfig from file values and typed overrides.

    Overrides that are None count as absent. wordnet_dir is mandatory once
    both sources are merged.
    """
    merged: dict = {}
    for key, raw in (file_values or {}).items():
        merged[key] = _COERCERS[key](key, raw)
    for key, value in overrides.items():
        if key not in _COERCERS:
            raise ConfigError(f"unknown config key {key!r}")
        if value is None:
            continue
        if key == "dobj_aliases" and isinstance(value, str):
            value = _COERCERS[key](key, value)
        merged[key] = value
    if "wordnet_dir" not in merged:
        raise ConfigError("wordnet_dir is required (use 'bundled' for the packaged lexicon)")
    raw_dir = merged["wordnet_dir"]
    merged["wordnet_dir"] = (
        bundled_lexicon_dir() if str(raw_dir) == "bundled" else Path(raw_dir)
    )
    return PipelineConfig(**merged)
