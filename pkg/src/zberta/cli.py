"""Command line interface: discover, classify, transform-nli, evaluate, serve.

Exit codes: 0 success, 1 when any record failed during processing (or the
corpus transform aborted), 2 for unusable input or configuration.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from .config import make_config, parse_config_file
from .dataset import CONTRADICTION, ENTAILMENT, NEUTRAL
from .errors import ConfigError, CorpusError, ZbertaError
from .evaluation import build_report, evaluate_discovery, evaluate_known
from .pipeline import Pipeline

log = logging.getLogger("zberta")


def _config_options(f):
    options = [
        click.option("--config", "config_path", default=None, help="Flat key=value config file."),
        click.option("--wordnet-dir", default=None, help="Lexicon directory ('bundled' for the packaged one)."),
        click.option("--parser", type=click.Choice(["conllu-file", "remote"]), default=None),
        click.option("--parser-endpoint", default=None),
        click.option("--scorer", type=click.Choice(["reference", "remote"]), default=None),
        click.option("--scorer-endpoint", default=None),
        click.option("--embedder", type=click.Choice(["reference", "remote"]), default=None),
        click.option("--embedder-endpoint", default=None),
        click.option("--template", default=None, help="Hypothesis template with one {} placeholder."),
        click.option("--alpha", type=float, default=None, help="Variance weight of the threshold."),
        click.option("--seed", type=int, default=None),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _build_config(config_path, **overrides):
    try:
        file_values = parse_config_file(config_path) if config_path else None
        return make_config(file_values, **overrides)
    except ConfigError as exc:
        raise click.UsageError(str(exc)) from exc


def _build_pipeline(config):
    try:
        return Pipeline(config)
    except ConfigError as exc:
        raise click.UsageError(str(exc)) from exc


def _read_jsonl(path: str, required: dict[str, type]) -> list[dict]:
    """Load JSONL records, checking required fields are present and typed."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}") from exc
    records = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"{path}:{number}: invalid JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise click.UsageError(f"{path}:{number}: expected a JSON object")
        for field, kind in required.items():
            value = record.get(field)
            if not isinstance(value, kind) or (kind is str and not value.strip()):
                raise click.UsageError(
                    f"{path}:{number}: field {field!r} must be a non-empty {kind.__name__}"
                )
        records.append(record)
    if not records:
        raise click.UsageError(f"{path} contains no records")
    return records


def _write_jsonl(path: str, records: list[dict]) -> None:
    text = "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)
    Path(path).write_text(text, encoding="utf-8")


@click.group()
def main():
    """Intent discovery from dependency parses and zero-shot NLI ranking."""
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@_config_options
@click.option("--input", "input_path", required=True, help="JSONL with 'utterance' and optional 'conllu'.")
@click.option("--out", "out_path", required=True, help="Prediction JSONL output path.")
def discover(config_path, input_path, out_path, **overrides):
    """Discover and rank intents for each utterance."""
    pipeline = _build_pipeline(_build_config(config_path, **overrides))
    records = _read_jsonl(input_path, {"utterance": str})
    predictions = []
    failures = 0
    for record in records:
        try:
            prediction = pipeline.discover(record["utterance"], record.get("conllu"))
        except ZbertaError as exc:
            failures += 1
            log.error("record %r failed: %s", record["utterance"], exc)
            continue
        predictions.append(prediction.to_record())
    _write_jsonl(out_path, predictions)
    if failures:
        log.error("%d of %d records failed", failures, len(records))
        sys.exit(1)


@main.command()
@_config_options
@click.option("--labels", "labels_path", required=True, help="Label set, one per line.")
@click.option("--input", "input_path", required=True, help="JSONL with 'utterance'.")
@click.option("--out", "out_path", required=True, help="Prediction JSONL output path.")
def classify(config_path, labels_path, input_path, out_path, **overrides):
    """Rank a fixed label set for each utterance (no candidate generation)."""
    pipeline = _build_pipeline(_build_config(config_path, **overrides))
    try:
        label_lines = Path(labels_path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise click.UsageError(f"cannot read {labels_path}: {exc}") from exc
    labels = [line.strip() for line in label_lines if line.strip()]
    if not labels:
        raise click.UsageError(f"label file {labels_path} is empty")
    records = _read_jsonl(input_path, {"utterance": str})
    predictions = []
    failures = 0
    for record in records:
        try:
            prediction = pipeline.classify_known(record["utterance"], labels)
        except ZbertaError as exc:
            failures += 1
            log.error("record %r failed: %s", record["utterance"], exc)
            continue
        predictions.append(prediction.to_record())
    _write_jsonl(out_path, predictions)
    if failures:
        log.error("%d of %d records failed", failures, len(records))
        sys.exit(1)


@main.command("transform-nli")
@_config_options
@click.option("--input", "input_path", required=True, help="JSONL with 'text' and 'label'.")
@click.option("--out", "out_path", required=True, help="NLI corpus JSONL output path.")
@click.option("--neg-ratio", type=int, default=1, show_default=True, help="Negatives per utterance.")
@click.option("--neg-label", type=click.Choice([CONTRADICTION, NEUTRAL]), default=CONTRADICTION, show_default=True)
def transform_nli(config_path, input_path, out_path, neg_ratio, neg_label, **overrides):
    """Rewrite an intent corpus as entailed/non-entailed NLI pairs."""
    if neg_ratio < 0:
        raise click.UsageError("--neg-ratio must be non-negative")
    pipeline = _build_pipeline(_build_config(config_path, **overrides))
    records = _read_jsonl(input_path, {"text": str, "label": str})
    pairs = [(record["text"], record["label"]) for record in records]
    try:
        examples = pipeline.transform(pairs, neg_ratio, neg_label)
    except CorpusError as exc:
        log.error("%s", exc)
        sys.exit(1)
    _write_jsonl(out_path, [example.to_record() for example in examples])
    entailed = sum(1 for example in examples if example.label == ENTAILMENT)
    click.echo(
        f"entailed={entailed} negatives={len(examples) - entailed} "
        f"skipped={len(pairs) - entailed}"
    )
    if entailed < len(pairs):
        sys.exit(1)


@main.command()
@_config_options
@click.option("--gold", "gold_path", required=True, help="JSONL with 'utterance' and 'gold'.")
@click.option("--input", "input_path", required=True, help="Prediction JSONL from discover/classify.")
@click.option("--mode", type=click.Choice(["discovery", "known"]), default="discovery", show_default=True)
@click.option("--repeats", type=int, default=1, show_default=True, help="Evaluation repetitions for the mu spread.")
@click.option("--allow-partial", is_flag=True, help="Evaluate the join intersection instead of failing.")
@click.option("--out", "out_path", default=None, help="Report JSON path (stdout when omitted).")
def evaluate(config_path, gold_path, input_path, mode, repeats, allow_partial, out_path, **overrides):
    """Score predictions against gold intents and write the report."""
    if repeats < 1:
        raise click.UsageError("--repeats must be at least 1")
    gold_records = _read_jsonl(gold_path, {"utterance": str, "gold": str})
    pred_records = _read_jsonl(input_path, {"utterance": str, "chosen": str})
    gold_map: dict[str, str] = {}
    for record in gold_records:
        if record["utterance"] in gold_map:
            raise click.UsageError(f"duplicate utterance in {gold_path}: {record['utterance']!r}")
        gold_map[record["utterance"]] = record["gold"]
    pred_map: dict[str, str] = {}
    for record in pred_records:
        if record["utterance"] in pred_map:
            raise click.UsageError(f"duplicate utterance in {input_path}: {record['utterance']!r}")
        pred_map[record["utterance"]] = record["chosen"]
    mismatched = False
    for utterance in gold_map:
        if utterance not in pred_map:
            mismatched = True
            log.error("utterance only in gold file: %r", utterance)
    for utterance in pred_map:
        if utterance not in gold_map:
            mismatched = True
            log.error("utterance only in prediction file: %r", utterance)
    if mismatched and not allow_partial:
        log.error("gold and prediction files do not join; use --allow-partial to proceed")
        sys.exit(1)
    pairs = [
        (gold, pred_map[utterance])
        for utterance, gold in gold_map.items()
        if utterance in pred_map
    ]
    if not pairs:
        raise click.UsageError("no joinable records between gold and prediction files")
    if mode == "known":
        report = {"mode": "known", "n": len(pairs), "accuracy": evaluate_known(pairs)}
    else:
        alpha = overrides.get("alpha")
        pipeline = _build_pipeline(_build_config(config_path, **overrides))
        effective_alpha = pipeline.config.alpha if alpha is None else alpha
        mus = []
        first = None
        for _ in range(repeats):
            result = evaluate_discovery(pairs, pipeline.embedder, effective_alpha)
            mus.append(result[0].mu)
            if first is None:
                first = result
        report = build_report(first[0], first[1], mus)
    text = json.dumps(report, ensure_ascii=False, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@main.command()
@_config_options
@click.option("--port", type=int, default=8000, show_default=True)
def serve(config_path, port, **overrides):
    """Run the intent discovery HTTP service."""
    from .service import create_app, dependency_status

    import uvicorn

    pipeline = _build_pipeline(_build_config(config_path, **overrides))
    for name, info in dependency_status(pipeline).items():
        if info["status"] != "ok":
            raise click.UsageError(
                f"{name} endpoint {info.get('endpoint')} failed its health check: {info['status']}"
            )
    uvicorn.run(create_app(pipeline), host="127.0.0.1", port=port)


if __name__ == "__main__":
    main()
