"""Entry point: load the configured models and serve.

A model that fails to load ends the process with status 1 before the
socket opens, so orchestrators see the failure immediately.
"""

from __future__ import annotations

import sys

from .app import create_app
from .config import SidecarConfig
from .errors import SidecarError
from .models import load_embedder, load_nli, load_parser


def main() -> int:
    try:
        config = SidecarConfig.from_env()
        nli = load_nli(config.nli_model_id, config.batch_size)
        embedder = load_embedder(config.embed_model_id, config.batch_size)
        parser = load_parser(config.parser_model_id)
    except SidecarError as exc:
        print(f"zberta-sidecar: {exc}", file=sys.stderr)
        return 1

    import uvicorn

    app = create_app(
        nli,
        embedder,
        parser,
        model_ids={
            "nli": config.nli_model_id,
            "embed": config.embed_model_id,
            "parser": config.parser_model_id,
        },
    )
    uvicorn.run(app, host="127.0.0.1", port=config.port)
    return 0


if __name__ == "__main__":
    sys.exit(main())
