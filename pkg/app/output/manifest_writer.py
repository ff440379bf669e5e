"""Run manifest output."""

import logging
from pathlib import Path
from typing import Union

from app.exceptions import OutputError
from app.models import RunManifest

logger = logging.getLogger(__name__)


def write_manifest(manifest: RunManifest, path: Union[str, Path]) -> Path:
    """Write the manifest as indented JSON, which the config loader reads back."""
    path = Path(path)
    try:
        if path.parent != Path("."):
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        logger.error(f"Failed to write manifest {path}: {e}")
        raise OutputError(path, e.strerror or str(e))

    logger.info(f"Manifest written to {path}")
    return path
