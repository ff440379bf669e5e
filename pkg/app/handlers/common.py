"""Helpers shared by the subcommand handlers."""

import logging
import time
from pathlib import Path
from typing import Dict, Optional

from app.config.driver import DriverConfig
from app.models import RunManifest
from app.output import write_manifest

logger = logging.getLogger(__name__)


def output_path(config: DriverConfig, subcommand: str) -> Path:
    """--out, or <subcommand>.csv in the working directory."""
    return Path(config.out) if config.out else Path(f"{subcommand}.csv")


def manifest_path(config: DriverConfig, subcommand: str) -> Path:
    """--manifest, or the data file name with a .manifest.json suffix."""
    if config.manifest:
        return Path(config.manifest)
    return output_path(config, subcommand).with_suffix(".manifest.json")


def finish(config: DriverConfig, subcommand: str, started: float, summary: Optional[Dict[str, float]] = None) -> Path:
    """Write the one manifest of this invocation."""
    manifest = RunManifest(
        subcommand=subcommand,
        parameters=config.parameters(),
        seed=config.seed,
        wall_time_seconds=time.perf_counter() - started,
        summary=summary or {},
    )
    return write_manifest(manifest, manifest_path(config, subcommand))


def print_summary(title: str, summary: Dict[str, float]) -> None:
    print(title)
    for key, value in summary.items():
        print(f"  {key}: {value:.6g}")
