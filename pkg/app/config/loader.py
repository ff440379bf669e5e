"""Config-file loading."""

import logging
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from app.exceptions import UsageError

logger = logging.getLogger(__name__)


def normalize_keys(values: Dict[str, Any]) -> Dict[str, Any]:
    """Map `t-max` style keys to `t_max`."""
    return {str(key).strip().replace("-", "_"): value for key, value in values.items()}


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a flat `key: value` config file.

    A run manifest is also accepted; its `parameters` mapping is used, so a
    manifest reruns the invocation that wrote it.
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise UsageError(f"Cannot read config file {path}: {e.strerror or e}", key="config")
    except yaml.YAMLError as e:
        raise UsageError(f"Config file {path} is not valid YAML: {e}", key="config")

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise UsageError(f"Config file {path} must contain a key: value mapping", key="config")

    if isinstance(data.get("parameters"), dict) and "subcommand" in data:
        logger.info(f"Loading parameters from manifest {path}")
        data = data["parameters"]

    return normalize_keys(data)
