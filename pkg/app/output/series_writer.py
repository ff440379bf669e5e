"""CSV writers for time series and per-run tables."""

import csv
import logging
from pathlib import Path
from typing import Iterable, Sequence, Union

from app.exceptions import OutputError
from app.models import TimeSeries
from app.utils.validators import format_float

logger = logging.getLogger(__name__)

LOCAL_COLUMN = "log10_abs_r"
LAMBDA_COLUMN = "log10_lambda"


def _format(value) -> str:
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def emit_table(path: Union[str, Path], header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    """Write a header line and one line per row; floats keep 17 significant digits."""
    path = Path(path)
    try:
        if path.parent != Path("."):
            path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow([_format(value) for value in row])
                count += 1
    except OSError as e:
        logger.error(f"Failed to write {path}: {e}")
        raise OutputError(path, e.strerror or str(e))

    logger.info(f"Wrote {count} rows to {path}")
    return path


def emit_series(series: TimeSeries, path: Union[str, Path], column: str = LAMBDA_COLUMN) -> Path:
    """Write (t, value) rows in ascending t."""
    return emit_table(path, ("t", column), series.rows())
