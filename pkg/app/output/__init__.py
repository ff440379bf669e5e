"""Output module."""

from .series_writer import LAMBDA_COLUMN, LOCAL_COLUMN, emit_series, emit_table
from .manifest_writer import write_manifest

__all__ = ["LAMBDA_COLUMN", "LOCAL_COLUMN", "emit_series", "emit_table", "write_manifest"]
