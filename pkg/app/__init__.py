"""Spin-bath decoherence simulator."""

__version__ = "1.0.0"
