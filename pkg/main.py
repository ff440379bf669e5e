#!/usr/bin/env python3
"""
Main entry point for the spin-bath decoherence simulator.
"""

import logging
import sys
from pathlib import Path

# Add app to Python path
sys.path.insert(0, str(Path(__file__).parent))

from app.cli import run_cli
from app.config import settings


def setup_logging():
    """Configure logging for the application."""
    handlers = [logging.StreamHandler(sys.stderr)]

    if settings.file_logging_enabled:
        # Create logs directory if it doesn't exist
        log_path = Path(settings.log_file).parent
        log_path.mkdir(parents=True, exist_ok=True)
        handlers.insert(0, logging.FileHandler(settings.log_file, encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )

    # Set specific log levels for noisy libraries
    logging.getLogger("concurrent.futures").setLevel(logging.WARNING)


def main() -> int:
    """Main function."""
    setup_logging()
    logger = logging.getLogger(__name__)

    try:
        return run_cli(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Received interrupt, stopping")
        return 1
    except Exception as e:
        logger.error(f"Fatal error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
