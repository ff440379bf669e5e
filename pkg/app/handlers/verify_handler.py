"""`verify`: product engine against the brute-force oracles."""

import logging
import time

from app.config.driver import DriverConfig
from app.services import verification_service
from .common import finish

logger = logging.getLogger(__name__)


def verify_command_handler(config: DriverConfig) -> int:
    """Exit status 0 iff every check stays within --tolerance."""
    started = time.perf_counter()
    report = verification_service.run_checks(config.max_n, config.trials, config.tolerance, seed=config.seed)

    for check in report.checks:
        print(check.describe())
    finish(config, "verify", started, report.summary())

    if report.passed:
        print(f"All checks passed (N<={config.max_n}, {config.trials} trials, tolerance {config.tolerance:g})")
        return 0

    failed = [check.name for check in report.checks if not check.passed]
    logger.error(f"Verification failed: {', '.join(failed)}")
    return 1
