"""
Logging setup

Configures the loguru sinks from the `logging` section of the defaults table.
"""

import sys
from typing import Optional

from loguru import logger

from .config import config


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Install the stderr sink (and an optional rotating file sink)

    Args:
        level: overrides logging.level
        log_file: overrides logging.file
    """
    level = (level or config.get("logging", "level", default="INFO")).upper()
    fmt = config.get("logging", "format", default="{time} | {level} | {message}")
    log_file = log_file or config.get("logging", "file")

    logger.remove()
    logger.add(sys.stderr, level=level, format=fmt)

    if log_file:
        logger.add(
            log_file,
            level=level,
            format=fmt,
            rotation=config.get("logging", "rotation", default="10 MB"),
            retention=config.get("logging", "retention", default="7 days"),
            encoding="utf-8",
        )
