# toricdeg/core/logging.py
import sys

from loguru import logger

_configured = False


def configure_logging(level: str = "INFO") -> None:
    global _configured
    if _configured:
        return  # avoid duplicate sinks

    logger.remove()
    # stderr only: stdout carries --json reports
    logger.add(
        sys.stderr,
        level=level,
        format="{time:YYYY-MM-DD HH:mm:ss} {level} {name} - {message}",
    )
    _configured = True
