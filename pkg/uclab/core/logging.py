"""
Logging configuration.
A single console handler on stderr; reports are printed on stdout.
"""

import logging.config
from typing import Optional

from uclab.core.config import get_settings


LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"
DATE_FORMAT = "%H:%M:%S"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure the root logger.

    Args:
        level: Log level name; defaults to the LOG_LEVEL setting
    """
    level = (level or get_settings().LOG_LEVEL).upper()
    logging.config.dictConfig({
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "generic": {"format": LOG_FORMAT, "datefmt": DATE_FORMAT}
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "stream": "ext://sys.stderr",
                "level": "NOTSET",
                "formatter": "generic"
            }
        },
        "root": {"level": level, "handlers": ["console"]},
        "loggers": {
            "uclab": {"level": level, "handlers": [], "propagate": True}
        }
    })
