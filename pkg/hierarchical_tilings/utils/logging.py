### hierarchical_tilings/utils/logging.py

"""Logging utilities for hierarchical-tilings."""

import logging
import logging.handlers
import sys
from ..config import LoggingConfig


class HierarchyFormatter(logging.Formatter):
    """Formatter that tags records with the running command and hierarchy level."""

    def format(self, record):
        if hasattr(record, 'level_tag'):
            record.msg = f"[level {record.level_tag}] {record.msg}"

        if hasattr(record, 'command'):
            record.msg = f"[{record.command}] {record.msg}"

        return super().format(record)


def setup_logging(config: LoggingConfig, logger_name: str = "hierarchical_tilings") -> logging.Logger:
    """Setup logging with the given configuration."""
    logger = logging.getLogger(logger_name)
    logger.setLevel(getattr(logging, config.level.upper()))

    # Clear existing handlers
    logger.handlers.clear()

    formatter = HierarchyFormatter(config.format)

    # Logs go to stderr so reports on stdout stay clean
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if config.file_path:
        file_handler = logging.handlers.RotatingFileHandler(
            config.file_path,
            maxBytes=config.max_file_size,
            backupCount=config.backup_count
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(f"hierarchical_tilings.{name}")
