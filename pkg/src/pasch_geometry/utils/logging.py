import logging
import sys
import json
import time
import os
from datetime import datetime
from pathlib import Path
from logging.handlers import RotatingFileHandler
from pasch_geometry.core.config import LoggingSettings, PaschSettings

LOGGER_NAME = "pasch_geometry"


class ShortPathFilter(logging.Filter):
    """Shorten file paths to module-relative paths for readable logs.

    Converts /home/user/.../pasch_geometry/category/limits.py
    to category.limits
    """

    def __init__(self, base_path: str | Path | None = None):
        """Initialize filter with base path for relative resolution.

        Args:
            base_path: Base path to calculate relative paths from.
                      If None, uses the pasch_geometry package directory.
        """
        super().__init__()

        if base_path is None:
            this_file = Path(__file__).resolve()
            for parent in this_file.parents:
                if parent.name == LOGGER_NAME:
                    base_path = parent
                    break

        self.base_path = Path(base_path) if base_path else None

    def filter(self, record: logging.LogRecord) -> bool:
        """Add short_path attribute to LogRecord; always lets the record through."""
        if self.base_path:
            try:
                rel_path = Path(record.pathname).relative_to(self.base_path)
                record.short_path = str(rel_path.with_suffix('')).replace(os.sep, '.')
            except (ValueError, AttributeError):
                record.short_path = Path(record.pathname).stem
        else:
            record.short_path = Path(record.pathname).stem

        return True


class JsonFormatter(logging.Formatter):
    """JSON formatter for machine-readable file logging."""

    def format(self, record: logging.LogRecord) -> str:
        log_obj = {
            "timestamp": self.formatTime(record, "%Y-%m-%d %H:%M:%S"),
            "logger": record.name,
            "level": record.levelname,
            "message": record.getMessage(),
            "module": getattr(record, "short_path", record.module),
            "line": record.lineno,
        }

        # Set by LogRunContext through `extra=`
        if hasattr(record, "command"):
            log_obj["command"] = record.command

        if record.exc_info:
            log_obj["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_obj)


def setup_logger(settings: PaschSettings | LoggingSettings | None = None) -> logging.Logger:
    """Configure the 'pasch_geometry' logger.

    Console output goes to stderr so that stdout carries only command
    results. A rotating file handler is added when a log file is configured.

    Args:
        settings: Full settings or just the logging section; defaults apply when None

    Returns:
        Configured logger instance.

    Configuration Example:
        logging:
          level: INFO
          output_format: json
          file: logs/pasch_geometry.json
    """
    if isinstance(settings, PaschSettings):
        log_config = settings.logging
    else:
        log_config = settings or LoggingSettings()
    level = getattr(logging, log_config.level.upper(), logging.WARNING)

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.handlers = []
    logger.propagate = False

    path_filter = ShortPathFilter()

    console_formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - [%(short_path)s:%(lineno)d] - %(message)s',
        datefmt='%H:%M:%S'
    )
    ch = logging.StreamHandler(sys.stderr)
    ch.setLevel(logging.DEBUG)
    ch.addFilter(path_filter)
    ch.setFormatter(console_formatter)
    logger.addHandler(ch)

    if not log_config.file:
        return logger

    log_path = Path(log_config.file)
    try:
        log_path.parent.mkdir(parents=True, exist_ok=True)
        fh = RotatingFileHandler(
            log_path,
            maxBytes=int(log_config.file_size * 1024 * 1024),
            backupCount=log_config.backup_count,
            encoding='utf-8'
        )
        if log_config.output_format == 'json':
            fh.setFormatter(JsonFormatter())
        else:
            fh.setFormatter(logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - [%(short_path)s:%(lineno)d] - %(message)s'
            ))
        fh.setLevel(logging.DEBUG)
        fh.addFilter(path_filter)
        logger.addHandler(fh)
    except OSError as e:
        logger.warning(f"Could not create log file | path: {log_path} | error: {e}")

    return logger


def _format_duration(duration: float) -> str:
    if duration < 60:
        return f"{duration:.2f}s"
    if duration < 3600:
        return f"{int(duration // 60)}m {int(duration % 60)}s"
    return f"{int(duration // 3600)}h {int((duration % 3600) // 60)}m {int(duration % 60)}s"


class LogRunContext:
    """Context manager logging the start, end and exit status of a command.

    SystemExit(0) and a clean exit count as success; non-zero exit codes and
    other exceptions are logged as failures.
    """

    def __init__(self, logger: logging.Logger, command_name: str, config_path: str | None = None):
        self.logger = logger
        self.command_name = command_name
        self.config_path = config_path
        self.start_time: float | None = None
        self.extra = {"command": command_name}

    def __enter__(self):
        self.start_time = time.time()
        start_dt = datetime.fromtimestamp(self.start_time).strftime('%Y-%m-%d %H:%M:%S')
        self.logger.info(f"Start-time: {start_dt} | Command: {self.command_name}", extra=self.extra)
        if self.config_path:
            self.logger.info(f"Config: {self.config_path}", extra=self.extra)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        end_time = time.time()
        duration_str = _format_duration(end_time - (self.start_time or end_time))
        end_dt = datetime.fromtimestamp(end_time).strftime('%Y-%m-%d %H:%M:%S')
        self.logger.info(f"End-time: {end_dt} | Runtime: {duration_str}", extra=self.extra)

        if exc_type is None:
            self.logger.info(f"Command completed | command: {self.command_name}", extra=self.extra)
        elif exc_type is SystemExit:
            exit_code = exc_val.code if hasattr(exc_val, 'code') else exc_val
            if exit_code == 0 or exit_code is None:
                self.logger.info(
                    f"Command completed | command: {self.command_name} | exit_code: 0",
                    extra=self.extra,
                )
            else:
                self.logger.error(
                    f"Command failed | command: {self.command_name} | exit_code: {exit_code}",
                    extra=self.extra,
                )
        else:
            self.logger.error(
                f"Command failed | command: {self.command_name} | "
                f"exception: {exc_type.__name__} | message: {exc_val}",
                extra=self.extra,
            )
