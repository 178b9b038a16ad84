import json
import logging
import logging.handlers
import sys
import time
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

import colorlog

from config import (
    APP_NAME,
    LOG_BACKUP_COUNT,
    LOG_CONSOLE,
    LOG_DIR,
    LOG_FILE,
    LOG_JSON,
    LOG_LEVEL,
    LOG_MAX_FILE_SIZE,
)

LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "purple",
}


class JSONFormatter(logging.Formatter):
    """One JSON object per record, with `extra_data` under "extra"."""

    def format(self, record: logging.LogRecord) -> str:
        entry: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line_number": record.lineno,
        }
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        if hasattr(record, "extra_data"):
            entry["extra"] = record.extra_data
        return json.dumps(entry, ensure_ascii=False, default=str)


class UnitonLogger:
    """Application logger.

    Console output goes to stderr so that command results on stdout stay
    machine readable. File output is optional and rotates; errors are also
    copied to a separate `<name>_errors.log`.
    """

    def __init__(
        self,
        name: str,
        log_level: str,
        log_dir: str,
        max_file_size: int,
        backup_count: int,
        console_output: bool,
        json_logging: bool,
        file_output: bool,
    ):
        self.name = name
        self.log_level = getattr(logging, log_level.upper(), logging.INFO)
        self.log_dir = Path(log_dir)
        self.max_file_size = max_file_size
        self.backup_count = backup_count
        self.json_logging = json_logging

        self.logger = logging.getLogger(name)
        self.logger.setLevel(self.log_level)
        self.logger.handlers.clear()
        self.logger.propagate = False

        if console_output:
            self._attach(logging.StreamHandler(sys.stderr), self._console_formatter())
        if file_output:
            self.log_dir.mkdir(parents=True, exist_ok=True)
            self._attach(self._rotating(f"{name.lower()}.log"), self._file_formatter())
            self._attach(
                self._rotating(f"{name.lower()}_errors.log"),
                self._file_formatter(),
                level=logging.ERROR,
            )

    def _attach(
        self,
        handler: logging.Handler,
        formatter: logging.Formatter,
        level: Optional[int] = None,
    ) -> None:
        handler.setLevel(self.log_level if level is None else level)
        handler.setFormatter(formatter)
        self.logger.addHandler(handler)

    def _rotating(self, filename: str) -> logging.handlers.RotatingFileHandler:
        return logging.handlers.RotatingFileHandler(
            self.log_dir / filename,
            maxBytes=self.max_file_size,
            backupCount=self.backup_count,
            encoding="utf-8",
        )

    def _console_formatter(self) -> logging.Formatter:
        if self.json_logging:
            return JSONFormatter()
        return colorlog.ColoredFormatter(
            "%(log_color)s%(asctime)s - %(levelname)s%(reset)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
            log_colors=LOG_COLORS,
        )

    def _file_formatter(self) -> logging.Formatter:
        if self.json_logging:
            return JSONFormatter()
        return logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(module)s.%(funcName)s:%(lineno)d - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

    def _log(
        self,
        level: int,
        message: str,
        extra_data: Optional[Dict[str, Any]] = None,
        exc_info: bool = False,
    ) -> None:
        extra = {"extra_data": extra_data} if extra_data else None
        self.logger.log(level, message, exc_info=exc_info, extra=extra)

    def debug(self, message: str, extra_data: Optional[Dict[str, Any]] = None):
        self._log(logging.DEBUG, message, extra_data)

    def info(self, message: str, extra_data: Optional[Dict[str, Any]] = None):
        self._log(logging.INFO, message, extra_data)

    def warning(self, message: str, extra_data: Optional[Dict[str, Any]] = None):
        self._log(logging.WARNING, message, extra_data)

    def error(
        self,
        message: str,
        extra_data: Optional[Dict[str, Any]] = None,
        exc_info: bool = False,
    ):
        self._log(logging.ERROR, message, extra_data, exc_info)

    def log_performance(
        self,
        operation: str,
        duration: float,
        extra_data: Optional[Dict[str, Any]] = None,
    ):
        """Log timing of an exact or numeric computation at DEBUG level."""
        data: Dict[str, Any] = {
            "operation": operation,
            "duration_seconds": round(duration, 3),
            "performance_log": True,
        }
        if extra_data:
            data.update(extra_data)
        self.debug(f"Performance: {operation} completed in {duration:.3f}s", data)

    @contextmanager
    def timed(self, operation: str, **extra: Any) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.log_performance(operation, time.perf_counter() - start, extra or None)


_global_logger: Optional[UnitonLogger] = None


def setup_logger(
    name: str = APP_NAME,
    log_level: str = LOG_LEVEL,
    log_dir: str = LOG_DIR,
    max_file_size: int = LOG_MAX_FILE_SIZE,
    backup_count: int = LOG_BACKUP_COUNT,
    console_output: bool = LOG_CONSOLE,
    json_logging: bool = LOG_JSON,
    file_output: bool = LOG_FILE,
) -> UnitonLogger:
    global _global_logger

    _global_logger = UnitonLogger(
        name=name,
        log_level=log_level,
        log_dir=log_dir,
        max_file_size=max_file_size,
        backup_count=backup_count,
        console_output=console_output,
        json_logging=json_logging,
        file_output=file_output,
    )
    return _global_logger


def get_logger() -> UnitonLogger:
    global _global_logger

    if _global_logger is None:
        _global_logger = setup_logger()
    return _global_logger
