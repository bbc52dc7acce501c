# infrastructure/monitoring/logging/structured_logger.py
import json
import logging
import sys
from datetime import datetime
from enum import Enum


class LogLevel(Enum):
    """Log levels"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class StructuredLogger:
    """JSON-per-line logger on stderr; stdout stays reserved for command output"""

    def __init__(self, name: str, level: LogLevel = None):
        self.logger = logging.getLogger(name)
        if level is not None:
            self.logger.setLevel(getattr(logging, level.value))

        if not self.logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter('%(message)s'))
            self.logger.addHandler(handler)
            self.logger.propagate = False

    def log(self, level: LogLevel, message: str, **kwargs):
        """Log structured message"""
        numeric = getattr(logging, level.value)
        if not self.logger.isEnabledFor(numeric):
            return
        log_data = {
            "timestamp": datetime.now().isoformat(),
            "level": level.value,
            "logger": self.logger.name,
            "message": message,
            **kwargs
        }
        self.logger.log(numeric, json.dumps(log_data, ensure_ascii=False, default=str))

    def debug(self, message: str, **kwargs):
        self.log(LogLevel.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        self.log(LogLevel.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        self.log(LogLevel.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs):
        self.log(LogLevel.ERROR, message, **kwargs)

    def log_performance(self, operation: str, duration_ms: float, **kwargs):
        """Log performance metrics"""
        self.info(
            f"Performance: {operation}",
            operation=operation,
            duration_ms=round(duration_ms, 3),
            **kwargs
        )
