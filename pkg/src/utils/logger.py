"""Logging setup: colored or JSON records on stderr, optional rotating JSON file"""

import json
import logging
import logging.handlers
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional

import colorlog

_RECORD_ATTRS = set(vars(logging.makeLogRecord({}))) | {'message', 'asctime', 'taskName'}

_PLAIN = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"
_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "bold_red",
}


class JsonFormatter(logging.Formatter):
    """One JSON object per record; structured `extra` fields are kept at top level"""

    def format(self, record):
        payload = {
            'timestamp': datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'where': f"{record.module}.{record.funcName}:{record.lineno}",
        }
        if record.exc_info:
            payload['exception'] = self.formatException(record.exc_info)
        payload.update({k: v for k, v in vars(record).items() if k not in _RECORD_ATTRS})
        return json.dumps(payload, default=str, sort_keys=True)


def _console_formatter(log_format: str) -> logging.Formatter:
    if log_format == "colored":
        return colorlog.ColoredFormatter("%(log_color)s" + _PLAIN, datefmt=_DATEFMT, log_colors=_COLORS)
    if log_format == "json":
        return JsonFormatter()
    return logging.Formatter(_PLAIN, datefmt=_DATEFMT)


def setup_logging(
    log_level: str = "WARNING",
    log_file: Optional[str] = None,
    log_format: str = "colored",  # "colored", "json", "simple"
    max_bytes: int = 5 * 1024 * 1024,
    backup_count: int = 3
):
    """Configure the root logger; stdout is never written to"""
    root = logging.getLogger()
    root.setLevel(getattr(logging, log_level.upper()))
    root.handlers = []

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(_console_formatter(log_format))
    root.addHandler(console)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handler = logging.handlers.RotatingFileHandler(log_file, maxBytes=max_bytes, backupCount=backup_count)
        handler.setFormatter(JsonFormatter())
        root.addHandler(handler)

    logging.getLogger("asyncio").setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance"""
    return logging.getLogger(name)


class ComputationLogger:
    """Logger emitting structured events for operations, crosschecks and suites"""

    def __init__(self, name: str):
        self.logger = get_logger(name)

    def _event(self, level: int, event: str, message: str, **fields: Any):
        self.logger.log(level, message, extra={'event': event, **fields})

    def log_operation(self, operation: str, model: str, size: int, terms: int):
        self._event(
            logging.DEBUG, 'operation', f"{operation} ({model}) -> {terms} terms",
            operation=operation, model=model, input_size=size, terms=terms,
        )

    def log_crosscheck(self, suite: str, cases: int, failures: int):
        """Geometric vs skein comparison outcome"""
        self._event(
            logging.ERROR if failures else logging.INFO, 'crosscheck',
            f"Crosscheck {suite}: {cases} cases, {failures} failures",
            suite=suite, cases=cases, failures=failures,
        )

    def log_suite(self, suite: str, passed: bool, counterexample: Optional[Any] = None):
        self._event(
            logging.INFO if passed else logging.ERROR, 'suite',
            f"Suite {suite}: {'PASS' if passed else 'FAIL'}",
            suite=suite, passed=passed, counterexample=counterexample,
        )

    def log_genericity(self, feature: str, detail: Optional[Dict[str, Any]] = None):
        self._event(
            logging.WARNING, 'genericity', f"Rejected non-generic input: {feature}",
            feature=feature, detail=detail or {},
        )
