import logging
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional
import sys

from ssa_codes.config import get_settings


class ColoredFormatter(logging.Formatter):
    """Colour the level name on terminals"""

    COLORS = {
        'DEBUG': '\033[36m',      # Cyan
        'INFO': '\033[32m',       # Green
        'WARNING': '\033[33m',    # Yellow
        'ERROR': '\033[31m',      # Red
        'CRITICAL': '\033[35m',   # Magenta
        'RESET': '\033[0m'
    }

    def format(self, record):
        record = logging.makeLogRecord(record.__dict__)
        log_color = self.COLORS.get(record.levelname, self.COLORS['RESET'])
        record.levelname = f"{log_color}{record.levelname}{self.COLORS['RESET']}"
        return super().format(record)


class StructuredLogger:
    """
    Logger for the coding library and the CLI.

    Console output goes to stderr so that command output on stdout stays
    byte-identical between runs. File handlers are only attached when
    ``log_to_file`` is enabled in the settings.
    """

    def __init__(self, name: str = "ssa_codes"):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        settings = get_settings()
        self.logs_dir = Path(settings.logs_dir)
        self.file_logging = settings.log_to_file

        self._setup_handlers(settings.log_level)

    def _setup_handlers(self, level: str):
        """Attach console and (optional) file handlers"""

        self.logger.handlers.clear()

        # 1. Console Handler (coloured, stderr)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self._level(level))
        console_formatter = ColoredFormatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        console_handler.setFormatter(console_formatter)
        self.logger.addHandler(console_handler)
        self.console_handler = console_handler

        if not self.file_logging:
            return

        (self.logs_dir / "errors").mkdir(parents=True, exist_ok=True)

        # 2. General Log File
        general_handler = logging.FileHandler(self.logs_dir / "ssa.log", encoding='utf-8')
        general_handler.setLevel(logging.DEBUG)
        general_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        general_handler.setFormatter(general_formatter)
        self.logger.addHandler(general_handler)

        # 3. Error Log File
        error_handler = logging.FileHandler(
            self.logs_dir / "errors" / f"errors_{datetime.now().strftime('%Y%m%d')}.log",
            encoding='utf-8'
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(general_formatter)
        self.logger.addHandler(error_handler)

    @staticmethod
    def _level(level: str) -> int:
        return getattr(logging, str(level).upper(), logging.INFO)

    def set_level(self, level: str):
        """Change the console verbosity (used by ``--log-level``)"""
        self.console_handler.setLevel(self._level(level))

    def log_run_summary(
        self,
        command: str,
        params: Dict[str, Any],
        duration: float,
        success: bool,
        metadata: Optional[Dict[str, Any]] = None
    ):
        """
        Record one CLI run for later inspection

        Args:
            command: sub-command name (encode, check, table...)
            params: parsed flags that determine the output
            duration: wall time in seconds
            success: whether the command exited with status 0
            metadata: extra values worth keeping (codeword count, replacements...)
        """
        self.logger.debug(
            f"📊 {command} finished in {duration:.3f}s - success={success}"
        )
        if not self.file_logging:
            return

        timestamp = datetime.now()
        summary = {
            "timestamp": timestamp.isoformat(),
            "command": command,
            "params": params,
            "duration_seconds": round(duration, 4),
            "success": success,
            "metadata": metadata or {}
        }

        runs_dir = self.logs_dir / "runs"
        runs_dir.mkdir(parents=True, exist_ok=True)
        runs_file = runs_dir / f"runs_{timestamp.strftime('%Y%m%d')}.jsonl"
        with open(runs_file, 'a', encoding='utf-8') as f:
            f.write(json.dumps(summary, default=str) + "\n")

    def debug(self, message: str):
        """Log debug message"""
        self.logger.debug(f"🔍 {message}")

    def info(self, message: str):
        """Log info message"""
        self.logger.info(f"ℹ️  {message}")

    def warning(self, message: str):
        """Log warning message"""
        self.logger.warning(f"⚠️  {message}")

    def error(self, message: str):
        """Log error message"""
        self.logger.error(f"❌ {message}")

    def critical(self, message: str):
        """Log critical message"""
        self.logger.critical(f"🚨 {message}")


ssa_logger = StructuredLogger("ssa_codes")
