"""
日志模块 - 命令行工具与库代码共用的结构化日志

功能：
1. text / color / json 三种输出格式，由 LOG_FORMAT 选择
2. 每条记录带上当前 RunID（见 run_context）
3. 控制台日志写 stderr，stdout 只留给实例文件、CSV 与计算结果
4. LOG_FILE_PATH 非空时额外写入轮转日志文件
5. extra 字段中的 Fraction / numpy 标量统一渲染
"""

import json
import logging
import os
import sys
from dataclasses import dataclass
from datetime import datetime
from fractions import Fraction
from logging.handlers import RotatingFileHandler
from typing import Any, Optional

import numpy as np

from .run_context import get_run_id

_NO_RUN_ID = "--------"


def _plain(value: Any) -> Any:
    """把 extra 中的数值转换成可读、可 JSON 序列化的形式"""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class LogConfig:
    """日志配置，全部来自环境变量"""

    level: str = "INFO"
    fmt: str = "text"  # text, json, color
    file_path: Optional[str] = None
    max_bytes: int = 10 * 1024 * 1024
    backup_count: int = 5
    console: bool = True

    def __post_init__(self):
        self.level = os.getenv("LOG_LEVEL", self.level).upper()
        self.fmt = os.getenv("LOG_FORMAT", self.fmt).lower()
        self.file_path = os.getenv("LOG_FILE_PATH", self.file_path) or None
        self.max_bytes = int(os.getenv("LOG_MAX_BYTES", self.max_bytes))
        self.backup_count = int(os.getenv("LOG_BACKUP_COUNT", self.backup_count))
        self.console = os.getenv("LOG_ENABLE_CONSOLE", str(self.console)).lower() == "true"


class TextFormatter(logging.Formatter):
    """单行文本：时间 | 级别 | [RunID] | 模块:行号 - 消息 | k=v ..."""

    LEVEL_COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def __init__(self, use_color: bool = True):
        super().__init__()
        self.use_color = use_color

    def _level(self, name: str) -> str:
        padded = name.ljust(8)
        if not self.use_color:
            return padded
        return f"{self.LEVEL_COLORS.get(name, '')}{padded}{self.RESET}"

    def format(self, record: logging.LogRecord) -> str:
        stamp = datetime.fromtimestamp(record.created).strftime("%Y-%m-%d %H:%M:%S.%f")[:-3]
        run_id = get_run_id()
        parts = [
            stamp,
            self._level(record.levelname),
            f"[{run_id[:8] if run_id else _NO_RUN_ID}]",
            f"{record.name}:{record.lineno} - {record.getMessage()}",
        ]
        extra = getattr(record, "extra_data", None)
        if extra:
            parts.extend(f"{key}={_plain(value)}" for key, value in extra.items())
        line = " | ".join(parts)

        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        if record.stack_info:
            line += "\n" + self.formatStack(record.stack_info)
        return line


class JSONFormatter(logging.Formatter):
    """每条记录一行 JSON，便于归档实验日志"""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "timestamp": datetime.fromtimestamp(record.created).astimezone().isoformat(),
            "level": record.levelname,
            "run_id": get_run_id(),
            "module": record.name,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }
        extra = getattr(record, "extra_data", None)
        if extra:
            payload["extra"] = _plain(extra)
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        if record.stack_info:
            payload["stack_info"] = self.formatStack(record.stack_info)
        return json.dumps(payload, ensure_ascii=False, default=str)


class ContextAdapter(logging.LoggerAdapter):
    """把调用方的 extra 字典整体挂到 LogRecord.extra_data"""

    def process(self, msg, kwargs):
        extra = kwargs.get("extra")
        kwargs["extra"] = {"extra_data": dict(extra) if extra else None}
        return msg, kwargs


class LoggerManager:
    """进程级单例，只在第一次实例化时配置根日志记录器"""

    _instance: Optional["LoggerManager"] = None
    _initialized: bool = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self.config = LogConfig()
        self._install_handlers()
        self._initialized = True

    @property
    def log_level(self) -> str:
        return self.config.level

    def _formatters(self) -> tuple[logging.Formatter, logging.Formatter]:
        """(控制台, 文件)；文件输出永远不带颜色"""
        if self.config.fmt == "json":
            return JSONFormatter(), JSONFormatter()
        return TextFormatter(use_color=self.config.fmt == "color"), TextFormatter(use_color=False)

    def _install_handlers(self):
        root = logging.getLogger()
        root.setLevel(self.config.level)
        root.handlers.clear()
        console_fmt, file_fmt = self._formatters()

        if self.config.console:
            console = logging.StreamHandler(sys.stderr)
            console.setFormatter(console_fmt)
            root.addHandler(console)

        if self.config.file_path:
            directory = os.path.dirname(self.config.file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            rotating = RotatingFileHandler(
                self.config.file_path,
                maxBytes=self.config.max_bytes,
                backupCount=self.config.backup_count,
                encoding="utf-8",
            )
            rotating.setFormatter(file_fmt)
            root.addHandler(rotating)

        for handler in root.handlers:
            handler.setLevel(self.config.level)

    def get_logger(self, name: str) -> ContextAdapter:
        return ContextAdapter(logging.getLogger(name), {})

    def set_level(self, level: str):
        """运行时调整级别（命令行 --log-level）"""
        level = level.upper()
        root = logging.getLogger()
        root.setLevel(level)
        for handler in root.handlers:
            handler.setLevel(level)
        self.config.level = level


_logger_manager = LoggerManager()


def get_logger(name: Optional[str] = None) -> ContextAdapter:
    """
    获取日志记录器

    Args:
        name: 日志记录器名称，None 时取调用者模块名

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("采样完成", extra={"samples": 1000, "seed": 7})
    """
    if name is None:
        frame = sys._getframe(1)
        name = frame.f_globals.get("__name__", "root")
    return _logger_manager.get_logger(name)


def set_log_level(level: str):
    _logger_manager.set_level(level)
