"""
命令行异常处理 - 把子命令中抛出的异常统一映射为退出码

功能：
1. 领域异常 -> 异常类上声明的退出码（2/3/4/5）
2. 其他异常 -> 退出码 1，错误码 INTERNAL_ERROR，堆栈只写日志
3. stderr 上统一一行：error[CODE]: message
"""

import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, TextIO

from core.exceptions import MCSTBaseException
from core.logger import get_logger
from core.run_context import get_run_id

logger = get_logger(__name__)

UNEXPECTED_EXIT_CODE = 1


@dataclass(frozen=True)
class ErrorReport:
    """一次失败运行的错误摘要"""

    code: str
    message: str
    exit_code: int = UNEXPECTED_EXIT_CODE
    details: Dict[str, Any] = field(default_factory=dict)
    run_id: Optional[str] = None

    @classmethod
    def from_domain(cls, exc: MCSTBaseException) -> "ErrorReport":
        return cls(exc.code, exc.message, exc.exit_code, dict(exc.details), get_run_id())

    @classmethod
    def from_unexpected(cls, exc: Exception) -> "ErrorReport":
        name = exc.__class__.__name__
        return cls("INTERNAL_ERROR", f"{name}: {exc}", UNEXPECTED_EXIT_CODE, {"error_type": name}, get_run_id())

    def render(self) -> str:
        return f"error[{self.code}]: {self.message}"


def _emit(report: ErrorReport, stream: Optional[TextIO]) -> int:
    print(report.render(), file=stream or sys.stderr)
    return report.exit_code


def handle_domain_exception(exc: MCSTBaseException, stream: Optional[TextIO] = None) -> int:
    report = ErrorReport.from_domain(exc)
    logger.warning(
        f"领域异常: {exc.message}",
        extra={"exception_type": exc.__class__.__name__, "code": report.code, "exit_code": report.exit_code},
    )
    return _emit(report, stream)


def handle_unexpected_exception(exc: Exception, stream: Optional[TextIO] = None) -> int:
    """未预期的异常：堆栈进日志，stderr 只给一行摘要"""
    logger.error(f"未预期的异常: {exc}", extra={"exception_type": exc.__class__.__name__}, exc_info=True)
    return _emit(ErrorReport.from_unexpected(exc), stream)


def run_with_error_handling(command: Callable[[], int], stream: Optional[TextIO] = None) -> int:
    """
    执行一个子命令并统一处理异常

    Args:
        command: 无参可调用对象，返回退出码
        stream: 错误输出流，默认 sys.stderr

    Returns:
        int: 进程退出码
    """
    try:
        return command()
    except MCSTBaseException as exc:
        return handle_domain_exception(exc, stream)
    except Exception as exc:  # noqa: BLE001
        return handle_unexpected_exception(exc, stream)
