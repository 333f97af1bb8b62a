"""
领域异常 - 错误码与进程退出码

每个子类在类属性上声明 code 与 exit_code，命令行入口据此决定退出码：
2 输入/参数错误，3 精确枚举超预算，4 实例生成超上限，5 估计器不变量被破坏。
"""

from typing import Any, Dict, Optional


class MCSTBaseException(Exception):
    """
    领域异常基类

    Attributes:
        code: 错误码
        message: 错误消息
        details: 额外的错误详情
        exit_code: CLI 进程退出码
    """

    code: str = "MCST_ERROR"
    exit_code: int = 1

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
        exit_code: Optional[int] = None,
    ):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code
        if exit_code is not None:
            self.exit_code = exit_code
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details:
            result["details"] = self.details
        return result


class InstanceParseError(MCSTBaseException):
    """实例文件解析失败，消息以行号开头"""

    code = "INSTANCE_PARSE_ERROR"
    exit_code = 2

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}", details={"line": line_no, "reason": reason})
        self.line_no = line_no
        self.reason = reason


class InvalidParameterError(MCSTBaseException, ValueError):
    """越界玩家、非法权重模型、非法 eps/delta 等"""

    code = "INVALID_PARAMETER"
    exit_code = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details=details)


class UsageException(MCSTBaseException):
    """命令行参数冲突或缺失"""

    code = "USAGE_ERROR"
    exit_code = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details=details)


class OracleBudgetExceeded(MCSTBaseException):
    code = "ORACLE_BUDGET_EXCEEDED"
    exit_code = 3

    def __init__(self, oracle: str, n: int, limit: int):
        super().__init__(
            f"{oracle} oracle supports at most {limit} players, got {n}",
            details={"oracle": oracle, "n": n, "limit": limit},
        )


class GenerationCapExceeded(MCSTBaseException):
    code = "GENERATION_CAP_EXCEEDED"
    exit_code = 4

    def __init__(self, attempts: int, player: int):
        super().__init__(
            f"no instance with player {player} non-null after {attempts} attempts",
            details={"attempts": attempts, "player": player},
        )


class EstimatorInvariantError(MCSTBaseException):
    """边际贡献越界、和不等于 v(N)、树结构非法"""

    code = "ESTIMATOR_INVARIANT"
    exit_code = 5

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details=details)
