"""
Core module - 核心基础设施模块
包含日志、运行上下文、异常等核心功能
"""

from .logger import get_logger, set_log_level, LoggerManager
from .run_context import get_run_id, set_run_id, clear_run_id, generate_run_id, get_or_generate_run_id, run_scope
from .exceptions import (
    MCSTBaseException,
    InstanceParseError,
    InvalidParameterError,
    UsageException,
    OracleBudgetExceeded,
    GenerationCapExceeded,
    EstimatorInvariantError
)

__all__ = [
    'get_logger',
    'set_log_level',
    'LoggerManager',
    'get_run_id',
    'set_run_id',
    'clear_run_id',
    'generate_run_id',
    'get_or_generate_run_id',
    'run_scope',
    'MCSTBaseException',
    'InstanceParseError',
    'InvalidParameterError',
    'UsageException',
    'OracleBudgetExceeded',
    'GenerationCapExceeded',
    'EstimatorInvariantError'
]
