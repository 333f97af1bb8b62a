"""
日志系统、RunID 上下文与领域异常测试
"""

import json
import logging
from fractions import Fraction

import pytest

from core.exceptions import (
    EstimatorInvariantError,
    GenerationCapExceeded,
    InstanceParseError,
    InvalidParameterError,
    MCSTBaseException,
    OracleBudgetExceeded,
    UsageException,
)
from core.logger import JSONFormatter, TextFormatter, get_logger
from core.run_context import (
    clear_run_id,
    generate_run_id,
    get_or_generate_run_id,
    get_run_id,
    run_scope,
    set_run_id,
)


def _record(msg="采样完成", extra=None, level=logging.INFO):
    record = logging.LogRecord("mcst.test", level, __file__, 42, msg, None, None)
    record.extra_data = extra
    return record


def test_structured_logging(caplog):
    """测试结构化日志（extra 字段挂到 extra_data 上）"""
    logger = get_logger("mcst.test")
    with caplog.at_level(logging.INFO):
        logger.info("蒙特卡洛估计完成", extra={"samples": 1000, "seed": 7})
    record = caplog.records[-1]
    assert record.getMessage() == "蒙特卡洛估计完成"
    assert record.extra_data == {"samples": 1000, "seed": 7}


def test_logging_without_extra(caplog):
    logger = get_logger("mcst.test")
    with caplog.at_level(logging.WARNING):
        logger.warning("plain")
    assert caplog.records[-1].extra_data is None


def test_run_context():
    """测试 RunID 上下文管理"""
    clear_run_id()
    assert get_run_id() is None

    run_id = generate_run_id()
    assert len(run_id) == 36
    set_run_id(run_id)
    assert get_run_id() == run_id
    assert get_or_generate_run_id() == run_id

    clear_run_id()
    fresh = get_or_generate_run_id()
    assert fresh and get_run_id() == fresh
    clear_run_id()


def test_text_formatter_includes_run_id_and_extra():
    set_run_id("0123456789abcdef")
    try:
        line = TextFormatter(use_color=False).format(_record(extra={"n": 5, "M": 200}))
    finally:
        clear_run_id()
    assert "[01234567]" in line
    assert "mcst.test:42 - 采样完成" in line
    assert line.endswith("| n=5 | M=200")


def test_text_formatter_without_run_id():
    clear_run_id()
    line = TextFormatter(use_color=False).format(_record())
    assert "[--------]" in line


def test_json_formatter_serializes_fractions():
    set_run_id("run-json")
    try:
        payload = json.loads(JSONFormatter().format(_record(extra={"phi": Fraction(1, 3)})))
    finally:
        clear_run_id()
    assert payload["run_id"] == "run-json"
    assert payload["level"] == "INFO"
    assert payload["message"] == "采样完成"
    assert payload["extra"] == {"phi": "1/3"}


@pytest.mark.parametrize(
    "exc, code, exit_code",
    [
        (InstanceParseError(3, "duplicate pair (0, 1)"), "INSTANCE_PARSE_ERROR", 2),
        (InvalidParameterError("bad eps"), "INVALID_PARAMETER", 2),
        (UsageException("conflicting flags"), "USAGE_ERROR", 2),
        (OracleBudgetExceeded("subset", 30, 24), "ORACLE_BUDGET_EXCEEDED", 3),
        (GenerationCapExceeded(100000, 1), "GENERATION_CAP_EXCEEDED", 4),
        (EstimatorInvariantError("sum mismatch"), "ESTIMATOR_INVARIANT", 5),
    ],
)
def test_exception_codes(exc, code, exit_code):
    """测试异常错误码与退出码"""
    assert isinstance(exc, MCSTBaseException)
    assert exc.code == code
    assert exc.exit_code == exit_code
    assert exc.to_dict()["code"] == code


def test_instance_parse_error_names_line():
    exc = InstanceParseError(7, "weight 4294967296 >= 2^32")
    assert str(exc) == "line 7: weight 4294967296 >= 2^32"
    assert exc.to_dict()["details"] == {"line": 7, "reason": "weight 4294967296 >= 2^32"}


def test_invalid_parameter_is_value_error():
    with pytest.raises(ValueError):
        raise InvalidParameterError("player 9 out of range 1..3")


def test_run_scope_restores_previous_id():
    set_run_id("outer")
    try:
        with run_scope() as inner:
            assert get_run_id() == inner != "outer"
        with run_scope("fixed") as fixed:
            assert fixed == "fixed"
        assert get_run_id() == "outer"
    finally:
        clear_run_id()
