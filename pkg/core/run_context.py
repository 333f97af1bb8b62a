"""
RunID 上下文 - 一次命令行调用或一次实验对应一个 RunID，用于日志关联

RunID 来自 uuid4，只写进日志，从不参与随机种子推导。
"""

import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

_run_id_var: ContextVar[Optional[str]] = ContextVar("run_id", default=None)


def generate_run_id() -> str:
    return str(uuid.uuid4())


def set_run_id(run_id: str) -> None:
    _run_id_var.set(run_id)


def get_run_id() -> Optional[str]:
    """当前上下文的 RunID，未设置时为 None"""
    return _run_id_var.get()


def clear_run_id() -> None:
    _run_id_var.set(None)


def get_or_generate_run_id() -> str:
    run_id = get_run_id()
    if run_id is None:
        run_id = generate_run_id()
        set_run_id(run_id)
    return run_id


@contextmanager
def run_scope(run_id: Optional[str] = None) -> Iterator[str]:
    """
    在 with 块内绑定 RunID，退出时恢复之前的值

    Example:
        >>> with run_scope() as run_id:
        ...     logger.info("开始实验")
    """
    token = _run_id_var.set(run_id or generate_run_id())
    try:
        yield _run_id_var.get()
    finally:
        _run_id_var.reset(token)
