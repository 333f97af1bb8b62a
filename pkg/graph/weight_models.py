"""
权重模型工厂 与 随机实例生成

提供统一的权重模型创建接口，支持模型类型的注册、按规格字符串解析
（如 "binary:0.5"、"uniform-int:0:9"），以及可复现的随机实例生成。
"""

import dataclasses
from typing import Any, Dict, Type

import numpy as np

from core.exceptions import InvalidParameterError
from core.logger import get_logger
from graph.model import RootedWeightedGraph, lex_pairs

logger = get_logger(__name__)


@dataclasses.dataclass(frozen=True)
class BinaryWeightModel:
    """Each weight is 1 with probability p, else 0 (0 < p < 1)."""

    p: float

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise InvalidParameterError(f"binary model needs 0 < p < 1, got {self.p}")

    def draw(self, rng: np.random.Generator, count: int) -> list[int]:
        return (rng.random(count) < self.p).astype(np.int64).tolist()

    def spec(self) -> str:
        return f"binary:{self.p!r}"


@dataclasses.dataclass(frozen=True)
class UniformIntWeightModel:
    """Each weight is uniform on the integers low..high inclusive."""

    low: int
    high: int

    def __post_init__(self):
        if not 0 <= self.low <= self.high:
            raise InvalidParameterError(
                f"uniform-int model needs 0 <= low <= high, got ({self.low}, {self.high})"
            )
        if self.high >= 2**32:
            raise InvalidParameterError("uniform-int upper bound must be < 2^32")

    def draw(self, rng: np.random.Generator, count: int) -> list[int]:
        return rng.integers(self.low, self.high, size=count, endpoint=True, dtype=np.int64).tolist()

    def spec(self) -> str:
        return f"uniform-int:{self.low}:{self.high}"


class WeightModelFactory:
    """
    权重模型工厂类

    职责：
    - 管理已注册的权重模型类型
    - 根据名称和参数创建模型实例
    - 解析 "name:arg1:arg2" 形式的模型规格
    """

    # 已注册的模型类型映射 {model_name: ModelClass}
    _models: Dict[str, Type] = {}
    # 每个模型规格参数的类型转换 {model_name: (converter, ...)}
    _arg_types: Dict[str, tuple] = {}

    @classmethod
    def register_model(cls, name: str, model_class: Type, arg_types: tuple) -> None:
        """
        注册新的权重模型类型

        Args:
            name: 模型名称（如 "binary"）
            model_class: 模型类，构造参数与 arg_types 一一对应
            arg_types: 规格字符串中各参数的转换函数
        """
        if name in cls._models:
            logger.warning(f"权重模型 '{name}' 已存在，将被覆盖", extra={"model": name})
        cls._models[name] = model_class
        cls._arg_types[name] = arg_types
        logger.debug(f"注册权重模型: {name}", extra={"model_class": model_class.__name__})

    @classmethod
    def create_model(cls, name: str, *args: Any):
        """
        创建权重模型实例

        Raises:
            InvalidParameterError: 未注册的模型或非法参数
        """
        if name not in cls._models:
            raise InvalidParameterError(
                f"unknown weight model '{name}', available: {cls.list_models()}"
            )
        return cls._models[name](*args)

    @classmethod
    def parse(cls, spec: str):
        """
        解析模型规格字符串

        Example:
            >>> WeightModelFactory.parse("uniform-int:0:9")
            UniformIntWeightModel(low=0, high=9)
        """
        name, *raw_args = spec.strip().split(":")
        if name not in cls._models:
            raise InvalidParameterError(
                f"unknown weight model '{name}', available: {cls.list_models()}"
            )
        arg_types = cls._arg_types[name]
        if len(raw_args) != len(arg_types):
            raise InvalidParameterError(
                f"weight model '{name}' takes {len(arg_types)} argument(s), got spec {spec!r}"
            )
        try:
            args = [convert(raw) for convert, raw in zip(arg_types, raw_args)]
        except ValueError as exc:
            raise InvalidParameterError(f"bad weight model spec {spec!r}: {exc}") from exc
        return cls.create_model(name, *args)

    @classmethod
    def list_models(cls) -> list:
        return list(cls._models.keys())

    @classmethod
    def is_registered(cls, name: str) -> bool:
        return name in cls._models


WeightModelFactory.register_model("binary", BinaryWeightModel, (float,))
WeightModelFactory.register_model("uniform-int", UniformIntWeightModel, (int, int))


def parse_weight_model(spec: str):
    """Shorthand for `WeightModelFactory.parse`."""
    return WeightModelFactory.parse(spec)


def random_instance(n: int, model, seed: int) -> RootedWeightedGraph:
    """Draws a random instance.

    Weights are drawn independently, one per unordered pair, in lexicographic
    pair order from a PCG64 stream seeded with `seed`, so the result is a pure
    function of (n, model, seed).

    Args:
      n: Player count, >= 1.
      model: A registered weight model instance or a spec string.
      seed: Unsigned 64-bit seed.

    Raises:
      InvalidParameterError: On n < 1, a negative seed or bad model parameters.
    """
    if n < 1:
        raise InvalidParameterError(f"player count must be >= 1, got {n}")
    if not 0 <= seed < 2**64:
        raise InvalidParameterError(f"seed must be an unsigned 64-bit integer, got {seed}")
    if isinstance(model, str):
        model = parse_weight_model(model)

    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = lex_pairs(n)
    weights = model.draw(rng, len(pairs))
    return RootedWeightedGraph.from_pairs(n, dict(zip(pairs, weights)))
