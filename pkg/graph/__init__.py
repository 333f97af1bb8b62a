"""Graph core: instances, serialization, random generation and threshold decomposition."""

from graph.model import ROOT, Coalition, RootedWeightedGraph, lex_pairs
from graph.instance_io import (
    parse_instance,
    read_instance,
    render_instance,
    serialize_instance,
    write_instance,
)
from graph.weight_models import (
    BinaryWeightModel,
    UniformIntWeightModel,
    WeightModelFactory,
    parse_weight_model,
    random_instance,
)
from graph.decomposition import ThresholdDecomposition, level_graph, threshold_decompose

__all__ = [
    "ROOT",
    "Coalition",
    "RootedWeightedGraph",
    "lex_pairs",
    "parse_instance",
    "read_instance",
    "render_instance",
    "serialize_instance",
    "write_instance",
    "BinaryWeightModel",
    "UniformIntWeightModel",
    "WeightModelFactory",
    "parse_weight_model",
    "random_instance",
    "ThresholdDecomposition",
    "level_graph",
    "threshold_decompose",
]
