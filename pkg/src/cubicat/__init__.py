"""Exact tensor evaluation of cubic graph diagrams and their 3-edge-colorings."""

from .dsl import format, parse
from .engine import (
    OperatorTable,
    State,
    Variant,
    apply,
    chi,
    color_sum,
    count,
    evaluate,
    linear_combination,
    local_map,
    operator_equal,
)
from .slices import SliceForm, to_slices
from .term import (
    EMPTY,
    GeneratorKind,
    Term,
    adjoint,
    compose,
    generator,
    identity,
    is_planar,
    tensor,
)

__all__ = [
    "EMPTY", "GeneratorKind", "OperatorTable", "SliceForm", "State", "Term", "Variant",
    "adjoint", "apply", "chi", "color_sum", "compose", "count", "evaluate", "format",
    "generator", "identity", "is_planar", "linear_combination", "local_map",
    "operator_equal", "parse", "tensor", "to_slices",
]
