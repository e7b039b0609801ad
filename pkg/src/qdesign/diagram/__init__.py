from .dsl import parse_diagram, serialize_diagram
from .evaluate import EvalResult, Issue, evaluate, run, state_at, validate
from .ir import Box, Cross, CrossInv, Diagram, Gate, Id, Layer, Mul
from .oracle import OracleResult, TruncationError, dense_operator, dense_oracle

__all__ = [
    "Box",
    "Cross",
    "CrossInv",
    "Diagram",
    "EvalResult",
    "Gate",
    "Id",
    "Issue",
    "Layer",
    "Mul",
    "OracleResult",
    "TruncationError",
    "dense_operator",
    "dense_oracle",
    "evaluate",
    "parse_diagram",
    "run",
    "serialize_diagram",
    "state_at",
    "validate",
]
