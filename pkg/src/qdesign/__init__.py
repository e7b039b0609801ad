"""Layered braiding diagrams over diagonal braided vector spaces, read as
designs, plus a small braiding-based cipher."""

from .braid import BoxMorphism, WireState, YDModule, braid, braid_inverse, cross_coeff, yd_module_from_q
from .checks import CheckReport, check_box_naturality, check_inverse, check_ybe, yd_braiding_equals_diagonal
from .design import ColorWheel, Component, ShapeVocabulary, decode_brightness, decode_color, decode_mirror, decode_size
from .diagram import Diagram, EvalResult, Layer, dense_oracle, evaluate, parse_diagram, run, validate
from .errors import DecodeError, EvaluationError, ParseError, ValidationError
from .scalars import CoeffMonomial, CyclotomicClass, QMatrix, eval_monomial, graded_cyclotomic

__all__ = [
    "BoxMorphism",
    "CheckReport",
    "CoeffMonomial",
    "ColorWheel",
    "Component",
    "CyclotomicClass",
    "DecodeError",
    "Diagram",
    "EvalResult",
    "EvaluationError",
    "Layer",
    "ParseError",
    "QMatrix",
    "ShapeVocabulary",
    "ValidationError",
    "WireState",
    "YDModule",
    "braid",
    "braid_inverse",
    "check_box_naturality",
    "check_inverse",
    "check_ybe",
    "cross_coeff",
    "decode_brightness",
    "decode_color",
    "decode_mirror",
    "decode_size",
    "dense_oracle",
    "eval_monomial",
    "evaluate",
    "graded_cyclotomic",
    "parse_diagram",
    "run",
    "validate",
    "yd_braiding_equals_diagonal",
    "yd_module_from_q",
]
