"""Validation and symbolic evaluation of layered diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from ..braid import BoxMorphism, WireState, admissible_box, apply_box, braid, braid_inverse
from ..errors import EvaluationError, ValidationError
from ..scalars import IDENTITY, CoeffMonomial, QMatrix, ScalarValue, eval_monomial
from .ir import Box, Cross, CrossInv, Diagram, Id, Mul


@dataclass(frozen=True)
class Issue:
    message: str
    layer: int | None = None

    def __str__(self):
        return self.message if self.layer is None else f"layer {self.layer}: {self.message}"


def validate(d: Diagram, Q: QMatrix, boxes: Iterable[BoxMorphism] | None = None) -> list[Issue]:
    """All problems with ``d`` under ``Q``; empty means evaluable.

    ``boxes`` is the set of declared rules; when omitted every box in the
    diagram counts as declared and only admissibility is checked.
    """
    issues = []
    declared = None if boxes is None else set(boxes)
    for pos, a in enumerate(d.inputs, start=1):
        if not 1 <= a <= Q.n:
            issues.append(Issue(f"input {pos} uses generator {a} outside 1..{Q.n}"))
    width = d.width
    for k, layer in enumerate(d.layers, start=1):
        if layer.arity != width:
            issues.append(Issue(f"gates consume {layer.arity} wires but {width} enter", k))
        width = layer.outputs
        for g in layer.gates:
            if not isinstance(g, Box):
                continue
            bad_index = False
            for a in (g.src, g.dst):
                if not 1 <= a <= Q.n:
                    issues.append(Issue(f"box {g} uses generator {a} outside 1..{Q.n}", k))
                    bad_index = True
            if bad_index:
                continue
            if declared is not None and g.morphism not in declared:
                issues.append(Issue(f"box {g} is not a declared rule", k))
            if not admissible_box(Q, g.src, g.dst):
                issues.append(Issue(f"box {g} inadmissible: rows/columns {g.src} and {g.dst} of Q differ", k))
    return issues


@dataclass(frozen=True)
class EvalResult:
    wires: tuple[WireState, ...]
    global_coeff: CoeffMonomial
    trace: tuple[tuple[WireState, ...], ...]

    @property
    def words(self) -> list[tuple[int, ...]]:
        return [w.word for w in self.wires]

    def value(self, Q: QMatrix, numeric: bool = False) -> ScalarValue:
        return eval_monomial(self.global_coeff, Q, numeric)


def _apply_layer(wires: list[WireState], layer, k: int) -> list[WireState]:
    out: list[WireState] = []
    pos = 0
    for g in layer.gates:
        args = wires[pos : pos + g.arity]
        if len(args) != g.arity:
            raise EvaluationError(f"layer {k}: ran out of wires")
        pos += g.arity
        if isinstance(g, Id):
            out.append(args[0])
        elif isinstance(g, Cross):
            out.extend(braid(*args))
        elif isinstance(g, CrossInv):
            out.extend(braid_inverse(*args))
        elif isinstance(g, Mul):
            left, right = args
            out.append(WireState(left.word + right.word, left.coeff * right.coeff))
        elif isinstance(g, Box):
            try:
                out.append(apply_box(g.morphism, args[0]))
            except EvaluationError as exc:
                raise EvaluationError(f"layer {k}: {exc}") from None
        else:  # pragma: no cover
            raise TypeError(f"unknown gate {g!r}")
    if pos != len(wires):
        raise EvaluationError(f"layer {k}: {len(wires) - pos} wires left unconsumed")
    return out


def run(d: Diagram) -> EvalResult:
    """Evaluate without validating against a matrix.

    The result is purely symbolic, so no ``Q`` is needed; arity mistakes and
    misplaced boxes still raise :class:`EvaluationError`.
    """
    wires = [WireState((a,)) for a in d.inputs]
    trace = [tuple(wires)]
    for k, layer in enumerate(d.layers, start=1):
        wires = _apply_layer(wires, layer, k)
        trace.append(tuple(wires))
    total = reduce(lambda acc, w: acc * w.coeff, wires, IDENTITY)
    return EvalResult(tuple(wires), total, tuple(trace))


def evaluate(d: Diagram, Q: QMatrix) -> EvalResult:
    issues = validate(d, Q)
    if issues:
        raise ValidationError(issues)
    return run(d)


def state_at(d: Diagram, Q: QMatrix, layer_index: int) -> tuple[WireState, ...]:
    """Wires after ``layer_index`` layers (0 gives the inputs)."""
    if not 0 <= layer_index <= len(d.layers):
        raise IndexError(f"layer index {layer_index} outside 0..{len(d.layers)}")
    return evaluate(d, Q).trace[layer_index]
