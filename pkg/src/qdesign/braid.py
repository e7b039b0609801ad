"""The diagonal braiding on words and the wires that carry them.

A wire carries a word in the free monoid on ``v_1 .. v_n`` together with the
scalar it has picked up so far.  Crossing two wires multiplies in
``prod_(a in left, b in right) q_ab``; the scalar rides on the strand that
moves left-to-right under ``C`` (the one entering on the left), so that
``C^-1`` strips it off that same strand again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

from .errors import EvaluationError
from .scalars import IDENTITY, CoeffMonomial, QMatrix

Word = Tuple[int, ...]

FORWARD = "forward"
INVERSE = "inverse"


@dataclass(frozen=True)
class WireState:
    word: Word
    coeff: CoeffMonomial = field(default=IDENTITY)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(a) for a in self.word))

    def __str__(self):
        letters = " ".join(f"v{a}" for a in self.word) or "1"
        return letters if self.coeff.is_identity else f"[{self.coeff}] {letters}"


@dataclass(frozen=True)
class BoxMorphism:
    """Single-generator relabelling ``v_src -> v_dst`` (a design rule)."""

    name: str
    src: int
    dst: int


def cross_coeff(left: Word, right: Word, direction: str = FORWARD) -> CoeffMonomial:
    """Scalar of crossing ``left (x) right``.

    Forward: ``prod q_ab``; inverse: ``prod q_ba^-1`` (a in left, b in right).
    """
    if direction == FORWARD:
        return CoeffMonomial(((a, b), 1) for a in left for b in right)
    if direction == INVERSE:
        return CoeffMonomial(((b, a), -1) for a in left for b in right)
    raise ValueError(f"unknown direction {direction!r}")


def braid(left: WireState, right: WireState) -> tuple[WireState, WireState]:
    c = cross_coeff(left.word, right.word, FORWARD)
    return right, WireState(left.word, left.coeff * c)


def braid_inverse(left: WireState, right: WireState) -> tuple[WireState, WireState]:
    # the strand exiting on the left is the one C moved rightwards
    c = cross_coeff(left.word, right.word, INVERSE)
    return WireState(right.word, right.coeff * c), left


def admissible_box(Q: QMatrix, i: int, j: int) -> bool:
    """Rule ``v_i -> v_j`` is compatible with the braiding iff rows and
    columns ``i`` and ``j`` of ``Q`` coincide."""
    return Q.row(i) == Q.row(j) and Q.column(i) == Q.column(j)


def apply_box(box: BoxMorphism, wire: WireState) -> WireState:
    if wire.word != (box.src,):
        raise EvaluationError(
            f"box {box.name}:{box.src}>{box.dst} applied to word {list(wire.word)}"
        )
    return WireState((box.dst,), wire.coeff)


@dataclass(frozen=True)
class YDModule:
    """``V`` as a Yetter-Drinfeld module over ``Z^n``.

    ``delta(v_i) = e_i (x) v_i`` and ``e_j . v_i = q_ji v_i``.
    """

    n: int
    degrees: tuple[tuple[int, ...], ...]
    Q: QMatrix

    def degree(self, i: int) -> tuple[int, ...]:
        return self.degrees[i - 1]

    def action(self, j: int, i: int):
        """Scalar by which ``e_j`` acts on ``v_i``."""
        return self.Q.value(j, i)

    def act(self, g: tuple[int, ...], i: int) -> CoeffMonomial:
        """Symbolic scalar of the group element ``g`` in ``Z^n`` acting on ``v_i``."""
        return CoeffMonomial(((j, i), gj) for j, gj in enumerate(g, start=1))


def yd_module_from_q(Q: QMatrix) -> YDModule:
    degrees = tuple(tuple(int(k == i) for k in range(Q.n)) for i in range(Q.n))
    return YDModule(Q.n, degrees, Q)


def yd_braiding(module: YDModule, left: WireState, right: WireState) -> tuple[WireState, WireState]:
    """``(alpha (x) id)(id (x) flip)(delta (x) id)`` on two wires: each letter
    of the left strand coacts, its degree passes the right strand and acts on
    every letter there."""
    scalar = IDENTITY
    for a in left.word:
        for b in right.word:
            scalar = scalar * module.act(module.degree(a), b)
    # scalars multiply the whole tensor; attach like braid() does
    return right, WireState(left.word, left.coeff * scalar)
