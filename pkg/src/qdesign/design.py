"""Reading evaluated diagrams as designs.

Generators name shapes through a :class:`ShapeVocabulary`; the scalar a word
picks up while braiding is then read as a colour (a root of unity on a colour
wheel), a size factor, per-component brightness, or as the marker that turns
a left-hand component into its mirrored right-hand twin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _text
from .braid import WireState, Word
from .diagram.evaluate import EvalResult
from .errors import EvaluationError, ParseError
from .scalars import CyclotomicClass, QMatrix, ScalarValue, eval_monomial


@dataclass(frozen=True)
class ShapeVocabulary:
    entries: dict[int, str]
    offset: int = 0

    def __post_init__(self):
        for i, name in self.entries.items():
            if not name.strip():
                raise ValueError(f"shape {i} has an empty name")

    def __getitem__(self, index: int) -> str:
        try:
            return self.entries[index]
        except KeyError:
            raise KeyError(f"generator {index} has no shape in the vocabulary") from None

    def __contains__(self, index: int) -> bool:
        return index in self.entries

    def index_of(self, name: str) -> int:
        for i, n in self.entries.items():
            if n == name:
                return i
        raise KeyError(f"no shape named {name!r}")

    def serialize(self) -> str:
        return serialize_vocabulary(self)


def render_word(vocab: ShapeVocabulary, word: Word) -> list[str]:
    return [vocab[a] for a in word]


@dataclass(frozen=True)
class ColorWheel:
    order: int
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.order:
            raise ValueError(f"colour wheel of order {self.order} needs {self.order} names")


# w^1 .. w^7 in order
RAINBOW = ColorWheel(7, ("Red", "orange", "yellow", "green", "cyan", "blue", "purple"))


def decode_color(k: CyclotomicClass | int, wheel: ColorWheel = RAINBOW) -> str:
    """Colour named by ``w^k``; ``w^0 = w^order`` is the last colour."""
    if isinstance(k, CyclotomicClass):
        if k.order != wheel.order:
            raise ValueError(f"class of order {k.order} on a wheel of order {wheel.order}")
        k = k.k
    idx = k % wheel.order or wheel.order
    return wheel.names[idx - 1]


def decode_size(s: ScalarValue) -> Fraction | float:
    """Scale factor relative to the undecorated design."""
    if isinstance(s, (CyclotomicClass, complex)):
        raise TypeError("size needs a real scalar")
    if s <= 0:
        raise ValueError(f"size scalar must be positive, got {s}")
    return s


def decode_brightness(wires: Sequence[WireState], Q: QMatrix, vocab: ShapeVocabulary) -> list[tuple[str, ScalarValue]]:
    """``(shape, brightness units)`` per output wire; an undecorated wire is 1 unit."""
    out = []
    for pos, w in enumerate(wires, start=1):
        if len(w.word) != 1:
            raise EvaluationError(f"wire {pos} carries {len(w.word)} letters; brightness needs one")
        out.append((vocab[w.word[0]], eval_monomial(w.coeff, Q)))
    return out


RIGHT = "right"
LEFT = "left"


@dataclass(frozen=True)
class Component:
    generator: int
    shape: str
    side: str | None = None

    @property
    def label(self) -> str:
        if self.side is None:
            return self.shape
        words = self.shape.split(" ", 1)
        base = words[1] if len(words) == 2 and words[0] in (LEFT, RIGHT) else self.shape
        return f"{self.side} {base}"


def decode_mirror(
    result: EvalResult, mirrored: Iterable[int], vocab: ShapeVocabulary, Q: QMatrix
) -> list[Component]:
    """Annotate the first occurrence of each mirrored generator as the
    right-hand copy and later ones as left-hand.

    Every right-hand copy must be paid for by one power of a scaling scalar:
    the exponents on pairs with ``q_ab != 1`` must add up to the number of
    right-hand annotations.
    """
    mirrored = set(mirrored)
    word = tuple(a for w in result.wires for a in w.word)
    seen: set[int] = set()
    out = []
    for a in word:
        if a in mirrored:
            side = LEFT if a in seen else RIGHT
            seen.add(a)
        else:
            side = None
        out.append(Component(a, vocab[a], side))
    one = Q.one()
    scaling = sum(e for (a, b), e in result.global_coeff.items() if Q.value(a, b) != one)
    rights = sum(c.side == RIGHT for c in out)
    if scaling != rights:
        raise EvaluationError(f"{rights} mirrored components but scaling exponent {scaling}")
    return out


# -- text format --------------------------------------------------------------


def serialize_vocabulary(v: ShapeVocabulary) -> str:
    out = ["vocab v1"]
    out.extend(f"shape {i} {v.entries[i]}" for i in sorted(v.entries))
    if v.offset:
        out.append(f"offset {v.offset}")
    return "\n".join(out) + "\n"


def parse_vocabulary(text: str) -> ShapeVocabulary:
    items = list(_text.lines(text))
    _text.expect_header(items, "vocab v1")
    entries: dict[int, str] = {}
    offset = 0
    for lineno, toks in items[1:]:
        key, args = toks[0], toks[1:]
        if key.text == "shape":
            if len(args) < 2:
                raise ParseError("usage: shape <index> <name...>", lineno, key.column)
            i = _text.parse_int(args[0], "shape index")
            if i in entries:
                raise ParseError(f"duplicate shape {i}", lineno, args[0].column)
            entries[i] = " ".join(t.text for t in args[1:])
        elif key.text == "offset":
            if len(args) != 1:
                raise ParseError("usage: offset <r>", lineno, key.column)
            offset = _text.parse_int(args[0], "offset")
            if offset < 0:
                raise ParseError("offset must be >= 0", lineno, args[0].column)
        else:
            raise ParseError(f"unknown directive {key.text!r}", lineno, key.column)
    return ShapeVocabulary(entries, offset)
