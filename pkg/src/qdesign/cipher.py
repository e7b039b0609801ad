"""Sending one vocabulary word as a list of braiding scalars.

Sender and receiver share a braiding matrix ``Q`` and a merging diagram.
The secret word ``D_s`` lies in a window ``p .. p+m-1``; inside it the
generators are renumbered ``1 .. m`` with ``q~_ij = q_(p+i-1, p+j-1)``.
Reading line ``line`` of the diagram after ``layer`` layers gives a word
``w`` over the window.  For each ``i`` the sender transmits

    c_i = b_i * coefficient of C^-1(v_i (x) w) = b_i * prod_(j in w) q~_ji^-1

with ``b_i = 1`` exactly at the secret position and random ``b_i != 1``
elsewhere.  The receiver multiplies back ``prod_(j in w) q~_ji`` (the
coefficient of ``C(w (x) v_i)``), which returns ``b_i`` exactly; the unique
``1`` reveals ``s``.  All arithmetic is exact rational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Sequence

from . import _text, fixtures
from .braid import FORWARD, INVERSE, Word, cross_coeff
from .design import ShapeVocabulary
from .diagram.dsl import parse_diagram, serialize_diagram
from .diagram.evaluate import run, validate
from .diagram.ir import Diagram, Id, Layer, Mul
from .errors import DecodeError, ParseError
from .scalars import RATIONAL, QMatrix, eval_monomial, parse_qmatrix, serialize_qmatrix

RANDOM_LOW = 2
RANDOM_HIGH = 2**31


@dataclass(frozen=True)
class PrivateKey:
    qmatrix: QMatrix
    diagram: Diagram
    layer: int
    line: int = 1
    offset: int = 1
    window: int = 10
    vocab_offset: int = 0
    send_offset: bool = True

    def __post_init__(self):
        Q = self.qmatrix
        if Q.mode != RATIONAL:
            raise ValueError("cipher keys need a rational braiding matrix")
        if any(x <= 0 for row in Q.entries for x in row):
            raise ValueError("cipher key entries must be positive")
        if self.window < 1 or self.offset < 1 or self.offset + self.window - 1 > Q.n:
            raise ValueError(f"window [{self.offset}, {self.offset + self.window - 1}] outside 1..{Q.n}")
        if self.vocab_offset < 0:
            raise ValueError("vocabulary offset must be >= 0")
        if self.diagram.width != self.window:
            raise ValueError(f"diagram has {self.diagram.width} inputs, window is {self.window}")
        issues = validate(self.diagram, self.window_matrix)
        if issues:
            raise ValueError("key diagram invalid: " + "; ".join(map(str, issues)))
        if not 0 <= self.layer <= len(self.diagram.layers):
            raise ValueError(f"layer {self.layer} outside 0..{len(self.diagram.layers)}")
        wires = self._trace[self.layer]
        if not 1 <= self.line <= len(wires):
            raise ValueError(f"line {self.line} outside 1..{len(wires)} at layer {self.layer}")

    @cached_property
    def window_matrix(self) -> QMatrix:
        return self.qmatrix.window(self.offset, self.window)

    @cached_property
    def _trace(self):
        return run(self.diagram).trace

    @cached_property
    def word(self) -> Word:
        return window_word(self)


@dataclass(frozen=True)
class Cryptogram:
    offset: int | None
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if any(c <= 0 for c in self.coefficients):
            raise ValueError("cryptogram coefficients must be positive")

    @property
    def m(self) -> int:
        return len(self.coefficients)


def merge_chain(m: int) -> Diagram:
    """Diagram that multiplies ``v_1 .. v_m`` together left to right."""
    layers = [Layer((Mul(),) + (Id(),) * (m - 2 - k)) for k in range(m - 1)]
    return Diagram(f"chain{m}", tuple(range(1, m + 1)), tuple(layers))


def _random_multiplier(rng: random.Random) -> Fraction:
    while True:
        x = Fraction(rng.randrange(RANDOM_LOW, RANDOM_HIGH), rng.randrange(RANDOM_LOW, RANDOM_HIGH))
        if x != 1:
            return x


@lru_cache(maxsize=None)
def _default_diagram(m: int) -> Diagram:
    return fixtures.load_diagram("figure6") if m == 10 else merge_chain(m)


def keygen(n: int, m: int = 10, seed=None, density: float = 1.0, diagram: Diagram | None = None) -> PrivateKey:
    """Random key over an ``n``-word vocabulary with an ``m``-word window.

    Off-window entries are drawn too; ``density`` is the chance that an entry
    is a random ratio rather than 1.  The default diagram is the bundled
    ``figure6`` when ``m == 10`` and a plain merge chain otherwise.
    """
    if not n >= m >= 2:
        raise ValueError(f"need n >= m >= 2, got n={n}, m={m}")
    rng = random.Random(seed)
    rows = [
        [_random_multiplier(rng) if density >= 1 or rng.random() < density else Fraction(1) for _ in range(n)]
        for _ in range(n)
    ]
    if diagram is None:
        diagram = _default_diagram(m)
    return PrivateKey(QMatrix.rational(rows), diagram, layer=len(diagram.layers), line=1, offset=1, window=m)


def window_word(key: PrivateKey) -> Word:
    """Word on line ``key.line`` after ``key.layer`` layers, in window-local indices."""
    return key._trace[key.layer][key.line - 1].word


def encode(
    key: PrivateKey,
    s: int,
    seed=None,
    multipliers: Sequence | None = None,
) -> Cryptogram:
    """Encrypt vocabulary index ``s`` (window ``offset .. offset+window-1``).

    ``multipliers`` fixes the decoys ``a_i`` (the entry at the secret
    position is ignored); otherwise they are drawn from ``seed``.
    """
    m = key.window
    local = s - key.offset + 1
    if not 1 <= local <= m:
        raise ValueError(f"index {s} outside window [{key.offset}, {key.offset + m - 1}]")
    if multipliers is not None and len(multipliers) != m:
        raise ValueError(f"need {m} multipliers")
    rng = random.Random(seed)
    Qw, w = key.window_matrix, key.word
    out = []
    for i in range(1, m + 1):
        if i == local:
            b = Fraction(1)
        elif multipliers is not None:
            b = Fraction(multipliers[i - 1])
            if b <= 0 or b == 1:
                raise ValueError(f"multiplier a_{i} must be positive and != 1")
        else:
            b = _random_multiplier(rng)
        out.append(b * eval_monomial(cross_coeff((i,), w, INVERSE), Qw))
    return Cryptogram(key.offset if key.send_offset else None, tuple(out))


def unmask(key: PrivateKey, cg: Cryptogram) -> list[Fraction]:
    """The receiver's ``d_i``; equal to the sender's ``b_i``."""
    if cg.m != key.window:
        raise DecodeError(f"cryptogram has {cg.m} values, key window is {key.window}")
    offset = key.offset if cg.offset is None else cg.offset
    Qw = key.window_matrix if offset == key.offset else key.qmatrix.window(offset, key.window)
    w = key.word
    return [c * eval_monomial(cross_coeff(w, (i,), FORWARD), Qw) for i, c in enumerate(cg.coefficients, start=1)]


def decode(key: PrivateKey, cg: Cryptogram) -> int:
    d = unmask(key, cg)
    hits = [i for i, x in enumerate(d, start=1) if x == 1]
    if not hits:
        raise DecodeError("no index decodes to 1")
    if len(hits) > 1:
        raise DecodeError(f"several indices decode to 1: {hits}")
    offset = key.offset if cg.offset is None else cg.offset
    return offset + hits[0] - 1


def word_index(key: PrivateKey, vocab: ShapeVocabulary, name: str) -> int:
    """Matrix index of a plaintext word, undoing the vocabulary offsets."""
    return vocab.index_of(name) - key.vocab_offset - vocab.offset


def plaintext(key: PrivateKey, vocab: ShapeVocabulary, s: int) -> str:
    return vocab[s + key.vocab_offset + vocab.offset]


# -- text formats -------------------------------------------------------------


def serialize_key(key: PrivateKey) -> str:
    out = ["key v1", "qmatrix inline"]
    out += serialize_qmatrix(key.qmatrix).splitlines()
    out += ["end", "diagram inline"]
    out += serialize_diagram(key.diagram).splitlines()
    out += [
        "end",
        f"layer {key.layer}",
        f"line {key.line}",
        f"offset {key.offset}",
        f"window {key.window}",
        f"vocaboffset {key.vocab_offset}",
        f"send-offset {'yes' if key.send_offset else 'no'}",
    ]
    return "\n".join(out) + "\n"


def _block(items, start: int):
    """Collect token lines after ``items[start]`` up to ``end``."""
    body = []
    j = start + 1
    while j < len(items):
        lineno, toks = items[j]
        if len(toks) == 1 and toks[0].text == "end":
            return body, j
        body.append((lineno, toks))
        j += 1
    raise ParseError("inline block without 'end'", items[start][0], 1)


def _parse_inline(body, parser):
    text = "".join(" ".join(t.text for t in toks) + "\n" for _, toks in body)
    try:
        return parser(text)
    except ParseError as exc:
        if exc.line is not None and 1 <= exc.line <= len(body):
            raise ParseError(exc.message, body[exc.line - 1][0]) from None
        raise ParseError(exc.message, body[0][0] if body else None) from None


_INT_FIELDS = {"layer": "layer", "line": "line", "offset": "offset", "window": "window", "vocaboffset": "vocab_offset"}


def parse_key(text: str, base_dir: Path | None = None) -> PrivateKey:
    items = list(_text.lines(text))
    _text.expect_header(items, "key v1")
    fields: dict = {}
    j = 1
    while j < len(items):
        lineno, toks = items[j]
        key, args = toks[0], toks[1:]
        if key.text in ("qmatrix", "diagram"):
            if len(args) != 1:
                raise ParseError(f"usage: {key.text} inline|<path>", lineno, key.column)
            parser = parse_qmatrix if key.text == "qmatrix" else parse_diagram
            if args[0].text == "inline":
                body, j = _block(items, j)
                fields[key.text] = _parse_inline(body, parser)
            else:
                try:
                    src = fixtures.read(args[0].text, key.text, base_dir)
                except FileNotFoundError as exc:
                    raise ParseError(str(exc), lineno, args[0].column) from None
                fields[key.text] = parser(src)
        elif key.text in _INT_FIELDS:
            if len(args) != 1:
                raise ParseError(f"usage: {key.text} <int>", lineno, key.column)
            fields[_INT_FIELDS[key.text]] = _text.parse_int(args[0])
        elif key.text == "send-offset":
            if len(args) != 1 or args[0].text not in ("yes", "no"):
                raise ParseError("usage: send-offset yes|no", lineno, key.column)
            fields["send_offset"] = args[0].text == "yes"
        else:
            raise ParseError(f"unknown directive {key.text!r}", lineno, key.column)
        j += 1
    for required in ("qmatrix", "diagram", "layer"):
        if required not in fields:
            raise ParseError(f"key needs '{required}'")
    Q, d = fields.pop("qmatrix"), fields.pop("diagram")
    fields.setdefault("window", d.width)
    try:
        return PrivateKey(Q, d, **fields)
    except ValueError as exc:
        raise ParseError(f"invalid key: {exc}") from None


def serialize_cryptogram(cg: Cryptogram) -> str:
    out = ["ct v1"]
    if cg.offset is not None:
        out.append(f"p {cg.offset}")
    out.append(f"m {cg.m}")
    out += [f"c {i} {_text.format_rational(c)}" for i, c in enumerate(cg.coefficients, start=1)]
    return "\n".join(out) + "\n"


def parse_cryptogram(text: str) -> Cryptogram:
    items = list(_text.lines(text))
    _text.expect_header(items, "ct v1")
    p = m = None
    cs: dict[int, Fraction] = {}
    for lineno, toks in items[1:]:
        key, args = toks[0], toks[1:]
        if key.text in ("p", "m"):
            if len(args) != 1:
                raise ParseError(f"usage: {key.text} <int>", lineno, key.column)
            v = _text.parse_int(args[0])
            if v < 1:
                raise ParseError(f"{key.text} must be positive", lineno, args[0].column)
            if key.text == "p":
                p = v
            else:
                m = v
        elif key.text == "c":
            if len(args) != 2:
                raise ParseError("usage: c <i> <p/q>", lineno, key.column)
            i = _text.parse_int(args[0], "index")
            if i in cs:
                raise ParseError(f"duplicate c {i}", lineno, args[0].column)
            c = _text.parse_rational(args[1])
            if c <= 0:
                raise ParseError("coefficients must be positive", lineno, args[1].column)
            cs[i] = c
        else:
            raise ParseError(f"unknown directive {key.text!r}", lineno, key.column)
    if m is None:
        raise ParseError("cryptogram needs 'm'")
    if sorted(cs) != list(range(1, m + 1)):
        raise ParseError(f"need exactly c 1 .. c {m}")
    return Cryptogram(p, tuple(cs[i] for i in range(1, m + 1)))
