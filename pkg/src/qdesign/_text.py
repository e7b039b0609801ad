"""Line-oriented tokenizing shared by the ``*.qm``, ``*.bd``, ``*.vocab``, key and
cryptogram formats."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def lines(text: str):
    """Yield ``(lineno, tokens)`` for every non-blank line, comments removed."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [
            Token(m.group(), lineno, m.start() + 1) for m in re.finditer(r"\S+", body)
        ]
        if toks:
            yield lineno, toks


def canonical(text: str) -> str:
    """Comments and blank lines dropped, runs of whitespace collapsed."""
    return "".join(" ".join(t.text for t in toks) + "\n" for _, toks in lines(text))


def expect_header(items, header: str):
    if not items:
        raise ParseError(f"missing header {header!r}", 1, 1)
    lineno, toks = items[0]
    if " ".join(t.text for t in toks) != header:
        raise ParseError(f"expected header {header!r}", lineno, toks[0].column)


def parse_int(tok: Token, what: str = "integer") -> int:
    try:
        return int(tok.text)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok.text!r}", tok.line, tok.column) from None


def parse_rational(tok: Token) -> Fraction:
    if not _RATIONAL.match(tok.text):
        raise ParseError(f"expected rational p/q, got {tok.text!r}", tok.line, tok.column)
    try:
        return Fraction(tok.text)
    except ZeroDivisionError:
        raise ParseError("zero denominator", tok.line, tok.column) from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))
