"""Text format for layered diagrams (``*.bd``).

::

    diagram v1
    name figure2
    inputs 1 2 3 4
    layer f:1>5 f:2>6 f:3>7 f:4>8
    layer id id m
    ...

Gate tokens: ``id``, ``x`` (crossing), ``xi`` (inverse crossing), ``m``
(multiplication), ``<name>:<a>><b>`` (box a -> b) and ``bend``, a pure layout
glyph that is read as ``id``.
"""

from __future__ import annotations

import re

from .. import _text
from ..errors import ParseError
from .ir import Box, Cross, CrossInv, Diagram, Id, Layer, Mul

_SIMPLE = {"id": Id(), "bend": Id(), "x": Cross(), "xi": CrossInv(), "m": Mul()}
_BOX = re.compile(r"^([A-Za-z_]\w*):(\d+)>(\d+)$")
_IDENT = re.compile(r"^[A-Za-z_][\w.-]*$")


def _gate(tok: _text.Token):
    if tok.text in _SIMPLE:
        return _SIMPLE[tok.text]
    m = _BOX.match(tok.text)
    if m:
        return Box(m.group(1), int(m.group(2)), int(m.group(3)))
    if ":" in tok.text or ">" in tok.text:
        raise ParseError(f"bad box syntax {tok.text!r} (want name:a>b)", tok.line, tok.column)
    raise ParseError(f"unknown gate token {tok.text!r}", tok.line, tok.column)


def parse_diagram(text: str) -> Diagram:
    items = list(_text.lines(text))
    _text.expect_header(items, "diagram v1")
    name = inputs = None
    layers = []
    for lineno, toks in items[1:]:
        key, args = toks[0], toks[1:]
        if key.text == "name":
            if len(args) != 1 or not _IDENT.match(args[0].text):
                raise ParseError("usage: name <identifier>", lineno, key.column)
            if name is not None:
                raise ParseError("duplicate 'name'", lineno, key.column)
            name = args[0].text
        elif key.text == "inputs":
            if inputs is not None:
                raise ParseError("duplicate 'inputs'", lineno, key.column)
            if layers:
                raise ParseError("'inputs' must precede layers", lineno, key.column)
            inputs = [_text.parse_int(t, "generator index") for t in args]
        elif key.text == "layer":
            if inputs is None:
                raise ParseError("'layer' before 'inputs'", lineno, key.column)
            layers.append(Layer(tuple(_gate(t) for t in args)))
        else:
            raise ParseError(f"unknown directive {key.text!r}", lineno, key.column)
    if name is None:
        raise ParseError("missing 'name'")
    if inputs is None:
        raise ParseError("missing 'inputs'")
    return Diagram(name, tuple(inputs), tuple(layers))


def serialize_diagram(d: Diagram) -> str:
    out = ["diagram v1", f"name {d.name}", " ".join(["inputs", *map(str, d.inputs)])]
    out.extend(" ".join(["layer", *map(str, layer.gates)]) for layer in d.layers)
    return "\n".join(out) + "\n"
