"""Layered string-diagram IR.

A diagram is read top to bottom: a row of input generators, then layers,
each a left-to-right row of gates whose input arities add up to the number
of wires entering that layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Tuple, Union

from ..braid import BoxMorphism, Word


@dataclass(frozen=True)
class Id:
    arity: ClassVar[int] = 1
    outputs: ClassVar[int] = 1
    token: ClassVar[str] = "id"

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class Cross:
    arity: ClassVar[int] = 2
    outputs: ClassVar[int] = 2
    token: ClassVar[str] = "x"

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class CrossInv:
    arity: ClassVar[int] = 2
    outputs: ClassVar[int] = 2
    token: ClassVar[str] = "xi"

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class Mul:
    arity: ClassVar[int] = 2
    outputs: ClassVar[int] = 1
    token: ClassVar[str] = "m"

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class Box:
    name: str
    src: int
    dst: int
    arity: ClassVar[int] = 1
    outputs: ClassVar[int] = 1

    @property
    def morphism(self) -> BoxMorphism:
        return BoxMorphism(self.name, self.src, self.dst)

    def __str__(self):
        return f"{self.name}:{self.src}>{self.dst}"


Gate = Union[Id, Cross, CrossInv, Mul, Box]


@dataclass(frozen=True)
class Layer:
    gates: Tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))

    @property
    def arity(self) -> int:
        return sum(g.arity for g in self.gates)

    @property
    def outputs(self) -> int:
        return sum(g.outputs for g in self.gates)

    def __str__(self):
        return " ".join(str(g) for g in self.gates)

    @classmethod
    def identity(cls, width: int) -> "Layer":
        return cls((Id(),) * width)


@dataclass(frozen=True)
class Diagram:
    name: str
    inputs: Word
    layers: Tuple[Layer, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(int(a) for a in self.inputs))
        object.__setattr__(self, "layers", tuple(self.layers))

    @property
    def width(self) -> int:
        return len(self.inputs)

    def boxes(self) -> set[BoxMorphism]:
        return {g.morphism for layer in self.layers for g in layer.gates if isinstance(g, Box)}

    def then(self, *layers: Layer) -> "Diagram":
        return Diagram(self.name, self.inputs, self.layers + tuple(layers))

    def insert(self, index: int, layer: Layer) -> "Diagram":
        ls = list(self.layers)
        ls.insert(index, layer)
        return Diagram(self.name, self.inputs, ls)

    def serialize(self) -> str:
        from .dsl import serialize_diagram

        return serialize_diagram(self)
