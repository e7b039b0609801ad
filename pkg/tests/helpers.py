"""Random matrices and diagrams shared by the property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from qdesign.diagram.ir import Box, Cross, CrossInv, Diagram, Id, Layer, Mul
from qdesign.scalars import QMatrix


def random_fraction(rng: random.Random, lo: int = 1, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def random_rational(rng: random.Random, n: int) -> QMatrix:
    return QMatrix.rational([[random_fraction(rng) for _ in range(n)] for _ in range(n)])


def typed_matrix(rng: random.Random, n: int, cyclotomic_order: int | None = None) -> QMatrix:
    """Matrix whose generators fall into a few types; q_ij depends only on
    the types of i and j, so same-type boxes are admissible."""
    types = [rng.randrange(max(1, n - 1)) for _ in range(n)]
    k = max(types) + 1
    if cyclotomic_order is None:
        base = [[random_fraction(rng) for _ in range(k)] for _ in range(k)]
        return QMatrix.rational([[base[types[i]][types[j]] for j in range(n)] for i in range(n)])
    base = [[rng.randrange(cyclotomic_order) for _ in range(k)] for _ in range(k)]
    return QMatrix.cyclotomic(cyclotomic_order, [[base[types[i]][types[j]] for j in range(n)] for i in range(n)])


def admissible_targets(Q: QMatrix, a: int) -> list[int]:
    return [b for b in range(1, Q.n + 1) if b != a and Q.row(a) == Q.row(b) and Q.column(a) == Q.column(b)]


def random_diagram(rng: random.Random, Q: QMatrix, max_wires: int = 4, max_layers: int = 6, max_len: int = 4) -> Diagram:
    """Well-formed diagram; words never exceed ``max_len`` letters."""
    inputs = tuple(rng.randint(1, Q.n) for _ in range(rng.randint(1, max_wires)))
    wires = [(a,) for a in inputs]
    layers = []
    for _ in range(rng.randint(0, max_layers)):
        gates, out, i = [], [], 0
        while i < len(wires):
            w = wires[i]
            options = ["id"]
            if i + 1 < len(wires):
                options += ["x", "xi"]
                if len(w) + len(wires[i + 1]) <= max_len:
                    options.append("m")
            targets = admissible_targets(Q, w[0]) if len(w) == 1 else []
            if targets:
                options.append("box")
            pick = rng.choice(options)
            if pick == "id":
                gates.append(Id())
                out.append(w)
                i += 1
            elif pick == "box":
                b = rng.choice(targets)
                gates.append(Box("f", w[0], b))
                out.append((b,))
                i += 1
            else:
                v = wires[i + 1]
                if pick == "m":
                    gates.append(Mul())
                    out.append(w + v)
                else:
                    gates.append(Cross() if pick == "x" else CrossInv())
                    out += [v, w]
                i += 2
        layers.append(Layer(tuple(gates)))
        wires = out
    return Diagram("random", inputs, tuple(layers))
