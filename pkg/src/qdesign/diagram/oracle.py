"""Linear-algebra cross-check for :func:`evaluate`.

Every wire of length ``l`` lives in ``V^(x)l`` with the word basis, indexed
in mixed radix ``n`` (so the index of a pair of words is the index of their
concatenation and tensor products are Kronecker products).  Each gate gets an
explicit matrix built directly from the numbers in ``Q``:

* ``x``  -- permutation ``w1 w2 -> w2 w1`` scaled by ``prod q_ab``;
* ``xi`` -- the same permutation scaled by ``prod q_ba^-1``;
* ``m``  -- concatenation, the identity on flat indices;
* boxes  -- the matrix unit ``E_(dst, src)`` on ``V``.

A layer is the Kronecker product of its gates. Nothing here touches
:class:`CoeffMonomial` or :func:`braid`, so agreement is meaningful.

Exact values are used for rational matrices; cyclotomic matrices are realized
as complex doubles (sums of roots of unity are not closed under the class
representation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import EvaluationError
from ..scalars import RATIONAL, QMatrix
from .ir import Box, Cross, CrossInv, Diagram, Id, Layer, Mul


class TruncationError(ValueError):
    pass


def word_index(word, n: int) -> int:
    idx = 0
    for a in word:
        idx = idx * n + (a - 1)
    return idx


def index_word(idx: int, length: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        idx, r = divmod(idx, n)
        out.append(r + 1)
    return tuple(reversed(out))


@dataclass
class GateMatrix:
    """Monomial matrix on ``V^(x)sum(in_lengths)``: column ``j`` has its
    single (possibly absent) nonzero at ``rows[j]`` with value ``vals[j]``.
    ``rows is None`` means identity."""

    in_lengths: tuple[int, ...]
    out_lengths: tuple[int, ...]
    n: int
    rows: np.ndarray | None = None
    vals: list | np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.n ** sum(self.in_lengths)

    def column(self, j: int, one):
        if self.rows is None:
            return j, one
        r = int(self.rows[j])
        if r < 0:
            return None
        return r, self.vals[j]

    def toarray(self, one) -> np.ndarray:
        dtype = object if isinstance(one, Fraction) else type(one)
        dim = self.dim
        out = np.zeros((dim, dim), dtype=dtype)
        if dtype is object:
            out[:] = Fraction(0)
        for j in range(dim):
            hit = self.column(j, one)
            if hit is not None:
                out[hit[0], j] = hit[1]
        return out


def _numbers(Q: QMatrix, numeric: bool):
    """Lookup table ``T[a-1][b-1] = q_ab`` and the unit, as plain numbers."""
    exact = Q.mode == RATIONAL and not numeric
    if exact:
        table = [[Q.entry(a, b) for b in range(1, Q.n + 1)] for a in range(1, Q.n + 1)]
        return table, Fraction(1)
    table = np.array(
        [[complex(Q.value(a, b, numeric=True)) for b in range(1, Q.n + 1)] for a in range(1, Q.n + 1)]
    )
    if Q.mode == RATIONAL:
        table = table.real
        return table, 1.0
    return table, complex(1.0)


def _crossing(a: int, b: int, n: int, table, one, inverse: bool) -> GateMatrix:
    dim = n ** (a + b)
    words = np.array(np.unravel_index(np.arange(dim), (n,) * (a + b))).T if a + b else np.zeros((1, 0), int)
    left, right = words[:, :a], words[:, a:]
    swapped = np.concatenate([right, left], axis=1)
    rows = np.ravel_multi_index(swapped.T, (n,) * (a + b)) if a + b else np.zeros(1, int)
    if isinstance(one, Fraction):
        vals = []
        for j in range(dim):
            v = one
            for x in left[j]:
                for y in right[j]:
                    v = v / table[y][x] if inverse else v * table[x][y]
            vals.append(v)
    else:
        vals = np.full(dim, one)
        T = np.asarray(table)
        for i in range(a):
            for k in range(b):
                if inverse:
                    vals = vals / T[right[:, k], left[:, i]]
                else:
                    vals = vals * T[left[:, i], right[:, k]]
    return GateMatrix((a, b), (b, a), n, np.asarray(rows), vals)


def _box(g: Box, n: int, one) -> GateMatrix:
    rows = np.full(n, -1)
    rows[g.src - 1] = g.dst - 1
    vals = [one] * n
    return GateMatrix((1,), (1,), n, rows, vals)


def layer_matrices(layer: Layer, lengths: list[int], Q: QMatrix, numeric: bool = False, _cache=None):
    """Gate matrices of one layer given the incoming word lengths."""
    table, one = _numbers(Q, numeric)
    cache = {} if _cache is None else _cache
    n = Q.n
    mats = []
    pos = 0
    for g in layer.gates:
        ins = tuple(lengths[pos : pos + g.arity])
        if len(ins) != g.arity:
            raise EvaluationError("layer consumes more wires than available")
        pos += g.arity
        if isinstance(g, Id):
            mats.append(GateMatrix(ins, ins, n))
        elif isinstance(g, Mul):
            mats.append(GateMatrix(ins, (sum(ins),), n))
        elif isinstance(g, (Cross, CrossInv)):
            key = (type(g), ins)
            if key not in cache:
                cache[key] = _crossing(*ins, n, table, one, isinstance(g, CrossInv))
            mats.append(cache[key])
        elif isinstance(g, Box):
            if ins != (1,):
                raise EvaluationError(f"box {g} on a wire of length {ins[0]}")
            mats.append(_box(g, n, one))
    if pos != len(lengths):
        raise EvaluationError("layer leaves wires unconsumed")
    return mats


@dataclass
class OracleResult:
    support: dict  # tuple of per-wire basis indices -> value
    lengths: tuple[int, ...]
    n: int
    operators: list  # per layer: list of GateMatrix

    @property
    def words(self) -> tuple[tuple[int, ...], ...] | None:
        if len(self.support) != 1:
            return None
        (key,) = self.support
        return tuple(index_word(i, l, self.n) for i, l in zip(key, self.lengths))

    @property
    def value(self):
        if len(self.support) != 1:
            return None
        return next(iter(self.support.values()))


def _apply(mats: list[GateMatrix], state: dict, n: int, one) -> dict:
    out: dict = {}
    for key, v in state.items():
        new_key = []
        pos = 0
        dead = False
        for g in mats:
            j = 0
            for idx, l in zip(key[pos : pos + len(g.in_lengths)], g.in_lengths):
                j = j * n**l + idx
            pos += len(g.in_lengths)
            hit = g.column(j, one)
            if hit is None:
                dead = True
                break
            r, s = hit
            v = v * s
            parts = []
            for l in reversed(g.out_lengths):
                r, rem = divmod(r, n**l)
                parts.append(rem)
            new_key.extend(reversed(parts))
        if dead:
            continue
        k = tuple(new_key)
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if v != 0}


def dense_oracle(d: Diagram, Q: QMatrix, truncation_length: int, numeric: bool = False) -> OracleResult:
    """Push the input basis vector through the explicit layer matrices.

    Raises :class:`TruncationError` if any intermediate wire would carry a
    word longer than ``truncation_length``.
    """
    _, one = _numbers(Q, numeric)
    lengths = [1] * d.width
    if d.width and truncation_length < 1:
        raise TruncationError("truncation length below 1")
    state = {tuple(a - 1 for a in d.inputs): one}
    cache: dict = {}
    ops = []
    for k, layer in enumerate(d.layers, start=1):
        mats = layer_matrices(layer, lengths, Q, numeric, cache)
        ops.append(mats)
        state = _apply(mats, state, Q.n, one)
        lengths = [l for g in mats for l in g.out_lengths]
        if any(l > truncation_length for l in lengths):
            raise TruncationError(f"layer {k} produces a word longer than {truncation_length}")
    return OracleResult(state, tuple(lengths), Q.n, ops)


def dense_operator(d: Diagram, Q: QMatrix, numeric: bool = False, max_dim: int = 4096) -> np.ndarray:
    """The whole diagram as one explicit matrix on ``V^(x)N`` (``N`` letters).

    Only for small cases: dimension ``n^N`` must not exceed ``max_dim``.
    Diagrams with boxes or multiplications are fine since neither changes
    the total letter count.
    """
    dim = Q.n ** d.width
    if dim > max_dim:
        raise TruncationError(f"operator dimension {dim} exceeds {max_dim}")
    _, one = _numbers(Q, numeric)
    lengths = [1] * d.width
    if isinstance(one, Fraction):
        total = np.empty((dim, dim), dtype=object)
        total[:] = Fraction(0)
        for i in range(dim):
            total[i, i] = Fraction(1)
    else:
        total = np.eye(dim, dtype=type(one))
    cache: dict = {}
    for layer in d.layers:
        mats = layer_matrices(layer, lengths, Q, numeric, cache)
        M = np.ones((1, 1), dtype=total.dtype)
        if M.dtype == object:
            M[0, 0] = Fraction(1)
        for g in mats:
            M = np.kron(M, g.toarray(one))
        total = M @ total
        lengths = [l for g in mats for l in g.out_lengths]
    return total
