"""Braiding matrices and the scalars that diagram evaluation produces.

A :class:`QMatrix` holds the table ``q_ij`` of a diagonal braiding
``v_i (x) v_j -> q_ij v_j (x) v_i``.  Evaluation never multiplies numbers
directly: it accumulates a :class:`CoeffMonomial`, a formal product
``prod q_ab^e`` stored as a sparse exponent table, and only
:func:`eval_monomial` turns one into a number.  Three numeric realizations
are supported:

* ``rational`` -- exact :class:`fractions.Fraction` entries;
* ``cyclotomic`` -- entries are powers ``w^k`` of a primitive root of unity
  of fixed order, stored as the integer ``k``;
* ``graded`` -- cyclotomic with ``k_st = g_s * g_t`` for a grading ``g``.

Generator indices are 1-based everywhere.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import _text
from .errors import ParseError

RATIONAL = "rational"
CYCLOTOMIC = "cyclotomic"
GRADED = "graded"
MODES = (RATIONAL, CYCLOTOMIC, GRADED)


@dataclass(frozen=True)
class CyclotomicClass:
    """The root of unity ``w^k`` with ``w = exp(2 pi i / order)``."""

    k: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "k", self.k % self.order)

    def _check(self, other: "CyclotomicClass"):
        if not isinstance(other, CyclotomicClass):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return None

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CyclotomicClass(self.k + other.k, self.order)

    def __truediv__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CyclotomicClass(self.k - other.k, self.order)

    def __pow__(self, e: int):
        return CyclotomicClass(self.k * e, self.order)

    @property
    def is_one(self) -> bool:
        return self.k == 0

    def to_complex(self) -> complex:
        return cmath.exp(2j * math.pi * self.k / self.order)

    def __str__(self):
        return f"w^{self.k} (mod {self.order})"


ScalarValue = Union[Fraction, CyclotomicClass, float, complex]


def format_scalar(x: ScalarValue) -> str:
    """Locale-independent rendering: ``p/q``, ``w^k (mod n)`` or a float."""
    if isinstance(x, CyclotomicClass):
        return str(x)
    if isinstance(x, (Fraction, int)):
        return _text.format_rational(Fraction(x))
    if isinstance(x, complex):
        return f"{x.real:.12g}{x.imag:+.12g}i"
    return f"{x:.12g}"


class CoeffMonomial:
    """Formal Laurent monomial ``prod_(a,b) q_ab^e`` over ordered index pairs.

    Immutable; zero exponents are never stored, so equality is structural.

    >>> m = CoeffMonomial({(1, 2): 1, (3, 1): 2})
    >>> m * CoeffMonomial({(3, 1): -1})
    CoeffMonomial({(1, 2): 1, (3, 1): 1})
    >>> (m * m.inverse()).is_identity
    True
    """

    __slots__ = ("_exp", "_hash")

    def __init__(self, exponents: Mapping[tuple[int, int], int] | Iterable = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[tuple[int, int], int] = {}
        for pair, e in items:
            a, b = pair
            key = (int(a), int(b))
            acc[key] = acc.get(key, 0) + int(e)
        self._exp = {k: v for k, v in sorted(acc.items()) if v != 0}
        self._hash = None

    @classmethod
    def pair(cls, a: int, b: int, e: int = 1) -> "CoeffMonomial":
        return cls({(a, b): e})

    @property
    def exponents(self) -> dict[tuple[int, int], int]:
        return dict(self._exp)

    def items(self):
        return self._exp.items()

    def __getitem__(self, pair) -> int:
        return self._exp.get(tuple(pair), 0)

    def __len__(self):
        return len(self._exp)

    @property
    def is_identity(self) -> bool:
        return not self._exp

    @property
    def degree(self) -> int:
        """Sum of all exponents."""
        return sum(self._exp.values())

    def __mul__(self, other: "CoeffMonomial") -> "CoeffMonomial":
        if not isinstance(other, CoeffMonomial):
            return NotImplemented
        if not other._exp:
            return self
        if not self._exp:
            return other
        acc = dict(self._exp)
        for k, v in other._exp.items():
            acc[k] = acc.get(k, 0) + v
        return CoeffMonomial(acc)

    def inverse(self) -> "CoeffMonomial":
        return CoeffMonomial({k: -v for k, v in self._exp.items()})

    def __pow__(self, e: int) -> "CoeffMonomial":
        return CoeffMonomial({k: v * e for k, v in self._exp.items()})

    def __eq__(self, other):
        if not isinstance(other, CoeffMonomial):
            return NotImplemented
        return self._exp == other._exp

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._exp.items()))
        return self._hash

    def __repr__(self):
        return f"CoeffMonomial({self._exp!r})"

    def __str__(self):
        if not self._exp:
            return "1"
        parts = []
        for (a, b), e in self._exp.items():
            parts.append(f"q({a},{b})" if e == 1 else f"q({a},{b})^{e}")
        return " ".join(parts)


IDENTITY = CoeffMonomial()


def monomial_mul(a: CoeffMonomial, b: CoeffMonomial) -> CoeffMonomial:
    return a * b


def monomial_inv(a: CoeffMonomial) -> CoeffMonomial:
    return a.inverse()


@dataclass(frozen=True)
class QMatrix:
    """An ``n x n`` braiding matrix.

    ``entries`` holds Fractions in rational mode and exponents in ``[0, order)``
    in the cyclotomic modes.  Use the constructors :meth:`rational`,
    :meth:`cyclotomic` and :func:`graded_cyclotomic` rather than building one
    by hand.
    """

    n: int
    mode: str
    entries: tuple[tuple, ...]
    order: int | None = None
    grading: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must be {self.n}x{self.n}")
        if self.mode == RATIONAL:
            for row in self.entries:
                for x in row:
                    if not isinstance(x, Fraction) or x == 0:
                        raise ValueError("rational entries must be nonzero Fractions")
        else:
            if self.order is None or self.order < 1:
                raise ValueError("cyclotomic modes need a positive order")
            for row in self.entries:
                for k in row:
                    if not 0 <= k < self.order:
                        raise ValueError("cyclotomic exponents must lie in [0, order)")
        if self.mode == GRADED:
            g = self.grading
            if g is None or len(g) != self.n:
                raise ValueError("graded mode needs n grades")
            for s in range(self.n):
                for t in range(self.n):
                    if self.entries[s][t] != (g[s] * g[t]) % self.order:
                        raise ValueError("entries disagree with grading")

    # -- constructors -----------------------------------------------------

    @classmethod
    def rational(cls, rows: Sequence[Sequence]) -> "QMatrix":
        entries = tuple(tuple(x if type(x) is Fraction else Fraction(x) for x in row) for row in rows)
        return cls(len(entries), RATIONAL, entries)

    @classmethod
    def constant(cls, n: int, q) -> "QMatrix":
        return cls.rational([[q] * n for _ in range(n)])

    @classmethod
    def cyclotomic(cls, order: int, rows: Sequence[Sequence[int]]) -> "QMatrix":
        entries = tuple(tuple(int(k) % order for k in row) for row in rows)
        return cls(len(entries), CYCLOTOMIC, entries, order=order)

    # -- access -----------------------------------------------------------

    @property
    def is_cyclotomic(self) -> bool:
        return self.mode != RATIONAL

    def _check(self, a: int, b: int):
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise IndexError(f"generator pair ({a},{b}) outside 1..{self.n}")

    def entry(self, a: int, b: int):
        """Raw table entry: a Fraction, or the exponent of ``w``."""
        self._check(a, b)
        return self.entries[a - 1][b - 1]

    def value(self, a: int, b: int, numeric: bool = False) -> ScalarValue:
        """``q_ab`` as a number; ``numeric=True`` gives float/complex."""
        x = self.entry(a, b)
        if self.mode == RATIONAL:
            return float(x) if numeric else x
        c = CyclotomicClass(x, self.order)
        return c.to_complex() if numeric else c

    def one(self, numeric: bool = False) -> ScalarValue:
        if self.mode == RATIONAL:
            return 1.0 if numeric else Fraction(1)
        return complex(1.0) if numeric else CyclotomicClass(0, self.order)

    def row(self, a: int) -> tuple:
        self._check(a, 1)
        return self.entries[a - 1]

    def column(self, b: int) -> tuple:
        self._check(1, b)
        return tuple(r[b - 1] for r in self.entries)

    def window(self, p: int, m: int) -> "QMatrix":
        """Submatrix ``q~_ij = q_(p+i-1, p+j-1)`` for ``1 <= i, j <= m``."""
        if p < 1 or m < 1 or p + m - 1 > self.n:
            raise IndexError(f"window [{p}, {p + m - 1}] outside 1..{self.n}")
        rows = tuple(tuple(r[p - 1 : p - 1 + m]) for r in self.entries[p - 1 : p - 1 + m])
        grading = None if self.grading is None else self.grading[p - 1 : p - 1 + m]
        return QMatrix(m, self.mode, rows, self.order, grading)

    def serialize(self) -> str:
        return serialize_qmatrix(self)


def graded_cyclotomic(n: int, order: int, grading: Sequence[int]) -> QMatrix:
    """Cyclotomic braiding ``q_st = w^(g_s g_t)``."""
    if order < 1:
        raise ValueError("order must be positive")
    g = tuple(int(x) for x in grading)
    if len(g) != n:
        raise ValueError(f"need {n} grades, got {len(g)}")
    rows = tuple(tuple((g[s] * g[t]) % order for t in range(n)) for s in range(n))
    return QMatrix(n, GRADED, rows, order=order, grading=g)


def eval_monomial(m: CoeffMonomial, Q: QMatrix, numeric: bool = False) -> ScalarValue:
    """Numeric value of ``m`` under ``Q``.

    Exact by default (Fraction / CyclotomicClass); ``numeric=True`` multiplies
    doubles instead, for cross-checks only.
    """
    if numeric:
        acc = Q.one(numeric=True)
        for (a, b), e in m.items():
            acc *= Q.value(a, b, numeric=True) ** e
        return acc
    if Q.mode == RATIONAL:
        num, den = 1, 1
        for (a, b), e in m.items():
            x = Q.entry(a, b)
            if e > 0:
                num *= x.numerator**e
                den *= x.denominator**e
            else:
                num *= x.denominator**-e
                den *= x.numerator**-e
        return Fraction(num, den)
    k = 0
    for (a, b), e in m.items():
        k += Q.entry(a, b) * e
    return CyclotomicClass(k, Q.order)


# -- text format --------------------------------------------------------------


def serialize_qmatrix(Q: QMatrix) -> str:
    out = ["qmatrix v1", f"n {Q.n}"]
    if Q.mode == RATIONAL:
        out.append("mode rational")
    elif Q.mode == CYCLOTOMIC:
        out.append(f"mode cyclotomic {Q.order}")
    else:
        out.append(f"mode graded {Q.order}")
        out.append("grading " + " ".join(str(g) for g in Q.grading))
        return "\n".join(out) + "\n"
    for i, row in enumerate(Q.entries, start=1):
        cells = (_text.format_rational(x) if Q.mode == RATIONAL else str(x) for x in row)
        out.append(f"row {i} " + " ".join(cells))
    return "\n".join(out) + "\n"


def parse_qmatrix(text: str) -> QMatrix:
    items = list(_text.lines(text))
    _text.expect_header(items, "qmatrix v1")
    n = mode = order = grading = None
    rows: dict[int, list] = {}
    for lineno, toks in items[1:]:
        key, args = toks[0], toks[1:]
        if key.text == "n":
            if len(args) != 1:
                raise ParseError("usage: n <int>", lineno, key.column)
            n = _text.parse_int(args[0])
            if n < 1:
                raise ParseError("n must be positive", lineno, args[0].column)
        elif key.text == "mode":
            if not args or args[0].text not in MODES:
                raise ParseError("usage: mode rational|cyclotomic <order>|graded <order>", lineno, key.column)
            mode = args[0].text
            if mode == RATIONAL:
                if len(args) != 1:
                    raise ParseError("mode rational takes no order", lineno, args[0].column)
            else:
                if len(args) != 2:
                    raise ParseError(f"mode {mode} needs an order", lineno, args[0].column)
                order = _text.parse_int(args[1], "order")
                if order < 1:
                    raise ParseError("order must be positive", lineno, args[1].column)
        elif key.text == "grading":
            grading = [_text.parse_int(t, "grade") for t in args]
        elif key.text == "row":
            if mode is None or n is None:
                raise ParseError("row before n/mode", lineno, key.column)
            if not args:
                raise ParseError("usage: row <i> e1 ... en", lineno, key.column)
            i = _text.parse_int(args[0], "row index")
            cells = args[1:]
            if not 1 <= i <= n:
                raise ParseError(f"row index {i} outside 1..{n}", lineno, args[0].column)
            if i in rows:
                raise ParseError(f"duplicate row {i}", lineno, args[0].column)
            if len(cells) != n:
                raise ParseError(f"row {i} needs {n} entries, got {len(cells)}", lineno, key.column)
            if mode == RATIONAL:
                vals = []
                for t in cells:
                    x = _text.parse_rational(t)
                    if x == 0:
                        raise ParseError("rational entries must be nonzero", lineno, t.column)
                    vals.append(x)
            else:
                vals = [_text.parse_int(t, "exponent") for t in cells]
            rows[i] = vals
        else:
            raise ParseError(f"unknown directive {key.text!r}", lineno, key.column)
    if n is None or mode is None:
        raise ParseError("qmatrix needs both 'n' and 'mode'")
    if mode == GRADED:
        if grading is None:
            raise ParseError("graded mode needs a 'grading' line")
        if rows:
            raise ParseError("graded mode takes no 'row' lines")
        if len(grading) != n:
            raise ParseError(f"grading needs {n} values, got {len(grading)}")
        return graded_cyclotomic(n, order, grading)
    if grading is not None:
        raise ParseError("'grading' only applies to mode graded")
    missing = [i for i in range(1, n + 1) if i not in rows]
    if missing:
        raise ParseError(f"missing rows {missing}")
    table = [rows[i] for i in range(1, n + 1)]
    if mode == RATIONAL:
        return QMatrix.rational(table)
    return QMatrix.cyclotomic(order, table)
