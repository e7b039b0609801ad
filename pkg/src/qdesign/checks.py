"""Exhaustive law checks over basis vectors: Yang-Baxter, inverse law, box
naturality and the Yetter-Drinfeld realization of a diagonal braiding."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .braid import (
    BoxMorphism,
    WireState,
    YDModule,
    admissible_box,
    apply_box,
    braid,
    braid_inverse,
    yd_braiding,
)
from .diagram.evaluate import run
from .diagram.ir import Cross, Diagram, Id, Layer
from .scalars import QMatrix, eval_monomial, format_scalar

_XI = Layer((Cross(), Id()))
_IX = Layer((Id(), Cross()))


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    unit: str = "cases"
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def __str__(self):
        status = "pass" if self.passed else "fail"
        head = f"{self.name}: {status} ({self.checked} {self.unit})"
        return "\n".join([head, *("  " + v for v in self.violations)])


def _same(Q: QMatrix, xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    for a, b in zip(xs, ys):
        if a.word != b.word:
            return False
        if a.coeff != b.coeff and eval_monomial(a.coeff, Q) != eval_monomial(b.coeff, Q):
            return False
    return True


def check_ybe(Q: QMatrix) -> CheckReport:
    """Both triple-crossing composites on every ``v_i (x) v_j (x) v_k``.

    Runs through the diagram evaluator; wires must agree word-for-word and
    coefficient-for-coefficient (symbolically, not just numerically).
    """
    report = CheckReport("YBE", unit="triples")
    for i, j, k in product(range(1, Q.n + 1), repeat=3):
        lhs = run(Diagram("ybe_lhs", (i, j, k), (_XI, _IX, _XI)))
        rhs = run(Diagram("ybe_rhs", (i, j, k), (_IX, _XI, _IX)))
        report.checked += 1
        if lhs.wires != rhs.wires:
            report.violations.append(
                f"({i},{j},{k}): lhs {[str(w) for w in lhs.wires]} != rhs {[str(w) for w in rhs.wires]}"
            )
    return report


def check_inverse(Q: QMatrix) -> CheckReport:
    report = CheckReport("inverse", unit="pairs")
    for i, j in product(range(1, Q.n + 1), repeat=2):
        pair = (WireState((i,)), WireState((j,)))
        report.checked += 1
        if braid_inverse(*braid(*pair)) != pair:
            report.violations.append(f"({i},{j}): C^-1 C != id")
        if braid(*braid_inverse(*pair)) != pair:
            report.violations.append(f"({i},{j}): C C^-1 != id")
    return report


def check_box_naturality(Q: QMatrix, f: BoxMorphism, force: bool = False) -> CheckReport:
    """Slide ``f`` through a crossing with every partner generator, on
    either side, and compare with applying it before the crossing.

    Inadmissible boxes raise ``ValueError`` unless ``force`` is set, in which
    case the mismatches are reported.
    """
    if not admissible_box(Q, f.src, f.dst) and not force:
        raise ValueError(f"box {f.name}:{f.src}>{f.dst} is not admissible under Q")
    report = CheckReport(f"naturality {f.name}:{f.src}>{f.dst}", unit="partners")
    src = WireState((f.src,))
    for k in range(1, Q.n + 1):
        other = WireState((k,))
        report.checked += 1
        # box on the left strand, then cross; vs cross, then box on the strand
        before = braid(apply_box(f, src), other)
        a, b = braid(src, other)
        after = (a, apply_box(f, b))
        if not _same(Q, before, after):
            report.violations.append(f"partner {k}: box does not commute with C(v{f.src} (x) v{k})")
            continue
        before = braid(other, apply_box(f, src))
        a, b = braid(other, src)
        after = (apply_box(f, a), b)
        if not _same(Q, before, after):
            report.violations.append(f"partner {k}: box does not commute with C(v{k} (x) v{f.src})")
    return report


def _shown(values) -> str:
    return ", ".join(map(format_scalar, values))


def yd_braiding_equals_diagonal(module: YDModule, Q: QMatrix) -> CheckReport:
    report = CheckReport("YD", unit="pairs")
    for i, j in product(range(1, Q.n + 1), repeat=2):
        pair = (WireState((i,)), WireState((j,)))
        report.checked += 1
        got = yd_braiding(module, *pair)
        want = braid(*pair)
        words_ok = [w.word for w in got] == [w.word for w in want]
        # numbers from the module's own action table vs the braiding matrix
        got_v = [eval_monomial(w.coeff, module.Q) for w in got]
        want_v = [eval_monomial(w.coeff, Q) for w in want]
        if not (words_ok and got_v == want_v):
            report.violations.append(f"({i},{j}): YD braiding scalars {_shown(got_v)} != {_shown(want_v)}")
    return report
