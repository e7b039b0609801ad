"""``qdesign`` command line.

Exit codes: 0 success, 1 validation or check failure, 2 parse error or
missing file, 3 decode failure.  Any file argument may also be the name of
a bundled fixture (``figure2``, ``coca``, ...).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cipher, fixtures
from .braid import BoxMorphism, yd_module_from_q
from .checks import check_box_naturality, check_inverse, check_ybe, yd_braiding_equals_diagonal
from .design import decode_brightness, decode_color, decode_mirror, decode_size
from .diagram.evaluate import EvalResult, evaluate
from .errors import DecodeError, EvaluationError, ParseError, ValidationError
from .scalars import RATIONAL, CyclotomicClass, QMatrix, eval_monomial, format_scalar

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_DECODE = 3

NUMERIC_MODES = ("rational", "cyclotomic", "float")


class Output:
    def __init__(self, quiet: bool, stream=None):
        self.quiet = quiet
        self.stream = stream or sys.stdout

    def __call__(self, line: str = ""):
        if not self.quiet:
            print(line, file=self.stream)


def _value(result: EvalResult, Q: QMatrix, numeric: str | None):
    if numeric == "float":
        return result.value(Q, numeric=True)
    exact = "rational" if Q.mode == RATIONAL else "cyclotomic"
    if numeric is not None and numeric != exact:
        raise ValueError(f"--numeric {numeric} does not fit a {exact} matrix")
    return result.value(Q)


def _load(args):
    d = fixtures.load_diagram(args.diagram)
    Q = fixtures.load_qmatrix(args.qmatrix)
    return d, Q, evaluate(d, Q)


def _words(result: EvalResult) -> str:
    return " ".join(str(a) for w in result.wires for a in w.word)


def cmd_eval(args, out: Output) -> int:
    d, Q, result = _load(args)
    if args.trace:
        for k, wires in enumerate(result.trace):
            out(f"layer {k}: " + " | ".join(str(w) for w in wires))
    if not result.wires:
        return EXIT_OK
    out(f"word: {_words(result)}")
    if len(result.wires) > 1:
        for i, w in enumerate(result.wires, start=1):
            out(f"wire {i}: {' '.join(map(str, w.word))} coeff {format_scalar(eval_monomial(w.coeff, Q, args.numeric == 'float'))}")
    out(f"coeff: {format_scalar(_value(result, Q, args.numeric))}")
    out(f"monomial: {result.global_coeff}")
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    Q = fixtures.load_qmatrix(args.qmatrix)
    reports = []
    if args.ybe:
        reports.append(check_ybe(Q))
    if args.inverse:
        reports.append(check_inverse(Q))
    if args.yd:
        reports.append(yd_braiding_equals_diagonal(yd_module_from_q(Q), Q))
    ok = True
    for a, b in args.box or ():
        f = BoxMorphism("f", a, b)
        try:
            reports.append(check_box_naturality(Q, f))
        except ValueError as exc:
            out(f"naturality f:{a}>{b}: fail (not admissible)")
            out(f"  {exc}")
            ok = False
    if not reports and ok and not args.box:
        reports = [check_ybe(Q), check_inverse(Q)]
    for r in reports:
        out(str(r))
    return EXIT_OK if ok and all(reports) else EXIT_INVALID


def cmd_color(args, out: Output) -> int:
    d, Q, result = _load(args)
    value = result.value(Q)
    if not isinstance(value, CyclotomicClass):
        raise ValueError("colour needs a cyclotomic braiding matrix")
    out(f"class: {value}")
    out(f"color: {decode_color(value)}")
    return EXIT_OK


def cmd_size(args, out: Output) -> int:
    d, Q, result = _load(args)
    out(f"size: {format_scalar(decode_size(_value(result, Q, args.numeric)))}")
    return EXIT_OK


def cmd_brightness(args, out: Output) -> int:
    d, Q, result = _load(args)
    vocab = fixtures.load_vocabulary(args.vocab)
    for w, (shape, value) in zip(result.wires, decode_brightness(result.wires, Q, vocab)):
        if w.coeff.is_identity:
            out(f"{shape}: plain")
        else:
            out(f"{shape}: {format_scalar(value)} unit ({w.coeff})")
    return EXIT_OK


def cmd_mirror(args, out: Output) -> int:
    d, Q, result = _load(args)
    vocab = fixtures.load_vocabulary(args.vocab)
    for i, c in enumerate(decode_mirror(result, args.mirrored, vocab, Q), start=1):
        out(f"{i}: {c.label}")
    out(f"scale: {format_scalar(result.value(Q))}")
    return EXIT_OK


def _write(text: str, path: str | None, out: Output):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        for line in text.splitlines():
            out(line)


def cmd_keygen(args, out: Output) -> int:
    key = cipher.keygen(args.n, args.m, seed=args.seed, density=args.density)
    _write(cipher.serialize_key(key), args.output, out)
    return EXIT_OK


def cmd_encrypt(args, out: Output) -> int:
    key = fixtures.load_key(args.key)
    if args.word is not None:
        if args.vocab is None:
            raise ValueError("--word needs --vocab")
        s = cipher.word_index(key, fixtures.load_vocabulary(args.vocab), args.word)
    else:
        s = args.index
    cg = cipher.encode(key, s, seed=args.seed)
    _write(cipher.serialize_cryptogram(cg), args.output, out)
    return EXIT_OK


def cmd_decrypt(args, out: Output) -> int:
    key = fixtures.load_key(args.key)
    cg = fixtures.load_cryptogram(args.cryptogram)
    s = cipher.decode(key, cg)
    out(f"index: {s}")
    if args.vocab is not None:
        out(f"word: {cipher.plaintext(key, fixtures.load_vocabulary(args.vocab), s)}")
    return EXIT_OK


def _pair_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (u64)")
    common.add_argument("--numeric", choices=NUMERIC_MODES, default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="qdesign", description="Braided diagrams, design decoding and the braiding cipher.")
    p.add_argument("--seed", type=int, default=None, help="random seed (u64)")
    p.add_argument("--numeric", choices=NUMERIC_MODES, default=None, help="how to print scalar values")
    p.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit code")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a diagram")
    e.add_argument("diagram")
    e.add_argument("qmatrix")
    e.add_argument("--trace", action="store_true", help="print the wires after every layer")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("check", parents=[common], help="check braiding laws for a matrix")
    c.add_argument("qmatrix")
    c.add_argument("--ybe", action="store_true")
    c.add_argument("--inverse", action="store_true")
    c.add_argument("--yd", action="store_true")
    c.add_argument("--box", nargs=2, type=int, action="append", metavar=("A", "B"))
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("design", parents=[common], help="decode a diagram as a design")
    dsub = d.add_subparsers(dest="kind", required=True)
    for name, func, needs_vocab in (
        ("color", cmd_color, False),
        ("size", cmd_size, False),
        ("brightness", cmd_brightness, True),
        ("mirror", cmd_mirror, True),
    ):
        k = dsub.add_parser(name, parents=[common])
        k.add_argument("diagram")
        k.add_argument("qmatrix")
        if needs_vocab:
            k.add_argument("vocab")
        if name == "mirror":
            k.add_argument("--mirrored", type=_pair_list, required=True, help="e.g. 3,5,7,9")
        k.set_defaults(func=func)

    g = sub.add_parser("keygen", parents=[common], help="write a random private key")
    g.add_argument("--n", type=int, default=20, help="vocabulary size")
    g.add_argument("--m", type=int, default=10, help="window size")
    g.add_argument("--density", type=float, default=1.0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_keygen)

    en = sub.add_parser("encrypt", parents=[common], help="encrypt one vocabulary index")
    en.add_argument("key")
    which = en.add_mutually_exclusive_group(required=True)
    which.add_argument("--index", type=int)
    which.add_argument("--word")
    en.add_argument("--vocab")
    en.add_argument("-o", "--output")
    en.set_defaults(func=cmd_encrypt)

    de = sub.add_parser("decrypt", parents=[common], help="recover the index from a cryptogram")
    de.add_argument("key")
    de.add_argument("cryptogram")
    de.add_argument("--vocab")
    de.set_defaults(func=cmd_decrypt)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(args.quiet, stdout)

    def err(msg: str):
        if not args.quiet:
            print(f"error: {msg}", file=stderr)

    try:
        return args.func(args, out)
    except (ParseError, FileNotFoundError) as exc:
        err(str(exc))
        return EXIT_PARSE
    except DecodeError as exc:
        err(str(exc))
        return EXIT_DECODE
    except ValidationError as exc:
        for issue in exc.issues:
            err(str(issue))
        return EXIT_INVALID
    except (EvaluationError, ValueError, KeyError, TypeError, IndexError) as exc:
        err(str(exc).strip("'\""))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
