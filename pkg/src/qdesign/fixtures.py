"""Bundled fixtures, addressable by name (``figure2``, ``coca``) or by path."""

from __future__ import annotations

from pathlib import Path

DATA_DIR = Path(__file__).parent / "data"

SUFFIXES = {
    "diagram": ".bd",
    "qmatrix": ".qm",
    "vocab": ".vocab",
    "key": ".key",
    "ct": ".ct",
}

# The car example numbers its frame v_0; internally it is generator 10.
CAR_ALIASES = {0: 10, 1: 1, 3: 3, 5: 5, 7: 7, 9: 9}


def resolve(name: str | Path, kind: str, base_dir: Path | None = None) -> Path:
    p = Path(name)
    candidates = [p]
    if base_dir is not None and not p.is_absolute():
        candidates.insert(0, base_dir / p)
    suffix = SUFFIXES[kind]
    candidates += [DATA_DIR / p.name, DATA_DIR / (p.name + suffix)]
    for c in candidates:
        if c.is_file():
            return c
    raise FileNotFoundError(f"no {kind} file or fixture named {str(name)!r}")


def read(name: str | Path, kind: str, base_dir: Path | None = None) -> str:
    return resolve(name, kind, base_dir).read_text(encoding="utf-8")


def names(kind: str) -> list[str]:
    return sorted(p.stem for p in DATA_DIR.glob("*" + SUFFIXES[kind]))


def load_diagram(name):
    from .diagram.dsl import parse_diagram

    return parse_diagram(read(name, "diagram"))


def load_qmatrix(name):
    from .scalars import parse_qmatrix

    return parse_qmatrix(read(name, "qmatrix"))


def load_vocabulary(name):
    from .design import parse_vocabulary

    return parse_vocabulary(read(name, "vocab"))


def load_key(name):
    from .cipher import parse_key

    path = resolve(name, "key")
    return parse_key(path.read_text(encoding="utf-8"), base_dir=path.parent)


def load_cryptogram(name):
    from .cipher import parse_cryptogram

    return parse_cryptogram(read(name, "ct"))
