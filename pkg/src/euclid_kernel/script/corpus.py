"""Access to the bundled ``.geo`` scripts and instance files."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .parser import parse

# The bundled scripts that make up the corpus, by file stem.
CORPUS_SCRIPTS = ("midpoint", "perp", "m", "reciprocal", "squareroot", "other", "other2")


def corpus_path(name: str = "") -> Path:
    base = Path(str(resources.files("euclid_kernel") / "corpus"))
    return base / name if name else base


def resolve_script(path) -> Path:
    """A file path as given, else the bundled file of that name or stem.

    ``corpus/perp.geo``, ``perp.geo`` and ``perp`` all find the bundled
    Perp script when no such file exists relative to the working directory.
    """
    p = Path(path)
    if p.exists():
        return p
    bundled = corpus_path(p.name if p.suffix else f"{p.name}.geo")
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no script file {str(path)!r}")


def load_script(path):
    """Parse a script from a file path, or from a bundled stem such as ``perp``."""
    return parse(resolve_script(path).read_text(encoding="utf-8"))


def load_corpus(names=CORPUS_SCRIPTS) -> dict:
    return {n: load_script(n) for n in names}
