"""Runtime tolerances and resolution knobs.

A single process-wide :class:`Settings` instance is read by the zero finder
and the interlacing checkers.  Use :func:`using` to override values for a
block of code, or :func:`load_config` to read ``key=value`` files.
"""
from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Settings:
    # zeros of different polynomials closer than this are treated as common
    coincidence_tol: float = 1e-9
    newton_tol: float = 1e-14
    newton_maxiter: int = 50
    # quasi-orthogonal bracketing grid (number of subintervals of [-1, 1])
    quasi_grid_start: int = 1024
    quasi_grid_max: int = 2**20
    identity_tol: float = 1e-9
    table_tol_3dp: float = 1.5e-3
    table_tol_4dp: float = 1.5e-4


_current = Settings()


def get_settings() -> Settings:
    return _current


def set_settings(**overrides) -> Settings:
    """Replace the process-wide settings, returning the previous ones."""
    global _current
    previous = _current
    _current = dataclasses.replace(_current, **overrides)
    return previous


@contextlib.contextmanager
def using(**overrides):
    global _current
    previous = set_settings(**overrides)
    try:
        yield _current
    finally:
        _current = previous


def parse_config(text: str) -> dict:
    """Parse ``key=value`` lines into typed overrides for :class:`Settings`.

    Blank lines and ``#`` comments are skipped.  Unknown keys raise
    ``KeyError`` so typos do not pass silently.
    """
    types = {f.name: f.type for f in dataclasses.fields(Settings)}
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in types:
            raise KeyError(f"line {lineno}: unknown setting {key!r}")
        conv = int if types[key] in (int, "int") else float
        out[key] = conv(float(value)) if conv is int else conv(value)
    return out


def load_config(path: str | Path) -> dict:
    return parse_config(Path(path).read_text())
