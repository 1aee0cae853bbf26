"""Default search bounds, overridable through environment variables.

HOMLIFT_MAX_SQUARES   cap on (top, bottom) square pairs examined per box query
HOMLIFT_MAX_STEPS     cap on saturation passes in cell factorization
HOMLIFT_MAX_CELLS     cap on attached cells per factorization
HOMLIFT_DEPTH         default truncation depth of the generator-level iteration
HOMLIFT_MAX_WORD_LEN  path-word length bound for category pushouts
HOMLIFT_MAX_CLASSES   congruence-class cap for category pushouts
HOMLIFT_SIZE_GUARD    carrier-size cap for generated objects
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class Bounds:
    max_squares: int = field(default_factory=lambda: _env_int("HOMLIFT_MAX_SQUARES", 10**6))
    max_steps: int = field(default_factory=lambda: _env_int("HOMLIFT_MAX_STEPS", 64))
    max_cells: int = field(default_factory=lambda: _env_int("HOMLIFT_MAX_CELLS", 512))
    depth: int = field(default_factory=lambda: _env_int("HOMLIFT_DEPTH", 2))
    max_word_len: int = field(default_factory=lambda: _env_int("HOMLIFT_MAX_WORD_LEN", 8))
    max_classes: int = field(default_factory=lambda: _env_int("HOMLIFT_MAX_CLASSES", 512))
    size_guard: int = field(default_factory=lambda: _env_int("HOMLIFT_SIZE_GUARD", 128))


DEFAULT_BOUNDS = Bounds()


def bounds_dict(b: Bounds) -> dict:
    return {
        "max_squares": b.max_squares,
        "max_steps": b.max_steps,
        "max_cells": b.max_cells,
        "depth": b.depth,
        "max_word_len": b.max_word_len,
        "max_classes": b.max_classes,
        "size_guard": b.size_guard,
    }
