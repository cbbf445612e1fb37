"""Hot search kernels.

The compiled ``_chordless`` extension is used when it was built; otherwise the
pure-Python module with the same interface is loaded.  Setting
``PATTERNAL_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

ENV_PURE_PYTHON = "PATTERNAL_PURE_PYTHON"

_MODULES = {"cython": "._chordless", "python": "._chordless_py"}


def load_backend(name: str) -> ModuleType:
    try:
        target = _MODULES[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}") from None
    return importlib.import_module(target, __name__)


def available_backends() -> list[str]:
    names = []
    for name in _MODULES:
        try:
            load_backend(name)
        except ImportError:
            continue
        names.append(name)
    return names


if os.environ.get(ENV_PURE_PYTHON, "") not in ("", "0"):
    BACKEND = "python"
else:
    try:
        load_backend("cython")
        BACKEND = "cython"
    except ImportError:
        BACKEND = "python"

chordless_search = load_backend(BACKEND).chordless_search

__all__ = ["BACKEND", "available_backends", "chordless_search", "load_backend"]
