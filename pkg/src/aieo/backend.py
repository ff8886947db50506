"""Evaluation backend selection.

Prefers the compiled core; falls back to the pure-Python interpreter.  Set
``AIEO_BACKEND=python`` to force the fallback (used by the benchmark and by
tests that compare the two).
"""

from __future__ import annotations

import os

from . import _purecore

try:
    from . import _fastcore
except ImportError:  # extension not built
    _fastcore = None


def available_backends():
    out = {"python": _purecore}
    if _fastcore is not None:
        out["cython"] = _fastcore
    return out


def select_backend(name: str | None = None):
    if name is None:
        name = os.environ.get("AIEO_BACKEND")
    if name is not None:
        backends = available_backends()
        if name not in backends:
            raise ValueError(f"unknown backend {name!r}; have {sorted(backends)}")
        return backends[name]
    return _fastcore if _fastcore is not None else _purecore


core = select_backend()
BACKEND_NAME = core.NAME
