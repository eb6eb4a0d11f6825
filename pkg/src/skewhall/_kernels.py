"""Kernel backend selection: compiled ``_core`` if importable, else ``_pycore``.

Set ``SKEWHALL_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pycore

if os.environ.get("SKEWHALL_PURE_PYTHON"):
    _impl = _pycore
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pycore

BACKEND = "python" if _impl is _pycore else "cython"

canonical_form = _impl.canonical_form
closed_subsets = _impl.closed_subsets

__all__ = ["BACKEND", "canonical_form", "closed_subsets"]
