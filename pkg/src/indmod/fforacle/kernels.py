"""Backend selection for the spin/echelon kernels.

The compiled module is used when it imports; set ``INDMOD_PURE_PYTHON=1`` to
force the Python implementation.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

__all__ = ["BACKEND", "available_backends", "get_backend", "rref", "spin"]


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "cython" and _compiled is not None:
        return _compiled
    raise ValueError(f"backend {name!r} is not available")


if _compiled is not None and not os.environ.get("INDMOD_PURE_PYTHON"):
    BACKEND = "cython"
    _impl = _compiled
else:
    BACKEND = "python"
    _impl = _kernels_py

spin = _impl.spin
rref = _impl.rref
