"""Kernel backend selection: compiled extension when built, pure Python otherwise.

Set COINGAP_BACKEND=python (or =compiled) to force a default.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None


def available_backends() -> tuple[str, ...]:
    if _compiled is None:
        return ("python",)
    return ("compiled", "python")


def get_kernels(name: str = "auto"):
    """Resolve 'auto', 'compiled' or 'python' to a kernel module."""
    if name is None or name == "auto":
        name = os.environ.get("COINGAP_BACKEND", "auto")
        if name == "auto":
            name = "compiled" if _compiled is not None else "python"
    if name == "compiled":
        if _compiled is None:
            raise ValueError(
                "compiled kernels are not available; rebuild the extension or use backend='python'"
            )
        return _compiled
    if name == "python":
        return _kernels_py
    raise ValueError(f"unknown backend: {name!r}")


def backend_name() -> str:
    """Name of the backend 'auto' currently resolves to."""
    return get_kernels("auto").BACKEND
