"""Kernel backend selection: compiled extension when available, pure Python
otherwise.

Set ``POWERDOM_KERNEL=pure`` (or ``cython``) to force a backend; the default
``auto`` prefers the extension.
"""

from __future__ import annotations

import os
from types import ModuleType

from powerdom import _kernel_py


def _load(requested: str) -> ModuleType:
    if requested not in ("auto", "pure", "cython"):
        raise ValueError(f"unknown kernel backend {requested!r}")
    if requested == "pure":
        return _kernel_py
    try:
        from powerdom import _kernel_c
        return _kernel_c
    except ImportError:
        if requested == "cython":
            raise
        return _kernel_py


def load_backend(name: str) -> ModuleType:
    """Explicitly load a backend module ("pure" or "cython")."""
    return _load(name)


_active = _load(os.environ.get("POWERDOM_KERNEL", "auto"))

BACKEND: str = _active.BACKEND_NAME
ClosureKernel = _active.ClosureKernel
make_perm_table = _active.make_perm_table
canonical_code = _active.canonical_code
