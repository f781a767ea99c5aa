"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``PERMLAB_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("PERMLAB_PURE", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
ryser_mod = _impl.ryser_mod
variety_dfs = _impl.variety_dfs
find_witness = _impl.find_witness
nowitness_sweep = _impl.nowitness_sweep

__all__ = ["BACKEND", "ryser_mod", "variety_dfs", "find_witness", "nowitness_sweep", "backend_module"]


def backend_module(name: str):
    """``"python"`` or ``"cython"`` kernels explicitly (for tests and benchmarks)."""
    if name == "python":
        return _pure
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError("unknown backend %r" % name)
