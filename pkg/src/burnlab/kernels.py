"""Kernel backend selection.

The compiled extension (`burnlab._speedups`, Cython) and the pure-Python
twin (`burnlab._pykernels`) expose the same five functions; whichever is
importable wins, compiled first.  Set BURNLAB_KERNELS=python|compiled to
force a backend (forcing `compiled` raises if the extension is missing).
"""

from __future__ import annotations

import os

_choice = os.environ.get("BURNLAB_KERNELS", "").strip().lower()

if _choice in ("py", "python", "pure"):
    from . import _pykernels as _impl

    BACKEND = "python"
elif _choice in ("c", "compiled", "speedups"):
    from . import _speedups as _impl  # type: ignore[attr-defined]

    BACKEND = "compiled"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

prepare = _impl.prepare
bfs = _impl.bfs
ball_mark = _impl.ball_mark
spread = _impl.spread
peel_rounds = _impl.peel_rounds


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
