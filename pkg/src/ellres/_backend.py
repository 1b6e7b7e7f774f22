"""Kernel backend selection.

The compiled Cython extension is preferred; the pure-numpy twin is used when
it is missing.  ``ELLRES_BACKEND=python`` or ``ELLRES_BACKEND=compiled``
forces a choice (the latter raises if the extension did not build).
"""

import os

_requested = os.environ.get("ELLRES_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
elif _requested in ("", "compiled", "c"):
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested:
            raise
        from . import _kernels_py as _impl

        BACKEND = "python"
else:
    raise RuntimeError(f"unknown ELLRES_BACKEND value: {_requested!r}")

mul = _impl.mul
inv = _impl.inv
phi = _impl.phi
eval_at = _impl.eval_at
