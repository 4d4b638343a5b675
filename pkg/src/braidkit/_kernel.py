"""Kernel backend selection.

The compiled kernels in ``braidkit._speedups`` are preferred when the
extension built; otherwise the pure-Python twins in ``braidkit._native``
take over transparently. Set ``BRAIDKIT_PURE=1`` in the environment to
force the pure backend (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _native

if os.environ.get("BRAIDKIT_PURE"):
    _impl = _native
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _native

normalize = _impl.normalize
multiply = _impl.multiply
conjugate_by_simple = _impl.conjugate_by_simple
conjugate_batch = _impl.conjugate_batch


def backend_name() -> str:
    """``"c"`` when the compiled extension is active, else ``"python"``."""
    return _impl.BACKEND
