"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
``IDEALPOW_BACKEND=pure`` to force the pure-Python kernel.  The compiled
path works on int64 arrays, so inputs whose degree sums could overflow a
C long long are routed to the pure kernel regardless.
"""

import os

from . import _kernels_py

try:
    from . import _kernels
except ImportError:
    _kernels = None

_FORCE_PURE = os.environ.get("IDEALPOW_BACKEND", "").lower() == "pure"

HAVE_COMPILED = _kernels is not None
BACKEND = "compiled" if (HAVE_COMPILED and not _FORCE_PURE) else "pure"

_C_SAFE_ENTRY = 2**62


def minimal_indices(vecs):
    """Dispatch to the active kernel; see ``_kernels_py.minimal_indices``."""
    if BACKEND == "compiled" and vecs:
        n = len(vecs[0])
        if max(max(v) for v in vecs) <= _C_SAFE_ENTRY // max(n, 1):
            return _kernels.minimal_indices(vecs)
    return _kernels_py.minimal_indices(vecs)
