"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
FLEXIRANK_KERNELS=python (or =native) to force a backend. The selected
module exposes hits_kernel, fcm_kernel and mlp_kernel with identical
signatures.
"""

import os

from . import pybackend

_forced = os.environ.get("FLEXIRANK_KERNELS", "").strip().lower()

if _forced == "python":
    backend = pybackend
else:
    try:
        from . import _native as backend  # type: ignore[no-redef]
    except ImportError:
        if _forced == "native":
            raise ImportError(
                "FLEXIRANK_KERNELS=native but the compiled extension is not "
                "available; rebuild with `pip install -e . --no-build-isolation`"
            )
        backend = pybackend

BACKEND_NAME = backend.NAME

hits_kernel = backend.hits_kernel
fcm_kernel = backend.fcm_kernel
mlp_kernel = backend.mlp_kernel
