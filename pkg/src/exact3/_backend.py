"""Select the kernel implementation at import time.

The compiled extension is used when it was built; ``EXACT3_PURE_PYTHON=1``
forces the pure-Python twin.  Both expose ``canon``, ``max_flow``,
``flow_tree`` and ``min_cut_masks`` with identical semantics.
"""

from __future__ import annotations

import os

from . import _kernels_py

python_kernels = _kernels_py

try:
    from . import _kernels as compiled_kernels  # type: ignore[attr-defined]
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and os.environ.get("EXACT3_PURE_PYTHON", "") in ("", "0"):
    kernels = compiled_kernels
else:
    kernels = python_kernels

BACKEND = kernels.BACKEND


def available() -> dict[str, object]:
    out: dict[str, object] = {"python": python_kernels}
    if compiled_kernels is not None:
        out["compiled"] = compiled_kernels
    return out
