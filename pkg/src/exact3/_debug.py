"""Toggle for per-operation exactness assertions.

The assertions re-verify the preservation guarantees of every synthesis
operation with a full connectivity check, which costs one max-flow per
vertex.  They are off unless ``EXACT3_DEBUG_ASSERT=1`` is set or
:func:`set_debug` / :func:`debug_assertions` turn them on.
"""

from __future__ import annotations

import contextlib
import os

_enabled = os.environ.get("EXACT3_DEBUG_ASSERT", "") not in ("", "0")


def debug_enabled() -> bool:
    return _enabled


def set_debug(flag: bool) -> None:
    global _enabled
    _enabled = bool(flag)


@contextlib.contextmanager
def debug_assertions(flag: bool = True):
    global _enabled
    saved = _enabled
    _enabled = bool(flag)
    try:
        yield
    finally:
        _enabled = saved
