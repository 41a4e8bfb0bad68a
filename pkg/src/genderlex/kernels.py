"""Kernel backend selection.

The compiled extension is used when importable; set ``GENDERLEX_PURE=1`` to
force the pure-Python kernels (useful for debugging and benchmarking).
"""

import os

from . import _pykernels

if os.environ.get("GENDERLEX_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

word_spans = _impl.word_spans
grapheme_spans = _impl.grapheme_spans
grapheme_count = _impl.grapheme_count
scan_tokens = _impl.scan_tokens


def get_backend(name: str = "auto"):
    """Resolve a backend module by name: auto, python, or c."""
    if name == "auto":
        return _impl
    if name == "python":
        return _pykernels
    if name == "c":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown kernel backend: {name!r}")
