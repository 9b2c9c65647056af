"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
fallback.  Setting KNESERDISC_PURE=1 forces the fallback, which is useful
for benchmarking and for exercising both paths in tests.
"""

import os

from . import _pykernels

if os.environ.get("KNESERDISC_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

exhaustive_min_max = _impl.exhaustive_min_max
assign_labels = _impl.assign_labels
low_intersection_pairs = _impl.low_intersection_pairs
signed_low_pairs = _impl.signed_low_pairs
