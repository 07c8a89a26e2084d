"""Numeric kernel backend selection.

The hot inner loops (segment-angle sums, origin clearance of polylines,
phase unwrapping) exist twice: a numba-jitted version and a pure-numpy
fallback.  The jitted backend is used when numba imports cleanly; set
``ABFLAT_DISABLE_NUMBA=1`` to force the numpy path.  Both backends are
exercised by the test suite and compared by ``benchmarks/bench_kernels.py``.
"""

import os

from . import _numpy

_disable = os.environ.get("ABFLAT_DISABLE_NUMBA", "").strip().lower()
if _disable in ("1", "true", "yes"):
    _impl = _numpy
    BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError:
        _impl = _numpy
        BACKEND = "numpy"

segment_angles = _impl.segment_angles
origin_segment_distances = _impl.origin_segment_distances
phase_steps_stats = _impl.phase_steps_stats

__all__ = [
    "BACKEND",
    "segment_angles",
    "origin_segment_distances",
    "phase_steps_stats",
]
