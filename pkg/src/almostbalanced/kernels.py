"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Setting ``ALMOSTBALANCED_PURE=1`` forces the fallback.
"""
import os

BACKEND = "python"

if os.environ.get("ALMOSTBALANCED_PURE", "") not in ("", "0"):
    from ._kernels_py import count_vectors, cumulative, map_interval, shortest_digits, walk
else:
    try:
        from ._kernels import count_vectors, cumulative, map_interval, shortest_digits, walk

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import count_vectors, cumulative, map_interval, shortest_digits, walk

__all__ = ["BACKEND", "count_vectors", "cumulative", "map_interval", "shortest_digits", "walk"]
