"""Hot-loop kernels with backend selection at import time.

The compiled Cython core (funcnet._kernels) is preferred when built; the
pure NumPy/Python twin (funcnet.kernels.pure) is the fallback. Set
FUNCNET_KERNELS=python or FUNCNET_KERNELS=compiled to force a backend.
"""

import os

from . import pure as _pure

try:
    from .. import _kernels as _compiled
except ImportError:
    _compiled = None

_forced = os.environ.get("FUNCNET_KERNELS", "").strip().lower()
if _forced == "python":
    _impl = _pure
elif _forced == "compiled":
    if _compiled is None:
        raise ImportError(
            "FUNCNET_KERNELS=compiled but the funcnet._kernels extension is not built; "
            "run `pip install -e . --no-build-isolation` or unset FUNCNET_KERNELS"
        )
    _impl = _compiled
elif _forced:
    raise ImportError(f"unknown FUNCNET_KERNELS value {_forced!r}")
else:
    _impl = _compiled if _compiled is not None else _pure

BACKEND = "compiled" if _impl is not _pure else "python"

kruskal_scan = _impl.kruskal_scan
bfs_distance_sums = _impl.bfs_distance_sums
triangle_counts = _impl.triangle_counts
enumerate_triangles = _impl.enumerate_triangles
reduce_d2 = _impl.reduce_d2


def available_backends() -> dict:
    """Name -> module for every backend importable in this environment."""
    out = {"python": _pure}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
