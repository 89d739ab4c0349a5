"""Training kernels with a compiled fast path and a pure numpy fallback.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``WEBCRED_PURE_KERNELS=1`` forces the fallback, which
is useful for benchmarking and for debugging suspected kernel issues.
``ACTIVE_IMPL`` records which path is in use ("compiled" or "pure").
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("WEBCRED_PURE_KERNELS") == "1":
    _impl = pure
    ACTIVE_IMPL = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        ACTIVE_IMPL = "compiled"
    except ImportError:
        _impl = pure
        ACTIVE_IMPL = "pure"

svm_fit = _impl.svm_fit
node_best_split = _impl.node_best_split

__all__ = ["ACTIVE_IMPL", "node_best_split", "pure", "svm_fit"]
