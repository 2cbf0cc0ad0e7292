"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
twin. Set SPPOLY_PURE=1 to force the fallback (useful for benchmarking and
for debugging suspected extension issues).
"""

import os

if os.environ.get("SPPOLY_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _fastkernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
conv = _impl.conv
divmod_dense = _impl.divmod_dense
eval_complex_many = _impl.eval_complex_many
