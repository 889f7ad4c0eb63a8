"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension is optional: if it was not built (or the
``RAMLOCI_PURE`` environment variable is set to a non-empty value) the
pure-Python twin is used.  Both expose the same functions and produce
identical results; ``benchmarks/bench_kernels.py`` compares them.
"""

import os

from . import _pykernels

if os.environ.get("RAMLOCI_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _cykernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
convolve = _impl.convolve


def available_backends():
    """Names of the kernel backends importable in this environment."""
    names = ["pure"]
    try:
        from . import _cykernels  # noqa: F401
    except ImportError:
        pass
    else:
        names.append("cython")
    return names
