"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
twin is selected at import time), so any compilation problem downgrades
to a pure install instead of failing.  Set RAMLOCI_NO_EXT=1 to skip the
extension on purpose.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RAMLOCI_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/ramloci/_kernels/_cykernels.pyx"], language_level="3"
        )
    except Exception as exc:  # missing cython / compiler: fall back to pure
        print(f"ramloci: skipping compiled kernels ({exc})")

setup(ext_modules=ext_modules)
