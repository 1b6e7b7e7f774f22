"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the package still installs and
falls back to the pure-numpy kernels at import time.
"""

import warnings

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ellres._kernels", ["src/ellres/_kernels.pyx"])],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - environment dependent
    warnings.warn(f"building ellres without compiled kernels: {exc}")

setup(ext_modules=ext_modules)
