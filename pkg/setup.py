"""Build script: compiles the optional blade-kernel extension when Cython
is available.  The package is fully functional without it (a pure-Python
fallback is selected at import time), so any build failure here is
non-fatal by design: set CLIFFSIG_PURE_PYTHON=1 to skip the extension.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CLIFFSIG_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cliffsig._kernels", ["src/cliffsig/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
