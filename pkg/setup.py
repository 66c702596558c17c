"""Build hooks for the optional compiled kernel.

The package is fully functional without the extension; _backend falls back to
the pure-Python kernels when laminarmatroids._kernels is absent.
"""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and os.path.exists("src/laminarmatroids/_kernels.pyx"):
    ext_modules = cythonize(
        [
            Extension(
                "laminarmatroids._kernels",
                ["src/laminarmatroids/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
