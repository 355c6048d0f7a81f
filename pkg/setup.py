"""Build script: compiles the optional Cython kernel extension.

The extension is a speedup only; if compilation fails (no compiler, no
Cython) the install still succeeds and flexirank.kernels falls back to
the NumPy backend at import time.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "flexirank.kernels._native",
                ["src/flexirank/kernels/_native.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError as exc:
    sys.stderr.write(f"flexirank: skipping native kernels ({exc}); using NumPy backend\n")

setup(ext_modules=ext_modules)
