"""Build the optional compiled kernels.

Without Cython (or a C compiler) the package still installs and falls back
to the pure-Python kernels at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("nbif.exactmath._kernels", ["src/nbif/exactmath/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
