"""Extension build: the compiled eliminator kernel is optional.

Without Cython (or a C compiler) the package installs pure-Python and
selects the fallback kernel at import time.  Build in place with

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("levitanaka._speedups", ["src/levitanaka/_speedups.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
