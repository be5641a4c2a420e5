"""Build script for the optional compiled kernels.

The Cython extension is built when Cython and a C compiler are available.
Without it the package still works through ``ncpenrose._kernels_py``.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("NCPENROSE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("ncpenrose._kernels", ["src/ncpenrose/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3", "boundscheck": False,
                                 "wraparound": False},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
