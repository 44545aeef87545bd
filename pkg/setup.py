"""Build script: compiles the optional C kernel.

The package works without the extension (a pure-Python kernel with the
same interface is selected at import time), so any build failure here
degrades to a source-only install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("qgen._kernel_c", ["src/qgen/_kernel_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
