"""Builds the optional compiled scanning kernel.

The package is fully functional without it: ``keyscan.scanning`` falls
back to the pure-Python kernel when the extension is missing.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("keyscan._scankernel", ["src/keyscan/_scankernel.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
