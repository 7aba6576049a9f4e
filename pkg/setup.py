"""Builds the optional compiled kernel; the package works without it."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(["src/scrolldiv/_kernels.pyx"], quiet=True)

setup(ext_modules=ext_modules)
