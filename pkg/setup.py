"""Builds the optional compiled word kernel; the package works without it."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ANICK_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("anick._wordops", ["src/anick/_wordops.pyx"],
                       optional=True)],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
