"""Builds the optional Cython kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CLUSTERK0_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("clusterk0._enum_cy", ["src/clusterk0/_enum_cy.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
