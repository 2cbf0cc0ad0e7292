import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package installs anyway and falls back to the pure-Python kernels.
ext_modules = []
if not os.environ.get("SPPOLY_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sppoly._fastkernels",
                    ["src/sppoly/_fastkernels.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
