import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure
# Python implementations in spancomplex.kernels.pyref when the extension
# is absent.  Set SPANCOMPLEX_NO_EXT=1 to skip building it.
ext_modules = []
if not os.environ.get("SPANCOMPLEX_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "spancomplex.kernels._corex",
                    ["src/spancomplex/kernels/_corex.pyx"],
                    include_dirs=[numpy.get_include()],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
