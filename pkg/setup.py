import os

from setuptools import setup

# The compiled kernel module is optional: without it the package falls back
# to the pure-Python kernels at import time.  Set RIGMAT_PURE_BUILD=1 to
# skip compilation entirely.
ext_modules = []
if not os.environ.get("RIGMAT_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/rigmat/_kernels/_ckern.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
