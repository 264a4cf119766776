import os

from setuptools import setup

ext_modules = []
if not os.environ.get("FPOLY_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/fpoly/_modp_c.pyx"],
            language_level=3,
            compiler_directives={"boundscheck": False, "wraparound": False},
        )
    except ImportError:
        # Pure-Python fallback kernels are always available.
        pass

setup(ext_modules=ext_modules)
